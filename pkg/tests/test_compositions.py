"""
Immaculate Hecke Toolkit - Composition Tests
"""
import pytest

from app.models import Composition, DescentSubset, ShapeError, SubsetError
from app.services.composition_service import CompositionService
from app.utils.helpers import multinomial, count_inversions, hook_length_count, transpose
from app.utils.validators import Validator
from tests.conftest import shape


class TestCompositionService:
    """Test subset encodings of compositions"""

    def setup_method(self):
        self.service = CompositionService()

    def test_set_of(self):
        """Test compositions to descent subsets"""
        assert self.service.set_of(shape('1,2')) == DescentSubset(3, (1,))
        assert self.service.set_of(shape('5')) == DescentSubset(5, ())
        assert self.service.set_of(shape('2,2,3')) == DescentSubset(7, (2, 4))

    def test_comp_of(self):
        """Test descent subsets to compositions"""
        assert self.service.comp_of(DescentSubset(4, (2, 3))).parts == (2, 1, 1)
        assert self.service.comp_of(DescentSubset(5, ())).parts == (5,)
        assert self.service.comp_of(DescentSubset(5, (3, 4))).parts == (3, 1, 1)

    def test_comp_of_rejects_out_of_range(self):
        """Test out-of-range subsets are refused"""
        with pytest.raises(SubsetError):
            self.service.comp_of(DescentSubset(6, (2, 5)), 5)
        with pytest.raises(SubsetError):
            DescentSubset(4, (0,))

    def test_set_and_comp_are_inverse(self):
        """Test set_of and comp_of invert each other"""
        for alpha in self.service.enumerate_compositions(5):
            assert self.service.comp_of(self.service.set_of(alpha)) == alpha

    def test_complement(self):
        """Test complementary compositions"""
        assert self.service.complement(shape('1,2')).parts == (2, 1)
        assert self.service.complement(shape('1,1,1,1')).parts == (4,)
        assert self.service.complement(shape('2,2,3')).parts == (1, 2, 2, 1, 1)

    def test_refines(self):
        """Test refinement order"""
        assert self.service.refines(shape('1,1,2'), shape('2,2'))
        assert self.service.refines(shape('2,2'), shape('2,2'))
        assert not self.service.refines(shape('3,1'), shape('1,3'))

    def test_refines_degree_mismatch(self):
        """Test refinement across degrees is refused"""
        with pytest.raises(ShapeError):
            self.service.refines(shape('2,1'), shape('2,2'))

    def test_enumerate_compositions(self):
        """Test enumeration counts and order"""
        assert self.service.enumerate_compositions(1) == [Composition((1,))]
        assert len(self.service.enumerate_compositions(3)) == 4
        assert len(self.service.enumerate_compositions(7)) == 64
        listed = self.service.enumerate_compositions(4)
        assert listed == sorted(listed)

    def test_enumerate_rejects_nonpositive(self):
        """Test n below 1 is refused"""
        with pytest.raises(ShapeError):
            self.service.enumerate_compositions(0)


class TestCompositionModel:
    """Test parsing and derived shapes"""

    def test_parse(self):
        """Test parsing a shape"""
        alpha = Composition.parse('2,2,3')
        assert alpha.parts == (2, 2, 3)
        assert alpha.n == 7
        assert alpha.length == 3
        assert str(alpha) == '2,2,3'

    def test_parse_names_offending_token(self):
        """Test parse errors name the bad token"""
        with pytest.raises(ShapeError, match="'x'"):
            Composition.parse('2,x,3')
        with pytest.raises(ShapeError, match="'0'"):
            Composition.parse('2,0')

    def test_diminished(self):
        """Test the diminished composition"""
        assert shape('2,1,3').diminished == Composition((1, 2))
        assert shape('1,1').diminished is None

    def test_partition_and_hook(self):
        """Test partition and hook predicates"""
        assert shape('3,2,1').is_partition
        assert not shape('1,2').is_partition
        assert shape('1,1,4').is_hook
        assert not shape('2,1').is_hook

    def test_subset_parse(self):
        """Test parsing and printing subsets"""
        subset = DescentSubset.parse('{2,4}', 7)
        assert subset.elements == (2, 4)
        assert str(subset) == '{2,4}'
        assert str(DescentSubset.parse('{}', 3)) == '{}'
        assert subset.complement().elements == (1, 3, 5, 6)

    def test_subset_parse_requires_braces(self):
        """Test subsets need braces"""
        with pytest.raises(SubsetError):
            DescentSubset.parse('2,4', 7)


class TestHelpers:
    """Test combinatorial helpers"""

    def test_multinomial(self):
        """Test multinomial coefficients"""
        assert multinomial(4, [1, 1, 2]) == 12
        with pytest.raises(ValueError):
            multinomial(4, [1, 1])

    def test_count_inversions(self):
        """Test inversion counts"""
        assert count_inversions((5, 4, 2, 3, 1)) == 9
        assert count_inversions((1, 2, 3)) == 0

    def test_transpose_and_hooks(self):
        """Test conjugation and the hook length formula"""
        assert transpose((3, 1)) == (2, 1, 1)
        assert hook_length_count((2, 1)) == 2
        assert hook_length_count((3, 2)) == 5


class TestValidator:
    """Test text validation"""

    def test_validate_word(self):
        """Test word validation"""
        assert Validator.validate_word('4 3 5')[0]
        assert Validator.validate_word('')[0]
        is_valid, error = Validator.validate_word('4 -3')
        assert not is_valid
        assert "'-3'" in error

    def test_validate_variable_count(self):
        """Test variable count validation"""
        assert Validator.validate_variable_count(None)[0]
        assert Validator.validate_variable_count(5, 5)[0]
        assert not Validator.validate_variable_count(3, 5)[0]
        assert not Validator.validate_variable_count(0)[0]
