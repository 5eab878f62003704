"""
Immaculate Hecke Toolkit - Tableau Tests
"""
import logging

import pytest

from app.models import (
    Tableau, TableauClass, SpecialKind, DescentVariant, DescentSubset,
    ClassificationError, TableauError, EnumerationLimitError
)
from app.services.tableau_service import TableauService, _standard_immaculate
from app.utils.helpers import hook_length_count
from tests.conftest import shape, compositions_up_to

EXAMPLE = Tableau.parse('1,2,9;3,7;4,5,8,10;6')


class TestEnumeration:
    """Test enumeration of standard immaculate tableaux"""

    def setup_method(self):
        self.service = TableauService()

    def test_counts_for_223(self):
        """Test class sizes for the running example"""
        alpha = shape('2,2,3')
        assert len(self.service.enumerate_standard(alpha, TableauClass.SIT)) == 24
        assert len(self.service.enumerate_standard(alpha, TableauClass.SET)) == 5
        assert len(self.service.enumerate_standard(alpha, TableauClass.SITSTAR)) == 12

    def test_single_tableau(self):
        """Test a shape with one tableau"""
        assert [str(t) for t in self.service.standard_immaculate(shape('1,2'))] == ['1;2,3']

    def test_enumeration_is_sorted_and_standard(self):
        """Test enumeration order and standardness"""
        tableaux = self.service.standard_immaculate(shape('2,1,2'))
        words = [self.service.reading_word(t) for t in tableaux]
        assert words == sorted(words)
        for tableau in tableaux:
            assert tableau.is_standard
            assert self.service.classify(tableau).is_sit

    def test_sitstar_count_matches_formula(self):
        """Test SIT* sizes against the multinomial count"""
        for alpha in compositions_up_to(8):
            found = self.service.enumerate_standard(alpha, TableauClass.SITSTAR)
            assert len(found) == self.service.sitstar_count(alpha), alpha

    def test_set_of_partition_counts_young_tableaux(self):
        """Test SET sizes on partitions against the hook length formula"""
        for alpha in compositions_up_to(7):
            if not alpha.is_partition:
                continue
            found = self.service.enumerate_standard(alpha, TableauClass.SET)
            assert len(found) == hook_length_count(alpha.parts), alpha

    def test_enumeration_limit(self):
        """Test the size limit"""
        self.service.max_n = 4
        with pytest.raises(EnumerationLimitError):
            self.service.standard_immaculate(shape('2,3'))

    def test_count_logged_once_per_shape(self, caplog):
        """Test the count is logged when the cache fills, not on every call"""
        _standard_immaculate.cache_clear()
        with caplog.at_level(logging.DEBUG, logger='app.services.tableau_service'):
            self.service.standard_immaculate(shape('2,1,2'))
            self.service.standard_immaculate(shape('2,1,2'))
        messages = [r.getMessage() for r in caplog.records if 'has' in r.getMessage()]
        assert messages == ['SIT(2,1,2) has 4 tableaux']


class TestClassification:
    """Test tableau classes"""

    def setup_method(self):
        self.service = TableauService()

    def test_column_tableau_is_set_and_sitstar(self):
        """Test a column-filled tableau"""
        flags = self.service.classify(Tableau.parse('1,4;2,5;3,6,7'))
        assert flags.is_set and flags.is_sitstar
        assert not flags.in_nset

    def test_row_tableau_is_set_only(self):
        """Test a row-filled tableau"""
        flags = self.service.classify(Tableau.parse('1,2;3,4;5,6,7'))
        assert flags.is_set
        assert not flags.is_sitstar

    def test_bottom_tableau_is_in_nset(self):
        """Test a tableau outside SET"""
        flags = self.service.classify(Tableau.parse('1,7;2,6;3,4,5'))
        assert flags.is_sitstar
        assert flags.in_nset
        assert flags.matches(TableauClass.NSET_SITSTAR)

    def test_rejects_non_standard(self):
        """Test non-standard fillings are refused"""
        with pytest.raises(ClassificationError):
            self.service.classify(Tableau.parse('1,1;2'))
        with pytest.raises(ClassificationError):
            self.service.classify(Tableau.parse('2,1;3'))

    def test_parse_names_offending_token(self):
        """Test parse errors name the bad token"""
        with pytest.raises(TableauError, match="'b'"):
            Tableau.parse('1,2;3,b')


class TestSpecialTableaux:
    """Test S0, Srow, Scol and Srowstar"""

    def setup_method(self):
        self.service = TableauService()

    def test_bottom(self):
        """Test S0"""
        tableau = self.service.special(shape('4,3,4,2,3'), SpecialKind.S0)
        assert str(tableau) == '1,14,15,16;2,12,13;3,9,10,11;4,8;5,6,7'

    def test_row(self):
        """Test Srow"""
        tableau = self.service.special(shape('4,3,4,2,3'), SpecialKind.SROW)
        assert str(tableau) == '1,2,3,4;5,6,7;8,9,10,11;12,13;14,15,16'

    def test_row_star(self):
        """Test Srowstar"""
        assert str(self.service.special(shape('3,3,2'), SpecialKind.SROWSTAR)) == '1,4,5;2,6,7;3,8'

    def test_column(self):
        """Test Scol"""
        assert str(self.service.special(shape('2,3,2'), SpecialKind.SCOL)) == '1,4;2,5,7;3,6'

    def test_special_classes(self):
        """Test each special tableau lies in its class"""
        for alpha in compositions_up_to(6):
            special = {kind: self.service.special(alpha, kind) for kind in SpecialKind}
            assert self.service.in_class(special[SpecialKind.S0], TableauClass.SITSTAR), alpha
            assert self.service.in_class(special[SpecialKind.SROWSTAR], TableauClass.SITSTAR), alpha
            assert self.service.in_class(special[SpecialKind.SCOL], TableauClass.SET), alpha
            assert self.service.in_class(special[SpecialKind.SROW], TableauClass.SET), alpha
            assert self.service.in_class(special[SpecialKind.SROWSTAR], TableauClass.SET_SITSTAR), alpha

    def test_hooks_have_one_tableau(self):
        """Test hooks have a single tableau, equal to every special tableau"""
        for alpha in compositions_up_to(7):
            if not alpha.is_hook:
                continue
            tableaux = self.service.standard_immaculate(alpha)
            assert len(tableaux) == 1, alpha
            for kind in SpecialKind:
                assert self.service.special(alpha, kind) == tableaux[0], (alpha, kind)


class TestDescents:
    """Test the four descent variants"""

    def setup_method(self):
        self.service = TableauService()

    def test_example_descents(self):
        """Test all four descent sets of the running example"""
        assert self.service.descent_set(EXAMPLE, DescentVariant.ROW_STRICT).elements == (1, 4, 6, 8)
        assert self.service.descent_set(EXAMPLE, DescentVariant.DUAL_IMM).elements == (2, 3, 5, 7, 9)
        assert self.service.descent_set(EXAMPLE, DescentVariant.A).elements == (6, 8)
        assert self.service.descent_set(EXAMPLE, DescentVariant.ABAR).elements == (1, 2, 3, 4, 5, 7, 9)

    def test_row_tableau_descents(self):
        """Test Srow has no A descents and every Abar descent"""
        for alpha in compositions_up_to(5):
            top = self.service.special(alpha, SpecialKind.SROW)
            n = alpha.n
            assert self.service.descent_set(top, DescentVariant.A) == DescentSubset(n, ())
            assert self.service.descent_set(top, DescentVariant.ABAR) == DescentSubset(n, tuple(range(1, n)))

    def test_descent_relations(self):
        """Test the complement and union relations between variants"""
        for alpha in compositions_up_to(5):
            assert self.service.check_descent_relations(alpha)


class TestReadingWord:
    """Test reading words and inversions"""

    def setup_method(self):
        self.service = TableauService()

    def test_reading_word(self):
        """Test reading order and inversion count"""
        word = self.service.reading_word(Tableau.parse('1,3;2;4,5'))
        assert word == (5, 4, 2, 3, 1)
        assert self.service.ninv(word) == 9

    def test_row_tableau_reverses(self):
        """Test Srow reads as the reversed identity"""
        top = self.service.special(shape('2,2,3'), SpecialKind.SROW)
        assert self.service.reading_word(top) == (7, 6, 5, 4, 3, 2, 1)

    def test_bottom_tableau(self):
        """Test the reading word of S0"""
        bottom = self.service.special(shape('2,2,3'), SpecialKind.S0)
        assert self.service.reading_word(bottom) == (5, 4, 3, 6, 2, 7, 1)
        assert self.service.inversions(bottom) == 13
        assert self.service.ninv((1, 2, 3, 4)) == 0
