"""
Immaculate Hecke Toolkit - Quasisymmetric Function Tests
"""
import pytest
from sympy import Poly

from app.models import (
    QSymElement, DescentVariant, TableauClass, IdentityTag, BasisFamily,
    IdentityError, ShapeError, EnumerationLimitError
)
from app.services.qsym_service import QSymService, variables, format_poly
from app.services.tableau_service import TableauService
from app.utils.helpers import hook_length_count
from tests.conftest import shape, compositions_up_to

RS, DI = DescentVariant.ROW_STRICT, DescentVariant.DUAL_IMM

WINDOWED = [
    IdentityTag.X_CHAR, IdentityTag.XY_QUOT, IdentityTag.ZY_QUOT,
    IdentityTag.BARA_SITSTAR, IdentityTag.A_QUOT, IdentityTag.ABAR_QUOT,
    IdentityTag.RDI_DIFF,
]

FULL_RANK = [BasisFamily.RS_DUAL_IMM, BasisFamily.DUAL_IMM, BasisFamily.EXT, BasisFamily.REXT]


def element(n, *parts):
    return QSymElement(n, {tuple(p): 1 for p in parts})


class TestQSymElement:
    """Test arithmetic and formatting in the fundamental basis"""

    def test_format_sorted(self):
        """Test terms print in composition order"""
        q = element(4, (2, 1, 1), (1, 2, 1), (1, 1, 2))
        assert str(q) == 'F[1,1,2] + F[1,2,1] + F[2,1,1]'

    def test_arithmetic(self):
        """Test sums, differences and zero"""
        a = element(3, (1, 2))
        b = element(3, (2, 1))
        assert str(a + a) == '2*F[1,2]'
        assert (a - a).is_zero
        assert str(a - b) == 'F[1,2] - F[2,1]'
        assert str(QSymElement(3, {})) == '0'

    def test_degree_checks(self):
        """Test mixed degrees are refused"""
        with pytest.raises(ShapeError):
            QSymElement(3, {(1, 1): 1})
        with pytest.raises(ShapeError):
            element(3, (3,)) + element(2, (2,))


class TestCharacteristics:
    """Test characteristic goldens"""

    def setup_method(self):
        self.qsym = QSymService()

    def test_fundamental_and_psi(self):
        """Test F and psi on single compositions"""
        assert str(self.qsym.fundamental(shape('2,1'))) == 'F[2,1]'
        assert self.qsym.psi(self.qsym.fundamental(shape('1,2'))) == self.qsym.fundamental(shape('2,1'))

    def test_row_strict_31(self):
        """Test the row-strict characteristic of (3,1)"""
        assert self.qsym.characteristic(shape('3,1'), RS) == element(4, (2, 1, 1), (1, 2, 1), (1, 1, 2))

    def test_a_31(self):
        """Test the A characteristic of (3,1)"""
        assert self.qsym.characteristic(shape('3,1'), DescentVariant.A) == element(4, (2, 2), (3, 1), (4,))

    def test_a_set_122(self):
        """Test the A characteristic of SET(1,2,2)"""
        result = self.qsym.characteristic(shape('1,2,2'), DescentVariant.A, TableauClass.SET)
        assert result == element(5, (5,), (3, 2))

    def test_abar_122(self):
        """Test the Abar characteristic of (1,2,2)"""
        result = self.qsym.characteristic(shape('1,2,2'), DescentVariant.ABAR)
        assert result == element(5, (1, 1, 1, 1, 1), (1, 1, 2, 1), (1, 1, 1, 2))

    def test_row_strict_nset(self):
        """Test the row-strict characteristic of NSET"""
        for text in ('1,2,2', '2,1,2'):
            result = self.qsym.characteristic(shape(text), RS, TableauClass.NSET)
            assert result == element(5, (3, 1, 1))

    def test_unique_tableau(self):
        """Test a shape with one tableau"""
        assert self.qsym.characteristic(shape('1,2'), DI) == element(3, (1, 2))
        assert self.qsym.characteristic(shape('1,2'), RS) == element(3, (2, 1))

    def test_hooks(self):
        """Test hooks have a single fundamental term under every variant"""
        for alpha in compositions_up_to(7):
            if not alpha.is_hook:
                continue
            n, ell = alpha.n, alpha.length
            assert self.qsym.characteristic(alpha, DI) == element(n, alpha.parts), alpha
            assert self.qsym.characteristic(alpha, RS) == element(n, (ell,) + (1,) * (n - ell)), alpha
            assert self.qsym.characteristic(alpha, DescentVariant.A) == element(n, (n,)), alpha
            assert self.qsym.characteristic(alpha, DescentVariant.ABAR) == element(n, (1,) * n), alpha

    def test_enumeration_limit(self):
        """Test the size limit holds even for cached characteristics"""
        qsym = QSymService(TableauService())
        qsym.characteristic(shape('2,3'), RS)
        qsym.tableaux.max_n = 4
        with pytest.raises(EnumerationLimitError):
            qsym.characteristic(shape('2,3'), RS)


class TestPolynomials:
    """Test specialization and symmetric polynomials"""

    def setup_method(self):
        self.qsym = QSymService()

    def test_specialize_21(self):
        """Test F[2,1] in two variables"""
        x1, x2 = variables(2)
        poly = self.qsym.specialize(element(3, (2, 1)), 2)
        assert poly == Poly(x1 ** 2 * x2, x1, x2, domain='ZZ')
        assert format_poly(poly) == 'x1^2*x2'

    def test_specialize_extremes(self):
        """Test F[n] and F[1^n] specialize to h and e"""
        for m in (2, 3, 4):
            assert self.qsym.specialize(element(3, (3,)), m) == self.qsym.h_poly(3, 1, m, m)
        assert self.qsym.specialize(element(3, (1, 1, 1)), 2).is_zero
        assert self.qsym.specialize(element(3, (1, 1, 1)), 4) == self.qsym.e_poly(3, 1, 4, 4)

    def test_schur(self):
        """Test s_21 in two variables"""
        x1, x2 = variables(2)
        expected = Poly(x1 ** 2 * x2 + x1 * x2 ** 2, x1, x2, domain='ZZ')
        assert self.qsym.schur_poly((2, 1), 2) == expected

    def test_schur_square_free_coefficient(self):
        """Test the square-free coefficient of a Schur polynomial counts Young tableaux"""
        for partition in ((2, 1), (3, 1), (2, 2)):
            n = sum(partition)
            poly = self.qsym.schur_poly(partition, n)
            assert poly.coeff_monomial((1,) * n) == hook_length_count(partition)

    def test_degree_zero_windows(self):
        """Test empty windows"""
        assert self.qsym.e_poly(0, 3, 4, 4) == self.qsym.one(4)
        assert self.qsym.h_poly(0, 1, 2, 4) == self.qsym.one(4)
        assert self.qsym.e_poly(3, 1, 2, 4).is_zero


class TestIdentities:
    """Test the polynomial identities"""

    def setup_method(self):
        self.qsym = QSymService()

    def test_ext_schur(self):
        """Test the extended Schur identity report"""
        report = self.qsym.identity_report(IdentityTag.EXT_SCHUR, shape('2,1'), 3)
        assert report.holds
        assert report.lhs == report.rhs

    def test_x_character(self):
        """Test the SIT* character on the running example"""
        assert self.qsym.verify_identity(IdentityTag.X_CHAR, shape('2,2,3'), 7)

    def test_a_quotient_hook(self):
        """Test the A quotient on a hook"""
        assert self.qsym.verify_identity(IdentityTag.A_QUOT, shape('1,1,4'), 6)

    @pytest.mark.parametrize('tag', WINDOWED)
    def test_windowed_identities(self, tag):
        """Test each windowed identity on every shape up to n = 6"""
        for alpha in compositions_up_to(6):
            assert self.qsym.verify_identity(tag, alpha), (tag, alpha)

    def test_psi_pairs(self):
        """Test the psi pairings on every shape up to n = 7"""
        for alpha in compositions_up_to(7):
            assert self.qsym.verify_identity(IdentityTag.PSI_PAIRS, alpha), alpha

    @pytest.mark.parametrize('tag', [IdentityTag.EXT_SCHUR, IdentityTag.REXT_SCHUR])
    def test_schur_identities(self, tag):
        """Test the Schur identities on every partition up to n = 6"""
        for alpha in compositions_up_to(6):
            if alpha.is_partition:
                assert self.qsym.verify_identity(tag, alpha, alpha.n), (tag, alpha)

    def test_schur_identities_need_partitions(self):
        """Test Schur identities refuse non-partitions"""
        with pytest.raises(IdentityError):
            self.qsym.identity_report(IdentityTag.REXT_SCHUR, shape('1,2'), 3)
        with pytest.raises(IdentityError):
            self.qsym.identity_report(IdentityTag.EXT_SCHUR, shape('1,2'), 3)

    def test_unknown_tag_and_small_m(self):
        """Test unknown tags and too few variables are refused"""
        with pytest.raises(IdentityError):
            self.qsym.identity_report('NOT_A_TAG', shape('2,1'), 3)
        with pytest.raises(IdentityError):
            self.qsym.identity_report(IdentityTag.X_CHAR, shape('2,2'), 3)

    def test_default_variable_count(self):
        """Test the variable count defaults to n unless configured"""
        report = self.qsym.identity_report(IdentityTag.X_CHAR, shape('2,1'))
        assert report.m == 3
        self.qsym.default_m = 5
        assert self.qsym.identity_report(IdentityTag.X_CHAR, shape('2,1')).m == 5


class TestBases:
    """Test rank of characteristic families"""

    def setup_method(self):
        self.qsym = QSymService()

    def test_row_strict_basis(self):
        """Test the rank report at n = 4"""
        report = self.qsym.basis_report(BasisFamily.RS_DUAL_IMM, 4)
        assert report.rank == 8
        assert report.full_rank

    @pytest.mark.parametrize('family', FULL_RANK)
    def test_full_rank_families(self, family):
        """Test each basis family has full rank up to n = 7"""
        for n in range(1, 8):
            report = self.qsym.basis_report(family, n)
            assert report.rank == 2 ** (n - 1), (family, n)

    def test_x_family_not_a_basis(self):
        """Test SIT* characteristics are not independent"""
        assert not self.qsym.check_basis(BasisFamily.X_SUBMODULE, 3)
        assert (self.qsym.characteristic(shape('1,2'), DI, TableauClass.SITSTAR)
                == self.qsym.characteristic(shape('2,1'), DI, TableauClass.SITSTAR))
