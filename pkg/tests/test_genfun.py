"""
Immaculate Hecke Toolkit - Generating Function Tests
"""
import pytest
from sympy import Poly

from app.models import FillingRegime, Strictness, ColumnScope, ShapeError, TableauClass, DescentVariant
from app.services.genfun_service import GenfunService, REGIMES
from app.services.qsym_service import QSymService, variables
from tests.conftest import shape, compositions_up_to

STRICT, WEAK = Strictness.STRICT, Strictness.WEAK
FIRST, ALL = ColumnScope.FIRST_COLUMN, ColumnScope.ALL_COLUMNS


class TestFillings:
    """Test semistandard filling enumeration"""

    def setup_method(self):
        self.qsym = QSymService()
        self.genfun = GenfunService(self.qsym)

    def test_single_filling(self):
        """Test a shape with one filling"""
        x1, x2 = variables(2)
        regime = FillingRegime(row_mode=STRICT, col_scope=FIRST, col_mode=WEAK)
        fillings = list(self.genfun.fillings(shape('1,2'), 2, regime))
        assert len(fillings) == 1
        assert self.genfun.generating_poly(shape('1,2'), 2, regime) == Poly(x1 ** 2 * x2, x1, x2, domain='ZZ')

    def test_strict_column(self):
        """Test a strict single column gives e"""
        for col_scope in (FIRST, ALL):
            regime = FillingRegime(row_mode=STRICT, col_scope=col_scope, col_mode=STRICT)
            assert self.genfun.generating_poly(shape('1,1,1'), 4, regime) == self.qsym.e_poly(3, 1, 4, 4)

    def test_extended_schur(self):
        """Test weak rows with strict columns give a Schur polynomial"""
        regime = FillingRegime(row_mode=WEAK, col_scope=ALL, col_mode=STRICT)
        assert self.genfun.generating_poly(shape('2,1'), 3, regime) == self.qsym.schur_poly((2, 1), 3)

    def test_negated_regime_needs_row_strict_weak_first_column(self):
        """Test the negated regime refuses other row and column modes"""
        with pytest.raises(ShapeError):
            FillingRegime(row_mode=WEAK, col_scope=FIRST, col_mode=WEAK, negated_columns=True)

    def test_negated_regime(self):
        """Test the negated regime against the NSET characteristic"""
        regime = FillingRegime(row_mode=STRICT, col_scope=FIRST, col_mode=WEAK, negated_columns=True)
        expected = self.qsym.specialize(self.qsym.characteristic(shape('1,2,2'), DescentVariant.ROW_STRICT,
                                                                 TableauClass.NSET), 5)
        assert self.genfun.generating_poly(shape('1,2,2'), 5, regime) == expected


class TestVerifyGenfun:
    """Test all regimes against characteristics"""

    def setup_method(self):
        self.genfun = GenfunService(QSymService())

    def test_regime_table(self):
        """Test the nine regimes are distinct"""
        assert len(REGIMES) == 9
        assert len({regime.name for regime, _, _ in REGIMES}) == 9

    def test_all_regimes_agree(self):
        """Test every regime on every shape up to n = 6"""
        for alpha in compositions_up_to(6):
            report = self.genfun.verify_genfun(alpha)
            assert report.m == alpha.n
            assert len(report.comparisons) == 9
            assert report.ok, (alpha, [c.regime for c in report.comparisons if not c.holds])

    def test_more_variables(self):
        """Test more variables than cells"""
        assert self.genfun.verify_genfun(shape('2,1'), 4).ok
