"""
Immaculate Hecke Toolkit - Generating Function Service
Content-monomial sums over semistandard fillings under row/column regimes
"""
import logging
from typing import Dict, List, Optional, Tuple

from sympy import Poly

from app.models import (
    Composition, FillingRegime, Strictness, ColumnScope,
    DescentVariant, TableauClass, GenfunReport, GenfunComparison
)
from app.services.qsym_service import qsym_service, make_poly
from app.utils import timed

logger = logging.getLogger(__name__)

STRICT, WEAK = Strictness.STRICT, Strictness.WEAK
FIRST, ALL = ColumnScope.FIRST_COLUMN, ColumnScope.ALL_COLUMNS

# each regime with the characteristic it specializes to
REGIMES: List[Tuple[FillingRegime, DescentVariant, TableauClass]] = [
    (FillingRegime(row_mode=WEAK, col_scope=FIRST, col_mode=STRICT), DescentVariant.DUAL_IMM, TableauClass.SIT),
    (FillingRegime(row_mode=STRICT, col_scope=FIRST, col_mode=WEAK), DescentVariant.ROW_STRICT, TableauClass.SIT),
    (FillingRegime(row_mode=WEAK, col_scope=ALL, col_mode=STRICT), DescentVariant.DUAL_IMM, TableauClass.SET),
    (FillingRegime(row_mode=STRICT, col_scope=ALL, col_mode=WEAK), DescentVariant.ROW_STRICT, TableauClass.SET),
    (FillingRegime(row_mode=WEAK, col_scope=FIRST, col_mode=WEAK), DescentVariant.A, TableauClass.SIT),
    (FillingRegime(row_mode=STRICT, col_scope=FIRST, col_mode=STRICT), DescentVariant.ABAR, TableauClass.SIT),
    (FillingRegime(row_mode=WEAK, col_scope=ALL, col_mode=WEAK), DescentVariant.A, TableauClass.SET),
    (FillingRegime(row_mode=STRICT, col_scope=ALL, col_mode=STRICT), DescentVariant.ABAR, TableauClass.SET),
    (FillingRegime(row_mode=STRICT, col_scope=FIRST, col_mode=WEAK, negated_columns=True),
     DescentVariant.ROW_STRICT, TableauClass.NSET),
]


class GenfunService:
    """Semistandard fillings of composition diagrams"""

    def __init__(self, qsym=None):
        self.qsym = qsym or qsym_service

    def _cells(self, alpha: Composition) -> List[Tuple[int, int]]:
        """Cells in column-major order, each column bottom to top"""
        return [
            (r, c)
            for c in range(max(alpha.parts))
            for r, length in enumerate(alpha.parts)
            if length > c
        ]

    def fillings(self, alpha: Composition, m: int, regime: FillingRegime):
        """Yield every filling as a dict cell -> value"""
        cells = self._cells(alpha)
        below: Dict[Tuple[int, int], Optional[Tuple[int, int]]] = {}
        last_in_column = {}
        for cell in cells:
            below[cell] = last_in_column.get(cell[1])
            last_in_column[cell[1]] = cell

        row_step = 1 if regime.row_mode == STRICT else 0
        col_step = 1 if regime.col_mode == STRICT else 0
        filling = {}

        def columns_all_weak():
            return all(
                filling[cell] >= filling[below[cell]]
                for cell in cells if below[cell] is not None
            )

        def place(k):
            if k == len(cells):
                if regime.negated_columns and columns_all_weak():
                    return
                yield dict(filling)
                return
            r, c = cells[k]
            low = 1
            if c > 0:
                low = max(low, filling[(r, c - 1)] + row_step)
            lower = below[(r, c)]
            if lower is not None and (regime.col_scope == ALL or c == 0):
                low = max(low, filling[lower] + col_step)
            for value in range(low, m + 1):
                filling[(r, c)] = value
                yield from place(k + 1)
            filling.pop((r, c), None)

        yield from place(0)

    def generating_poly(self, alpha: Composition, m: int, regime: FillingRegime) -> Poly:
        terms: Dict[Tuple[int, ...], int] = {}
        count = 0
        for filling in self.fillings(alpha, m, regime):
            exponent = [0] * m
            for value in filling.values():
                exponent[value - 1] += 1
            key = tuple(exponent)
            terms[key] = terms.get(key, 0) + 1
            count += 1
        logger.debug(f"{count} fillings of {alpha} with m={m} under '{regime.name}'")
        return make_poly(terms, m)

    @timed('verify_genfun')
    def verify_genfun(self, alpha: Composition, m: Optional[int] = None) -> GenfunReport:
        m = self.qsym.variable_count(alpha, m)
        report = GenfunReport(shape=list(alpha.parts), m=m)
        for regime, variant, cls in REGIMES:
            lhs = self.generating_poly(alpha, m, regime)
            rhs = self.qsym.specialize(self.qsym.characteristic(alpha, variant, cls), m)
            holds = lhs == rhs
            if not holds:
                logger.warning(f"Regime '{regime.name}' disagrees with chr({variant.value}, {cls.value}) on {alpha}")
            report.comparisons.append(GenfunComparison(
                regime=regime.name, partner=f"{variant.value}:{cls.value}", holds=holds))
        return report


# Create service instance
genfun_service = GenfunService()
