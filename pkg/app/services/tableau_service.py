"""
Immaculate Hecke Toolkit - Tableau Service
Standard immaculate tableaux: enumeration, classes, special tableaux and descents
"""
import logging
from functools import lru_cache
from typing import List, Tuple

from app.models import (
    Composition, DescentSubset, Tableau, TableauClassFlags,
    TableauClass, SpecialKind, DescentVariant,
    ClassificationError, EnumerationLimitError
)
from app.utils.helpers import count_inversions, multinomial

logger = logging.getLogger(__name__)

ABOVE = 'above'
SAME_ROW = 'same_row'
BELOW = 'below'


@lru_cache(maxsize=256)
def _standard_immaculate(parts: Tuple[int, ...]) -> Tuple[Tableau, ...]:
    n = sum(parts)
    rows = [[] for _ in parts]
    found = []

    def place(value):
        if value > n:
            found.append(Tableau(tuple(tuple(row) for row in rows)))
            return
        for r, row in enumerate(rows):
            if len(row) == parts[r]:
                continue
            # a row can only start once the row below it has started
            if not row and r > 0 and not rows[r - 1]:
                continue
            row.append(value)
            place(value + 1)
            row.pop()

    place(1)
    found.sort(key=reading_word)
    logger.debug(f"SIT({','.join(map(str, parts))}) has {len(found)} tableaux")
    return tuple(found)


def reading_word(tableau: Tableau) -> Tuple[int, ...]:
    """Rows from top to bottom, each read right to left"""
    return tuple(v for row in reversed(tableau.rows) for v in reversed(row))


class TableauService:
    """Standard immaculate tableaux of a composition shape"""

    def __init__(self, app=None):
        self.max_n = 9
        if app:
            self.init_app(app)

    def init_app(self, app):
        """Initialize with Flask app config"""
        self.max_n = app.config.get('MAX_N', 9)

    def check_limit(self, alpha: Composition):
        if alpha.n > self.max_n:
            raise EnumerationLimitError(
                f"Shape {alpha} has n={alpha.n}, above the enumeration limit {self.max_n}"
            )

    # ==========================================
    # ENUMERATION
    # ==========================================

    def standard_immaculate(self, alpha: Composition) -> List[Tableau]:
        """All of SIT(alpha), sorted by reading word"""
        self.check_limit(alpha)
        return list(_standard_immaculate(alpha.parts))

    def enumerate_standard(self, alpha: Composition,
                           cls: TableauClass = TableauClass.SIT) -> List[Tableau]:
        cls = TableauClass(cls)
        return [t for t in self.standard_immaculate(alpha) if self.classify(t).matches(cls)]

    def sitstar_count(self, alpha: Composition) -> int:
        """Size of SIT*(alpha) by the multinomial formula"""
        return multinomial(alpha.n - alpha.length, [p - 1 for p in alpha.parts])

    # ==========================================
    # CLASSIFICATION
    # ==========================================

    def column_increases(self, tableau: Tableau, col: int) -> bool:
        entries = tableau.column(col)
        return all(a < b for a, b in zip(entries, entries[1:]))

    def classify(self, tableau: Tableau) -> TableauClassFlags:
        if not tableau.is_standard:
            raise ClassificationError(f"Tableau {tableau} is not standard")
        if not tableau.rows_increase:
            raise ClassificationError(f"Tableau {tableau} has a row that does not increase")

        is_sit = self.column_increases(tableau, 1)
        is_set = all(self.column_increases(tableau, c) for c in range(1, tableau.width + 1))
        is_sitstar = is_sit and tableau.first_column == list(range(1, tableau.shape.length + 1))
        return TableauClassFlags(
            is_sit=is_sit,
            is_set=is_set,
            is_sitstar=is_sitstar,
            in_nset=not is_set,
        )

    def in_class(self, tableau: Tableau, cls: TableauClass) -> bool:
        return self.classify(tableau).matches(cls)

    # ==========================================
    # SPECIAL TABLEAUX
    # ==========================================

    def special(self, alpha: Composition, kind: SpecialKind) -> Tableau:
        kind = SpecialKind(kind)
        ell = alpha.length
        rows = [[0] * p for p in alpha.parts]

        if kind == SpecialKind.SROW:
            value = 1
            for row in rows:
                for c in range(len(row)):
                    row[c] = value
                    value += 1
        elif kind == SpecialKind.SCOL:
            value = 1
            for c in range(max(alpha.parts)):
                for row in rows:
                    if len(row) > c:
                        row[c] = value
                        value += 1
        else:
            for r, row in enumerate(rows):
                row[0] = r + 1
            value = ell + 1
            order = reversed(rows) if kind == SpecialKind.S0 else rows
            for row in order:
                for c in range(1, len(row)):
                    row[c] = value
                    value += 1

        return Tableau(tuple(tuple(row) for row in rows))

    # ==========================================
    # DESCENTS AND STATISTICS
    # ==========================================

    def placement(self, tableau: Tableau, i: int) -> Tuple[str, bool]:
        """Where i+1 sits relative to i, and whether both are in column 1"""
        row_i, col_i = tableau.position(i)
        row_j, col_j = tableau.position(i + 1)
        if row_j > row_i:
            where = ABOVE
        elif row_j < row_i:
            where = BELOW
        else:
            where = SAME_ROW
        return where, col_i == 1 and col_j == 1

    def is_descent(self, tableau: Tableau, i: int, variant: DescentVariant) -> bool:
        where, _ = self.placement(tableau, i)
        variant = DescentVariant(variant)
        if variant == DescentVariant.DUAL_IMM:
            return where == ABOVE
        if variant == DescentVariant.ROW_STRICT:
            return where in (SAME_ROW, BELOW)
        if variant == DescentVariant.A:
            return where == BELOW
        return where in (SAME_ROW, ABOVE)

    def descent_set(self, tableau: Tableau, variant: DescentVariant) -> DescentSubset:
        n = tableau.n
        return DescentSubset(n, tuple(i for i in range(1, n) if self.is_descent(tableau, i, variant)))

    def reading_word(self, tableau: Tableau) -> Tuple[int, ...]:
        return reading_word(tableau)

    def ninv(self, word) -> int:
        return count_inversions(word)

    def inversions(self, tableau: Tableau) -> int:
        return count_inversions(reading_word(tableau))

    def check_descent_relations(self, alpha: Composition) -> bool:
        """Complement and inclusion relations among the four descent sets"""
        for tableau in self.standard_immaculate(alpha):
            di = self.descent_set(tableau, DescentVariant.DUAL_IMM)
            rs = self.descent_set(tableau, DescentVariant.ROW_STRICT)
            a = self.descent_set(tableau, DescentVariant.A)
            abar = self.descent_set(tableau, DescentVariant.ABAR)
            if di != rs.complement() or a != abar.complement():
                logger.warning(f"Complement relation fails on {tableau}")
                return False
            if not a.issubset(rs) or not di.issubset(abar):
                logger.warning(f"Inclusion relation fails on {tableau}")
                return False
        return True


# Create service instance
tableau_service = TableauService()
