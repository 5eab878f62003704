"""
Immaculate Hecke Toolkit - Hecke Service
0-Hecke actions on standard immaculate tableaux and straightening words
"""
import logging
from typing import Dict, List, Optional, Tuple

from app.models import (
    Composition, Tableau, HeckeWord, ActionResult, ActionOutcome,
    DescentVariant, SpecialKind, TableauClass,
    WordError, StraighteningError, ClassificationError
)
from app.services.tableau_service import tableau_service, ABOVE, BELOW, SAME_ROW

logger = logging.getLogger(__name__)

# tableau class each straightening target requires of its input
TARGET_CLASS = {
    SpecialKind.S0: TableauClass.SIT,
    SpecialKind.SROW: TableauClass.SIT,
    SpecialKind.SCOL: TableauClass.SET,
    SpecialKind.SROWSTAR: TableauClass.SITSTAR,
}


class HeckeService:
    """Generators pi_i of H_n(0) acting on SIT(alpha)"""

    def __init__(self, tableaux=None):
        self.tableaux = tableaux or tableau_service

    # ==========================================
    # ACTIONS
    # ==========================================

    def apply_pi(self, variant: DescentVariant, i: int, tableau: Tableau) -> ActionResult:
        n = tableau.n
        if i < 1 or i > n - 1:
            raise WordError(f"Generator index {i} is outside 1..{n - 1}")

        where, both_first = self.tableaux.placement(tableau, i)
        variant = DescentVariant(variant)

        if variant == DescentVariant.ROW_STRICT:
            if where == ABOVE:
                return ActionResult.fixed(tableau)
            if where == SAME_ROW:
                return ActionResult.zero()
            return ActionResult.swapped(tableau.swap(i))

        if variant == DescentVariant.DUAL_IMM:
            if where in (SAME_ROW, BELOW):
                return ActionResult.fixed(tableau)
            if both_first:
                return ActionResult.zero()
            return ActionResult.swapped(tableau.swap(i))

        if variant == DescentVariant.A:
            if where == BELOW:
                return ActionResult.swapped(tableau.swap(i))
            return ActionResult.fixed(tableau)

        # ABAR
        if where == BELOW:
            return ActionResult.fixed(tableau)
        if where == SAME_ROW or both_first:
            return ActionResult.zero()
        return ActionResult.swapped(tableau.swap(i))

    def apply_word(self, variant: DescentVariant, word: HeckeWord, tableau: Tableau) -> ActionResult:
        """Apply pi_{i_1} ... pi_{i_m}, rightmost generator first; Zero absorbs"""
        word.check_range(tableau.n)
        current = tableau
        moved = False
        for i in reversed(word.indices):
            result = self.apply_pi(variant, i, current)
            if result.is_zero:
                return result
            if result.outcome == ActionOutcome.SWAPPED:
                moved = True
            current = result.tableau
        if moved and current != tableau:
            return ActionResult.swapped(current)
        return ActionResult.fixed(current)

    def action_table(self, variant: DescentVariant,
                     basis: List[Tableau]) -> Dict[int, List[Optional[Tableau]]]:
        """For each generator i, the image of every basis element (None for zero)"""
        if not basis:
            return {}
        n = basis[0].n
        table = {}
        for i in range(1, n):
            images = []
            for tableau in basis:
                result = self.apply_pi(variant, i, tableau)
                images.append(None if result.is_zero else result.tableau)
            table[i] = images
        return table

    # ==========================================
    # RELATIONS
    # ==========================================

    def verify_hecke_relations(self, variant: DescentVariant, alpha: Composition) -> bool:
        """pi_i^2 = pi_i, distant commutation and the braid relation on the span of SIT(alpha)"""
        basis = self.tableaux.standard_immaculate(alpha)
        n = alpha.n
        index = {t: k for k, t in enumerate(basis)}
        table = self.action_table(variant, basis)

        def act(i, k):
            if k is None:
                return None
            image = table[i][k]
            return None if image is None else index[image]

        def word(k, *gens):
            for i in reversed(gens):
                k = act(i, k)
            return k

        for k in range(len(basis)):
            for i in range(1, n):
                if word(k, i, i) != word(k, i):
                    logger.warning(f"pi_{i}^2 != pi_{i} on {basis[k]} ({variant.value})")
                    return False
                for j in range(i + 2, n):
                    if word(k, i, j) != word(k, j, i):
                        logger.warning(f"pi_{i} pi_{j} != pi_{j} pi_{i} on {basis[k]} ({variant.value})")
                        return False
                if i + 1 < n and word(k, i, i + 1, i) != word(k, i + 1, i, i + 1):
                    logger.warning(f"Braid relation fails at {i} on {basis[k]} ({variant.value})")
                    return False
        return True

    def swapped_pairs(self, variant: DescentVariant, alpha: Composition) -> set:
        """All (S, T, i) with pi_i(S) = T != S"""
        pairs = set()
        for tableau in self.tableaux.standard_immaculate(alpha):
            for i in range(1, alpha.n):
                result = self.apply_pi(variant, i, tableau)
                if result.outcome == ActionOutcome.SWAPPED:
                    pairs.add((tableau, result.tableau, i))
        return pairs

    def check_adjointness(self, alpha: Composition) -> bool:
        """Row-strict swaps S -> T are exactly the reversed dual immaculate swaps T -> S"""
        rs = self.swapped_pairs(DescentVariant.ROW_STRICT, alpha)
        di = self.swapped_pairs(DescentVariant.DUAL_IMM, alpha)
        return rs == {(t, s, i) for s, t, i in di}

    def check_cover_uniqueness(self, alpha: Composition) -> bool:
        for tableau in self.tableaux.standard_immaculate(alpha):
            images = [
                self.apply_pi(DescentVariant.ROW_STRICT, i, tableau)
                for i in range(1, alpha.n)
            ]
            swapped = [r.tableau for r in images if r.outcome == ActionOutcome.SWAPPED]
            if len(swapped) != len(set(swapped)):
                return False
        return True

    # ==========================================
    # STRAIGHTENING
    # ==========================================

    def _cover(self, lower: Tableau, i: int, upper: Tableau, keep: Optional[TableauClass] = None):
        """Check that pi_i takes lower to upper as a row-strict cover"""
        result = self.apply_pi(DescentVariant.ROW_STRICT, i, lower)
        if result.outcome != ActionOutcome.SWAPPED or result.tableau != upper:
            raise StraighteningError(
                f"pi_{i} does not take {lower} to {upper} ({result.outcome.value})"
            )
        if self.tableaux.inversions(upper) != self.tableaux.inversions(lower) + 1:
            raise StraighteningError(f"Step pi_{i} from {lower} does not raise ninv by one")
        if keep is not None:
            for step in (lower, upper):
                if not self.tableaux.in_class(step, keep):
                    raise StraighteningError(f"Intermediate tableau {step} leaves {keep.value}")

    def straighten(self, tableau: Tableau, target: SpecialKind) -> HeckeWord:
        target = SpecialKind(target)
        required = TARGET_CLASS[target]
        if not self.tableaux.in_class(tableau, required):
            raise ClassificationError(
                f"Straightening to {target.value} needs a tableau in {required.value}, got {tableau}"
            )

        if target == SpecialKind.S0:
            word = self._down_to_bottom(tableau)
        elif target == SpecialKind.SCOL:
            word = self._down_to_column(tableau)
        else:
            word = self._up_to_top(tableau, target)

        logger.debug(f"straighten({tableau}, {target.value}) = {word}")
        return word

    def _down_to_bottom(self, tableau: Tableau) -> HeckeWord:
        """Walk back from tableau to S0: column 1 from the bottom, then rows from the top"""
        alpha = tableau.shape
        bottom = self.tableaux.special(alpha, SpecialKind.S0)
        found = []
        current = tableau

        def step_back(x):
            nonlocal current
            previous = current.swap(x - 1)
            self._cover(previous, x - 1, current)
            found.append(x - 1)
            current = previous

        for j in range(2, alpha.length + 1):
            while current.entry(j, 1) != j:
                step_back(current.entry(j, 1))

        for r in range(alpha.length, 0, -1):
            while current.rows[r - 1] != bottom.rows[r - 1]:
                mismatched = [
                    v for v, w in zip(current.rows[r - 1], bottom.rows[r - 1]) if v != w
                ]
                step_back(min(mismatched))

        return HeckeWord(tuple(found))

    def _down_to_column(self, tableau: Tableau) -> HeckeWord:
        """Walk back from tableau to Scol, staying inside SET"""
        alpha = tableau.shape
        column = self.tableaux.special(alpha, SpecialKind.SCOL)
        target_cell = column.positions
        found = []
        current = tableau

        while current != column:
            j = 0
            while j < alpha.n and current.position(j + 1) == target_cell[j + 1]:
                j += 1
            row, col = target_cell[j + 1]
            x = current.entry(row, col)
            previous = current.swap(x - 1)
            self._cover(previous, x - 1, current, keep=TableauClass.SET)
            found.append(x - 1)
            current = previous

        return HeckeWord(tuple(found))

    def _up_to_top(self, tableau: Tableau, target: SpecialKind) -> HeckeWord:
        """Climb from tableau to Srow (or Srowstar): rows from the top, largest mismatch first"""
        alpha = tableau.shape
        top = self.tableaux.special(alpha, target)
        keep = TableauClass.SITSTAR if target == SpecialKind.SROWSTAR else None
        found = []
        current = tableau

        while current != top:
            r = max(k for k in range(1, alpha.length + 1) if current.rows[k - 1] != top.rows[k - 1])
            mismatched = [v for v, w in zip(current.rows[r - 1], top.rows[r - 1]) if v != w]
            x = max(mismatched)
            following = current.swap(x)
            self._cover(current, x, following, keep=keep)
            found.append(x)
            current = following

        return HeckeWord(tuple(reversed(found)))

    def replay(self, tableau: Tableau, target: SpecialKind, word: HeckeWord) -> bool:
        """Check a straightening word against its contract"""
        target = SpecialKind(target)
        special = self.tableaux.special(tableau.shape, target)
        if target in (SpecialKind.S0, SpecialKind.SCOL):
            result = self.apply_word(DescentVariant.ROW_STRICT, word, special)
        else:
            result = self.apply_word(DescentVariant.ROW_STRICT, word, tableau)
            tableau = special
        return not result.is_zero and result.tableau == tableau


# Create service instance
hecke_service = HeckeService()
