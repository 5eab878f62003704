"""
Immaculate Hecke Toolkit - Composition Service
Compositions, descent subsets, complements and refinement
"""
from itertools import combinations
from typing import List

from app.models import Composition, DescentSubset, ShapeError, SubsetError
from app.utils.helpers import subset_to_parts


class CompositionService:
    """Compositions of n and their subset encodings"""

    def set_of(self, alpha: Composition) -> DescentSubset:
        """{alpha_1, alpha_1 + alpha_2, ..., alpha_1 + ... + alpha_{k-1}}"""
        sums = []
        running = 0
        for part in alpha.parts[:-1]:
            running += part
            sums.append(running)
        return DescentSubset(alpha.n, tuple(sums))

    def comp_of(self, subset: DescentSubset, n: int = None) -> Composition:
        if n is None:
            n = subset.n
        for e in subset.elements:
            if e <= 0 or e >= n:
                raise SubsetError(f"Element '{e}' is outside {{1,...,{n - 1}}}")
        return Composition(tuple(subset_to_parts(subset.elements, n)))

    def complement(self, alpha: Composition) -> Composition:
        return self.comp_of(self.set_of(alpha).complement(), alpha.n)

    def refines(self, beta: Composition, alpha: Composition) -> bool:
        """True when beta is finer than alpha: set(alpha) is inside set(beta)"""
        if beta.n != alpha.n:
            raise ShapeError(f"Cannot compare compositions of {beta.n} and {alpha.n}")
        return self.set_of(alpha).issubset(self.set_of(beta))

    def enumerate_compositions(self, n: int) -> List[Composition]:
        """All 2^(n-1) compositions of n, sorted lexicographically on parts"""
        if n <= 0:
            raise ShapeError(f"n must be positive, got {n}")
        found = []
        for size in range(n):
            for subset in combinations(range(1, n), size):
                found.append(Composition(tuple(subset_to_parts(subset, n))))
        return sorted(found)


# Create service instance
composition_service = CompositionService()
