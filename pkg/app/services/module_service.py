"""
Immaculate Hecke Toolkit - Module Service
Action matrices, cyclic generation, invariance, filtrations and
indecomposability certificates for modules spanned by tableaux
"""
import logging
from functools import lru_cache
from typing import Callable, Dict, List, NamedTuple, Optional, Set, Tuple

import networkx as nx
from sympy import Matrix, eye, zeros
from sympy.physics.quantum import TensorProduct

from app.models import (
    Composition, DescentSubset, Tableau, ModuleSpec, ModuleReport, QSymElement,
    DescentVariant, TableauClass, SpecialKind, ActionOutcome,
    ModuleStructureError
)
from app.services.tableau_service import tableau_service
from app.services.hecke_service import hecke_service
from app.services.composition_service import composition_service
from app.services.qsym_service import qsym_service
from app.utils import timed

logger = logging.getLogger(__name__)


def two_large_parts(alpha: Composition) -> bool:
    return alpha.parts_at_least(2) >= 2


def always(alpha: Composition) -> bool:
    return True


class ModuleFamily(NamedTuple):
    variant: DescentVariant
    basis: TableauClass
    quotient_by: Optional[TableauClass]
    generator: SpecialKind
    asserted: Optional[Callable[[Composition], bool]]


RS, DI = DescentVariant.ROW_STRICT, DescentVariant.DUAL_IMM
A, ABAR = DescentVariant.A, DescentVariant.ABAR

FAMILIES: Dict[str, ModuleFamily] = {
    'V': ModuleFamily(RS, TableauClass.SIT, None, SpecialKind.S0, always),
    'W': ModuleFamily(DI, TableauClass.SIT, None, SpecialKind.SROW, always),
    'Z': ModuleFamily(RS, TableauClass.SET, None, SpecialKind.SCOL, always),
    'Vbar': ModuleFamily(RS, TableauClass.SIT, TableauClass.SET, SpecialKind.S0, None),
    'X': ModuleFamily(DI, TableauClass.SITSTAR, None, SpecialKind.SROWSTAR, None),
    'W/X': ModuleFamily(DI, TableauClass.SIT, TableauClass.SITSTAR, SpecialKind.SROW, two_large_parts),
    'E': ModuleFamily(DI, TableauClass.SIT, TableauClass.NSET, SpecialKind.SROW, always),
    'X/Y': ModuleFamily(DI, TableauClass.SITSTAR, TableauClass.NSET_SITSTAR, SpecialKind.SROWSTAR, None),
    'Z/RY': ModuleFamily(RS, TableauClass.SET, TableauClass.SET_MINUS_SITSTAR, SpecialKind.SCOL, always),
    'A': ModuleFamily(A, TableauClass.SIT, None, SpecialKind.S0, None),
    'Abar': ModuleFamily(ABAR, TableauClass.SIT, None, SpecialKind.SROW, None),
    'A_SET': ModuleFamily(A, TableauClass.SET, None, SpecialKind.SCOL, None),
    'Abar_SET': ModuleFamily(ABAR, TableauClass.SIT, TableauClass.NSET, SpecialKind.SROW, None),
    'Abar_SITstar': ModuleFamily(ABAR, TableauClass.SITSTAR, None, SpecialKind.SROWSTAR, None),
    'A_SET/RAY': ModuleFamily(A, TableauClass.SET, TableauClass.SET_MINUS_SITSTAR, SpecialKind.SCOL, None),
    'Abar_SITstar/AbarY': ModuleFamily(
        ABAR, TableauClass.SITSTAR, TableauClass.NSET_SITSTAR, SpecialKind.SROWSTAR, None),
}


class ModuleService:
    """H_n(0)-modules spanned by classes of standard immaculate tableaux"""

    def __init__(self, tableaux=None, hecke=None, compositions=None, qsym=None):
        self.tableaux = tableaux or tableau_service
        self.hecke = hecke or hecke_service
        self.compositions = compositions or composition_service
        self.qsym = qsym or qsym_service

    # ==========================================
    # FAMILIES
    # ==========================================

    def family_spec(self, name: str, alpha: Composition) -> ModuleSpec:
        if name not in FAMILIES:
            raise ModuleStructureError(f"Unknown module family '{name}'")
        family = FAMILIES[name]
        return ModuleSpec(shape=alpha, variant=family.variant, basis=family.basis,
                          quotient_by=family.quotient_by)

    def family_of(self, spec: ModuleSpec) -> Optional[str]:
        for name, family in FAMILIES.items():
            if (family.variant, family.basis, family.quotient_by) == (spec.variant, spec.basis, spec.quotient_by):
                return name
        return None

    def asserted_indecomposable(self, spec: ModuleSpec) -> Optional[bool]:
        """True where indecomposability is an established result for this family and shape"""
        name = self.family_of(spec)
        if name is None or FAMILIES[name].asserted is None:
            return None
        return True if FAMILIES[name].asserted(spec.shape) else None

    # ==========================================
    # BASIS AND ACTION
    # ==========================================

    def ambient(self, spec: ModuleSpec) -> List[Tableau]:
        return self.tableaux.enumerate_standard(spec.shape, spec.basis)

    def submodule(self, spec: ModuleSpec) -> List[Tableau]:
        if spec.quotient_by is None:
            return []
        return self.tableaux.enumerate_standard(spec.shape, spec.quotient_by)

    def basis(self, spec: ModuleSpec) -> List[Tableau]:
        sub = set(self.submodule(spec))
        return [t for t in self.ambient(spec) if t not in sub]

    def _find_escape(self, variant: DescentVariant, members: List[Tableau],
                     allowed: Set[Tableau]) -> Optional[Tuple[Tableau, int, Tableau]]:
        for tableau in members:
            for i in range(1, tableau.n):
                result = self.hecke.apply_pi(variant, i, tableau)
                if result.outcome == ActionOutcome.SWAPPED and result.tableau not in allowed:
                    return tableau, i, result.tableau
        return None

    def check_invariance(self, alpha: Composition, variant: DescentVariant, cls: TableauClass) -> bool:
        """Every swapped image of a class member stays in the class"""
        members = self.tableaux.enumerate_standard(alpha, cls)
        escape = self._find_escape(DescentVariant(variant), members, set(members))
        if escape:
            logger.debug(f"{cls.value} not invariant under {variant}: pi_{escape[1]} sends {escape[0]} to {escape[2]}")
        return escape is None

    def validate(self, spec: ModuleSpec) -> None:
        ambient = self.ambient(spec)
        escape = self._find_escape(spec.variant, ambient, set(ambient))
        if escape:
            tableau, i, image = escape
            raise ModuleStructureError(
                f"{spec.basis.value} is not invariant: pi_{i} sends {tableau} to {image}")
        sub = self.submodule(spec)
        outside = set(sub) - set(ambient)
        if outside:
            raise ModuleStructureError(
                f"{spec.quotient_by.value} is not contained in {spec.basis.value}: {sorted(map(str, outside))[0]}")
        escape = self._find_escape(spec.variant, sub, set(sub))
        if escape:
            tableau, i, image = escape
            raise ModuleStructureError(
                f"{spec.quotient_by.value} is not invariant: pi_{i} sends {tableau} to {image}")

    @lru_cache(maxsize=512)
    def images(self, spec: ModuleSpec) -> Dict[int, Tuple[Optional[int], ...]]:
        """Generator i -> image index of each basis element; None for zero or the submodule"""
        self.validate(spec)
        basis = self.basis(spec)
        index = {t: k for k, t in enumerate(basis)}
        table = {}
        for i, row in self.hecke.action_table(spec.variant, basis).items():
            table[i] = tuple(None if image is None else index.get(image) for image in row)
        return table

    def action_matrices(self, spec: ModuleSpec) -> List[Matrix]:
        dim = len(self.basis(spec))
        matrices = []
        for i in range(1, spec.shape.n):
            matrix = zeros(dim, dim)
            for column, target in enumerate(self.images(spec).get(i, ())):
                if target is not None:
                    matrix[target, column] = 1
            matrices.append(matrix)
        return matrices

    def cyclic_span(self, spec: ModuleSpec, generator: Tableau) -> Set[Tableau]:
        basis = self.basis(spec)
        index = {t: k for k, t in enumerate(basis)}
        if generator not in index:
            raise ModuleStructureError(f"{generator} is not a basis element of {spec}")
        table = self.images(spec)
        reached = {index[generator]}
        frontier = [index[generator]]
        while frontier:
            k = frontier.pop()
            for images in table.values():
                target = images[k]
                if target is not None and target not in reached:
                    reached.add(target)
                    frontier.append(target)
        return {basis[k] for k in reached}

    def is_cyclic_on(self, spec: ModuleSpec, generator: Tableau) -> bool:
        return len(self.cyclic_span(spec, generator)) == len(self.basis(spec))

    def cyclic_generators(self, spec: ModuleSpec) -> List[Tableau]:
        return [g for g in self.basis(spec) if self.is_cyclic_on(spec, g)]

    # ==========================================
    # FILTRATIONS
    # ==========================================

    def filtration_characteristic(self, spec: ModuleSpec, key: Optional[Callable[[int], int]] = None) -> QSymElement:
        """Sum of the characteristics of the one-dimensional layers of a linear extension

        key breaks ties between basis indices when choosing the extension.
        """
        basis = self.basis(spec)
        n = spec.shape.n
        table = self.images(spec)
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(basis)))
        for images in table.values():
            for k, target in enumerate(images):
                if target is not None and target != k:
                    graph.add_edge(k, target)

        order = list(nx.lexicographical_topological_sort(graph, key=key))
        position = {k: p for p, k in enumerate(order)}
        total = {}
        for k in order:
            descents = []
            for i, images in table.items():
                target = images[k]
                if target == k:
                    continue
                if target is not None and position[target] <= position[k]:
                    raise ModuleStructureError(f"Linear extension broken at {basis[k]} under pi_{i}")
                descents.append(i)
            parts = self.compositions.comp_of(DescentSubset(n, tuple(descents)), n).parts
            total[parts] = total.get(parts, 0) + 1
        return QSymElement(n, total)

    def expected_characteristic(self, spec: ModuleSpec) -> QSymElement:
        """chr of the basis class, less chr of the quotient class"""
        total = self.qsym.characteristic(spec.shape, spec.variant, spec.basis)
        if spec.quotient_by is not None:
            total = total - self.qsym.characteristic(spec.shape, spec.variant, spec.quotient_by)
        return total

    def check_filtration(self, spec: ModuleSpec) -> bool:
        return self.filtration_characteristic(spec) == self.expected_characteristic(spec)

    # ==========================================
    # ENDOMORPHISMS
    # ==========================================

    @lru_cache(maxsize=128)
    def endomorphism_commutant(self, spec: ModuleSpec) -> Tuple[int, Tuple[Matrix, ...]]:
        """Rational basis of {F : F M_i = M_i F for all i}, in reduced row-echelon form"""
        dim = len(self.basis(spec))
        if dim == 0:
            return 0, ()
        generators = self.cyclic_generators(spec)
        if generators:
            kernel = self._commutant_from_generator(spec, generators[0])
        else:
            kernel = self._commutant_full(spec)

        if not kernel:
            return 0, ()
        stacked = Matrix.hstack(*kernel).T
        reduced, pivots = stacked.rref()
        matrices = tuple(
            Matrix(dim, dim, list(reduced.row(k))) for k in range(len(pivots))
        )
        logger.debug(f"Commutant of {spec} has dimension {len(matrices)}")
        return len(matrices), matrices

    def _commutant_from_generator(self, spec: ModuleSpec, generator: Tableau) -> List[Matrix]:
        """
        On a cyclic module an endomorphism F is fixed by v = F(g).

        With P_b a word operator taking g to b, F e_b = P_b v, and F commutes
        with every M_i exactly when (P_{b'} - M_i P_b) v = 0 for b' = pi_i(b)
        (P_{b'} = 0 when pi_i(b) is zero).
        """
        basis = self.basis(spec)
        dim = len(basis)
        table = self.images(spec)
        matrices = dict(zip(range(1, spec.shape.n), self.action_matrices(spec)))

        start = basis.index(generator)
        reach = {start: eye(dim)}
        frontier = [start]
        while frontier:
            k = frontier.pop(0)
            for i, images in table.items():
                target = images[k]
                if target is not None and target not in reach:
                    reach[target] = matrices[i] * reach[k]
                    frontier.append(target)

        rows = set()
        for i, images in table.items():
            for b in range(dim):
                target = images[b]
                block = -matrices[i] * reach[b]
                if target is not None:
                    block = block + reach[target]
                for r in range(dim):
                    row = tuple(block.row(r))
                    if any(row):
                        rows.add(row)

        if rows:
            vectors = Matrix(sorted(rows)).nullspace()
        else:
            vectors = [eye(dim).col(k) for k in range(dim)]
        return [
            Matrix.hstack(*[reach[b] * v for b in range(dim)]).reshape(dim * dim, 1)
            for v in vectors
        ]

    def _commutant_full(self, spec: ModuleSpec) -> List[Matrix]:
        """Solve F M_i = M_i F with all dim^2 entries of F unknown"""
        dim = len(self.basis(spec))
        table = self.images(spec)
        equations = set()
        for images in table.values():
            preimages: Dict[int, List[int]] = {}
            for s, target in enumerate(images):
                if target is not None:
                    preimages.setdefault(target, []).append(s)
            for r in range(dim):
                for c in range(dim):
                    row = {}
                    if images[c] is not None:
                        key = r * dim + images[c]
                        row[key] = row.get(key, 0) + 1
                    for s in preimages.get(r, ()):
                        key = s * dim + c
                        row[key] = row.get(key, 0) - 1
                    row = tuple(sorted((k, v) for k, v in row.items() if v))
                    if row:
                        equations.add(row)

        if equations:
            system = zeros(len(equations), dim * dim)
            for e, row in enumerate(sorted(equations)):
                for k, v in row:
                    system[e, k] = v
            kernel = system.nullspace()
        else:
            kernel = [eye(dim * dim).col(k) for k in range(dim * dim)]
        return kernel

    def commutant_dimension_dense(self, spec: ModuleSpec) -> int:
        """Dimension of the commutant from the Kronecker form of the commutation equations"""
        dim = len(self.basis(spec))
        if dim == 0:
            return 0
        identity = eye(dim)
        blocks = [
            TensorProduct(m.T, identity) - TensorProduct(identity, m)
            for m in self.action_matrices(spec)
        ]
        if not blocks:
            return dim * dim
        return dim * dim - Matrix.vstack(*blocks).rank()

    def radical_dimension(self, spec: ModuleSpec) -> int:
        """Dimension of the kernel of the trace pairing on the commutant"""
        dim, basis = self.endomorphism_commutant(spec)
        if dim == 0:
            return 0
        gram = Matrix(dim, dim, lambda a, b: (basis[a] * basis[b]).trace())
        return dim - gram.rank()

    def is_indecomposable(self, spec: ModuleSpec) -> bool:
        dim, _ = self.endomorphism_commutant(spec)
        return dim - self.radical_dimension(spec) == 1

    # ==========================================
    # REPORTS
    # ==========================================

    @timed('analyze')
    def analyze(self, spec: ModuleSpec) -> ModuleReport:
        basis = self.basis(spec)
        commutant_dim, _ = self.endomorphism_commutant(spec)
        radical_dim = self.radical_dimension(spec)
        return ModuleReport(
            shape=list(spec.shape.parts),
            variant=spec.variant,
            basis=spec.basis,
            quotient_by=spec.quotient_by,
            dim=len(basis),
            cyclic_generators_found=[str(g) for g in self.cyclic_generators(spec)],
            commutant_dim=commutant_dim,
            radical_dim=radical_dim,
            indecomposable=commutant_dim - radical_dim == 1,
            asserted=self.asserted_indecomposable(spec),
        )

    def verdict(self, spec: ModuleSpec, report: ModuleReport) -> bool:
        """True when the module passes every check its family carries"""
        if not self.check_filtration(spec):
            return False
        if report.asserted and not report.indecomposable:
            logger.warning(f"{spec.shape} {spec.variant.value} decomposes against an asserted result")
            return False
        name = self.family_of(spec)
        if name is not None and report.dim > 0:
            generator = str(self.tableaux.special(spec.shape, FAMILIES[name].generator))
            return generator in report.cyclic_generators_found
        return True

    def fixing_witness(self, alpha: Composition, other: Tableau) -> Optional[int]:
        """A generator fixing Srow but not other under the dual immaculate action"""
        top = self.tableaux.special(alpha, SpecialKind.SROW)
        for i in range(1, alpha.n):
            fixes_top = self.hecke.apply_pi(DI, i, top).outcome == ActionOutcome.FIXED
            fixes_other = self.hecke.apply_pi(DI, i, other).outcome == ActionOutcome.FIXED
            if fixes_top and not fixes_other:
                return i
        return None


# Create service instance
module_service = ModuleService()
