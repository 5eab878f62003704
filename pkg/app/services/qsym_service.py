"""
Immaculate Hecke Toolkit - QSym Service
Fundamental quasisymmetric functions, the involution psi, characteristics,
specialization to polynomials and identity checks
"""
import logging
from functools import lru_cache, reduce
from itertools import combinations, combinations_with_replacement
from operator import mul
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, Poly, symbols

from app.models import (
    Composition, QSymElement, DescentVariant, TableauClass, IdentityTag,
    IdentityReport, BasisFamily, BasisReport, IdentityError, ImmaculateError
)
from app.services.composition_service import composition_service
from app.services.tableau_service import tableau_service
from app.utils import timed
from app.utils.helpers import transpose
from app.utils.validators import validator

logger = logging.getLogger(__name__)

Terms = Dict[Tuple[int, ...], int]

BASIS_FAMILIES = {
    BasisFamily.RS_DUAL_IMM: (DescentVariant.ROW_STRICT, TableauClass.SIT),
    BasisFamily.DUAL_IMM: (DescentVariant.DUAL_IMM, TableauClass.SIT),
    BasisFamily.EXT: (DescentVariant.DUAL_IMM, TableauClass.SET),
    BasisFamily.REXT: (DescentVariant.ROW_STRICT, TableauClass.SET),
    BasisFamily.X_SUBMODULE: (DescentVariant.DUAL_IMM, TableauClass.SITSTAR),
}

# psi(left) = right for each pair, both over the same class
PSI_PAIRS = (
    (DescentVariant.DUAL_IMM, DescentVariant.ROW_STRICT, TableauClass.SIT),
    (DescentVariant.DUAL_IMM, DescentVariant.ROW_STRICT, TableauClass.SET),
    (DescentVariant.ABAR, DescentVariant.A, TableauClass.SIT),
    (DescentVariant.ABAR, DescentVariant.A, TableauClass.SET),
)


@lru_cache(maxsize=4096)
def _fundamental_terms(parts: Tuple[int, ...], start: int, m: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """Monomials of F_parts(x_start, ..., x_m) inside m variables"""
    n = sum(parts)
    rises = set()
    running = 0
    for part in parts[:-1]:
        running += part
        rises.add(running)

    terms: Terms = {}
    exponent = [0] * m

    def extend(position, low):
        if position > n:
            key = tuple(exponent)
            terms[key] = terms.get(key, 0) + 1
            return
        for index in range(low, m + 1):
            exponent[index - 1] += 1
            extend(position + 1, index + 1 if position in rises else index)
            exponent[index - 1] -= 1

    extend(1, start)
    return tuple(sorted(terms.items()))


def variables(m: int):
    return symbols(f'x1:{m + 1}')


def make_poly(terms: Terms, m: int) -> Poly:
    gens = variables(m)
    terms = {k: v for k, v in terms.items() if v}
    if not terms:
        return Poly(0, *gens, domain='ZZ')
    return Poly.from_dict(terms, *gens, domain='ZZ')


def format_poly(poly: Poly) -> str:
    """Terms sorted by exponent vector, e.g. "x1^2*x2 + x1*x2^2" """
    if poly.is_zero:
        return '0'
    pieces = []
    for exponent, coeff in poly.terms():
        factors = [
            f"x{k}" if e == 1 else f"x{k}^{e}"
            for k, e in enumerate(exponent, start=1) if e
        ]
        monomial = '*'.join(factors)
        magnitude = abs(int(coeff))
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return ' '.join(pieces)


class QSymService:
    """Quasisymmetric functions in the fundamental basis"""

    def __init__(self, tableaux=None, compositions=None):
        self.tableaux = tableaux or tableau_service
        self.compositions = compositions or composition_service
        self.default_m = None

    def init_app(self, app):
        """Initialize with Flask app config"""
        self.default_m = app.config.get('DEFAULT_M')

    def variable_count(self, alpha: Composition, m: Optional[int] = None) -> int:
        """Explicit m, else the configured default, else n"""
        if m is not None:
            return m
        return max(self.default_m or alpha.n, alpha.n)

    # ==========================================
    # FUNDAMENTAL BASIS
    # ==========================================

    def fundamental(self, alpha: Composition) -> QSymElement:
        return QSymElement(alpha.n, {alpha.parts: 1})

    def zero(self, n: int) -> QSymElement:
        return QSymElement(n, {})

    def psi(self, q: QSymElement) -> QSymElement:
        """Linear extension of F_alpha -> F_{alpha^c}"""
        result = {}
        for alpha, coeff in q.items():
            image = self.compositions.complement(alpha).parts
            result[image] = result.get(image, 0) + coeff
        return QSymElement(q.degree, result)

    def characteristic(self, alpha: Composition, variant: DescentVariant,
                       cls: TableauClass = TableauClass.SIT) -> QSymElement:
        """Sum over tableaux T in the class of F_{comp(Des_variant(T))}"""
        self.tableaux.check_limit(alpha)
        return self._characteristic(alpha, DescentVariant(variant), TableauClass(cls))

    @lru_cache(maxsize=1024)
    def _characteristic(self, alpha: Composition, variant: DescentVariant,
                        cls: TableauClass) -> QSymElement:
        total = {}
        for tableau in self.tableaux.enumerate_standard(alpha, cls):
            descents = self.tableaux.descent_set(tableau, variant)
            parts = self.compositions.comp_of(descents, alpha.n).parts
            total[parts] = total.get(parts, 0) + 1
        return QSymElement(alpha.n, total)

    # ==========================================
    # POLYNOMIALS
    # ==========================================

    def specialize(self, q: QSymElement, m: int, start: int = 1) -> Poly:
        """Evaluate q on the variables x_start, ..., x_m of an m-variable ring"""
        if m < 1:
            raise ImmaculateError(f"Variable count must be positive, got {m}")
        terms: Terms = {}
        for alpha, coeff in q.items():
            for exponent, count in _fundamental_terms(alpha.parts, start, m):
                terms[exponent] = terms.get(exponent, 0) + coeff * count
        return make_poly(terms, m)

    def one(self, m: int) -> Poly:
        return make_poly({(0,) * m: 1}, m)

    def monomial(self, k: int, m: int) -> Poly:
        exponent = [0] * m
        exponent[k - 1] = 1
        return make_poly({tuple(exponent): 1}, m)

    def _window(self, r: int, low: int, high: int, m: int, repeat: bool) -> Poly:
        if r < 0:
            raise ImmaculateError(f"Degree must be non-negative, got {r}")
        if r == 0:
            return self.one(m)
        indices = range(max(low, 1), min(high, m) + 1)
        choose = combinations_with_replacement if repeat else combinations
        terms: Terms = {}
        for chosen in choose(indices, r):
            exponent = [0] * m
            for index in chosen:
                exponent[index - 1] += 1
            key = tuple(exponent)
            terms[key] = terms.get(key, 0) + 1
        return make_poly(terms, m)

    def e_poly(self, r: int, low: int, high: int, m: int) -> Poly:
        """Elementary symmetric e_r(x_low, ..., x_high)"""
        return self._window(r, low, high, m, repeat=False)

    def h_poly(self, r: int, low: int, high: int, m: int) -> Poly:
        """Complete homogeneous h_r(x_low, ..., x_high)"""
        return self._window(r, low, high, m, repeat=True)

    def schur_poly(self, partition: Sequence[int], m: int) -> Poly:
        """s_partition(x_1, ..., x_m) by enumerating semistandard Young tableaux"""
        partition = tuple(partition)
        if any(a < b for a, b in zip(partition, partition[1:])):
            raise ImmaculateError(f"{list(partition)} is not a partition")
        cells = [(r, c) for r, length in enumerate(partition) for c in range(length)]
        filling = {}
        terms: Terms = {}

        def place(k):
            if k == len(cells):
                exponent = [0] * m
                for value in filling.values():
                    exponent[value - 1] += 1
                key = tuple(exponent)
                terms[key] = terms.get(key, 0) + 1
                return
            r, c = cells[k]
            low = 1
            if c > 0:
                low = max(low, filling[(r, c - 1)])
            if r > 0:
                low = max(low, filling[(r - 1, c)] + 1)
            for value in range(low, m + 1):
                filling[(r, c)] = value
                place(k + 1)
            filling.pop((r, c), None)

        place(0)
        return make_poly(terms, m)

    def _product(self, factors: List[Poly], m: int) -> Poly:
        return reduce(mul, factors, self.one(m))

    # ==========================================
    # IDENTITIES
    # ==========================================

    def _windowed(self, alpha: Composition, m: int, tail, leading: str) -> Poly:
        """Sum over 1 <= k <= m of (leading factor) * x_k * tail(k)"""
        ell = alpha.length
        total = make_poly({}, m)
        for k in range(1, m + 1):
            if leading == 'e':
                head = self.e_poly(ell - 1, 1, k - 1, m)
            else:
                head = self.h_poly(ell - 1, 1, k, m)
            if head.is_zero:
                continue
            total = total + head * self.monomial(k, m) * tail(k)
        return total

    def _diminished_chr(self, alpha: Composition, variant: DescentVariant, m: int, start: int) -> Poly:
        rest = alpha.diminished
        if rest is None:
            return self.one(m)
        return self.specialize(self.characteristic(rest, variant, TableauClass.SET), m, start)

    def _sides(self, tag: IdentityTag, alpha: Composition, m: int) -> Tuple[Poly, Poly]:
        n = alpha.n
        spec = lambda variant, cls: self.specialize(self.characteristic(alpha, variant, cls), m)

        if tag in (IdentityTag.EXT_SCHUR, IdentityTag.REXT_SCHUR):
            if not alpha.is_partition:
                raise IdentityError(f"{tag.value} needs a partition, got {alpha}")
            if tag == IdentityTag.EXT_SCHUR:
                return spec(DescentVariant.DUAL_IMM, TableauClass.SET), self.schur_poly(alpha.parts, m)
            return (spec(DescentVariant.ROW_STRICT, TableauClass.SET),
                    self.schur_poly(transpose(alpha.parts), m))

        if tag == IdentityTag.X_CHAR:
            bar = [p - 1 for p in alpha.parts if p > 1]
            rhs = self._windowed(
                alpha, m,
                lambda k: self._product([self.h_poly(p, k, m, m) for p in bar], m),
                'e')
            return spec(DescentVariant.DUAL_IMM, TableauClass.SITSTAR), rhs

        if tag == IdentityTag.XY_QUOT:
            rhs = self._windowed(
                alpha, m, lambda k: self._diminished_chr(alpha, DescentVariant.DUAL_IMM, m, k), 'e')
            return spec(DescentVariant.DUAL_IMM, TableauClass.SET_SITSTAR), rhs

        if tag == IdentityTag.ZY_QUOT:
            rhs = self._windowed(
                alpha, m, lambda k: self._diminished_chr(alpha, DescentVariant.ROW_STRICT, m, k + 1), 'h')
            return spec(DescentVariant.ROW_STRICT, TableauClass.SET_SITSTAR), rhs

        if tag == IdentityTag.BARA_SITSTAR:
            beta = [p - 1 for p in alpha.parts[:-1] if p > 1]
            last = alpha.parts[-1] - 1
            rhs = self._windowed(
                alpha, m,
                lambda k: self._product(
                    [self.e_poly(p, k, m, m) for p in beta] + [self.e_poly(last, k + 1, m, m)], m),
                'e')
            return spec(DescentVariant.ABAR, TableauClass.SITSTAR), rhs

        if tag == IdentityTag.A_QUOT:
            lhs = spec(DescentVariant.A, TableauClass.SET_SITSTAR)
            if alpha.is_hook:
                return lhs, self.h_poly(n, 1, m, m)
            rhs = self._windowed(
                alpha, m, lambda k: self._diminished_chr(alpha, DescentVariant.A, m, k + 1), 'h')
            return lhs, rhs

        if tag == IdentityTag.ABAR_QUOT:
            lhs = spec(DescentVariant.ABAR, TableauClass.SET_SITSTAR)
            if alpha.is_hook:
                return lhs, self.e_poly(n, 1, m, m)
            rhs = self._windowed(
                alpha, m, lambda k: self._diminished_chr(alpha, DescentVariant.ABAR, m, k), 'e')
            return lhs, rhs

        if tag == IdentityTag.RDI_DIFF:
            difference = (self.characteristic(alpha, DescentVariant.ROW_STRICT, TableauClass.SIT)
                          - self.characteristic(alpha, DescentVariant.ROW_STRICT, TableauClass.NSET))
            return self.specialize(difference, m), spec(DescentVariant.ROW_STRICT, TableauClass.SET)

        raise IdentityError(f"Unknown identity tag '{tag}'")

    def _psi_report(self, alpha: Composition, m: int) -> IdentityReport:
        lhs, rhs, holds = [], [], True
        for left, right, cls in PSI_PAIRS:
            image = self.psi(self.characteristic(alpha, left, cls))
            partner = self.characteristic(alpha, right, cls)
            lhs.append(str(image))
            rhs.append(str(partner))
            holds = holds and image == partner
        return IdentityReport(tag=IdentityTag.PSI_PAIRS, shape=list(alpha.parts), m=m,
                              lhs=' | '.join(lhs), rhs=' | '.join(rhs), holds=holds)

    @timed('identity_report')
    def identity_report(self, tag, alpha: Composition, m: Optional[int] = None) -> IdentityReport:
        try:
            tag = IdentityTag(tag)
        except ValueError:
            raise IdentityError(f"Unknown identity tag '{tag}'")
        m = self.variable_count(alpha, m)
        is_valid, error = validator.validate_variable_count(m, alpha.n)
        if not is_valid:
            raise IdentityError(error)

        if tag == IdentityTag.PSI_PAIRS:
            report = self._psi_report(alpha, m)
        else:
            lhs, rhs = self._sides(tag, alpha, m)
            report = IdentityReport(tag=tag, shape=list(alpha.parts), m=m,
                                    lhs=format_poly(lhs), rhs=format_poly(rhs), holds=lhs == rhs)
        if not report.holds:
            logger.warning(f"Identity {tag.value} fails for {alpha} with m={m}")
        return report

    def verify_identity(self, tag, alpha: Composition, m: Optional[int] = None) -> bool:
        return self.identity_report(tag, alpha, m).holds

    # ==========================================
    # BASES
    # ==========================================

    def basis_report(self, family: BasisFamily, n: int) -> BasisReport:
        family = BasisFamily(family)
        variant, cls = BASIS_FAMILIES[family]
        shapes = self.compositions.enumerate_compositions(n)
        columns = {alpha.parts: k for k, alpha in enumerate(shapes)}
        rows = []
        for alpha in shapes:
            row = [0] * len(shapes)
            for beta, coeff in self.characteristic(alpha, variant, cls).items():
                row[columns[beta.parts]] = coeff
            rows.append(row)
        rank = Matrix(rows).rank()
        logger.debug(f"Family {family.value} at n={n} has rank {rank} of {len(shapes)}")
        return BasisReport(family=family, n=n, size=len(shapes), rank=rank)

    def check_basis(self, family: BasisFamily, n: int) -> bool:
        return self.basis_report(family, n).full_rank


# Create service instance
qsym_service = QSymService()
