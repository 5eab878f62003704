"""
Immaculate Hecke Toolkit - Domain Models
Compositions, tableaux, Hecke words, quasisymmetric elements and reports
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, Field


# ==========================================
# ERRORS
# ==========================================

class ImmaculateError(ValueError):
    """Base class for all domain errors"""


class ShapeError(ImmaculateError):
    pass


class SubsetError(ImmaculateError):
    pass


class TableauError(ImmaculateError):
    pass


class ClassificationError(ImmaculateError):
    pass


class WordError(ImmaculateError):
    pass


class StraighteningError(ImmaculateError):
    pass


class IdentityError(ImmaculateError):
    pass


class ModuleStructureError(ImmaculateError):
    pass


class EnumerationLimitError(ImmaculateError):
    pass


# ==========================================
# ENUMS
# ==========================================

class DescentVariant(str, Enum):
    DUAL_IMM = 'di'
    ROW_STRICT = 'rs'
    A = 'a'
    ABAR = 'abar'


class TableauClass(str, Enum):
    SIT = 'sit'
    SET = 'set'
    SITSTAR = 'sitstar'
    NSET = 'nset'
    SET_SITSTAR = 'set-sitstar'
    SET_MINUS_SITSTAR = 'set-minus-sitstar'
    SIT_MINUS_SITSTAR = 'sit-minus-sitstar'
    NSET_SITSTAR = 'nset-sitstar'


class SpecialKind(str, Enum):
    S0 = 's0'
    SROW = 'srow'
    SCOL = 'scol'
    SROWSTAR = 'srowstar'


class ActionOutcome(str, Enum):
    FIXED = 'fixed'
    ZERO = 'zero'
    SWAPPED = 'swapped'


class IdentityTag(str, Enum):
    EXT_SCHUR = 'EXT_SCHUR'
    REXT_SCHUR = 'REXT_SCHUR'
    X_CHAR = 'X_CHAR'
    XY_QUOT = 'XY_QUOT'
    ZY_QUOT = 'ZY_QUOT'
    BARA_SITSTAR = 'BARA_SITSTAR'
    A_QUOT = 'A_QUOT'
    ABAR_QUOT = 'ABAR_QUOT'
    RDI_DIFF = 'RDI_DIFF'
    PSI_PAIRS = 'PSI_PAIRS'


class BasisFamily(str, Enum):
    RS_DUAL_IMM = 'RSdualImm'
    DUAL_IMM = 'dualImm'
    EXT = 'ext'
    REXT = 'rext'
    X_SUBMODULE = 'x'


class Strictness(str, Enum):
    STRICT = 'strict'
    WEAK = 'weak'


class ColumnScope(str, Enum):
    FIRST_COLUMN = 'first_column'
    ALL_COLUMNS = 'all_columns'


class OutputFormat(str, Enum):
    TEXT = 'text'
    JSON = 'json'
    DOT = 'dot'


# ==========================================
# MODELS
# ==========================================

@dataclass(frozen=True, order=True)
class Composition:
    """Composition of n, stored as its parts"""
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'parts', tuple(int(p) for p in self.parts))
        if not self.parts:
            raise ShapeError("A composition needs at least one part")
        for part in self.parts:
            if part < 1:
                raise ShapeError(f"Composition parts must be positive, got '{part}'")

    @classmethod
    def parse(cls, text: str) -> 'Composition':
        from app.utils.validators import validator
        is_valid, error = validator.validate_shape(text)
        if not is_valid:
            raise ShapeError(error)
        return cls(tuple(int(token) for token in text.split(',')))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def diminished(self) -> Optional['Composition']:
        """Parts diminished by one with zeros discarded; None when nothing is left"""
        rest = tuple(p - 1 for p in self.parts if p > 1)
        return Composition(rest) if rest else None

    @property
    def is_partition(self) -> bool:
        return all(a >= b for a, b in zip(self.parts, self.parts[1:]))

    @property
    def is_hook(self) -> bool:
        """True for (1^j, n-j), the shapes with a single standard immaculate tableau"""
        return all(p == 1 for p in self.parts[:-1])

    def parts_at_least(self, size: int) -> int:
        return sum(1 for p in self.parts if p >= size)

    def __str__(self) -> str:
        return ','.join(str(p) for p in self.parts)

    def to_dict(self) -> Dict:
        return {'parts': list(self.parts), 'n': self.n, 'length': self.length}


@dataclass(frozen=True)
class DescentSubset:
    """Subset of {1, ..., n-1}"""
    n: int
    elements: Tuple[int, ...] = ()

    def __post_init__(self):
        elements = tuple(sorted(set(int(e) for e in self.elements)))
        for e in elements:
            if e <= 0 or e >= self.n:
                raise SubsetError(f"Element '{e}' is outside {{1,...,{self.n - 1}}}")
        object.__setattr__(self, 'elements', elements)

    @classmethod
    def parse(cls, text: str, n: int) -> 'DescentSubset':
        from app.utils.validators import validator
        is_valid, error = validator.validate_subset(text)
        if not is_valid:
            raise SubsetError(error)
        body = text.strip()[1:-1].strip()
        return cls(n, tuple(int(t) for t in body.split(',')) if body else ())

    def complement(self) -> 'DescentSubset':
        present = set(self.elements)
        return DescentSubset(self.n, tuple(i for i in range(1, self.n) if i not in present))

    def __contains__(self, item) -> bool:
        return item in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def issubset(self, other: 'DescentSubset') -> bool:
        return set(self.elements) <= set(other.elements)

    def __str__(self) -> str:
        return '{' + ','.join(str(e) for e in self.elements) + '}'


@dataclass(frozen=True)
class Tableau:
    """
    Filling of a composition diagram in French convention.

    rows[0] is row 1, the bottom row.
    """
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        if not rows or any(not row for row in rows):
            raise TableauError("Every row of a tableau must hold at least one entry")
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def parse(cls, text: str) -> 'Tableau':
        from app.utils.validators import validator
        is_valid, error = validator.validate_tableau(text)
        if not is_valid:
            raise TableauError(error)
        return cls(tuple(tuple(int(t) for t in row.split(',')) for row in text.split(';')))

    @cached_property
    def shape(self) -> Composition:
        return Composition(tuple(len(row) for row in self.rows))

    @property
    def n(self) -> int:
        return self.shape.n

    def entry(self, row: int, col: int) -> int:
        """Entry in cell (row, col), both 1-based"""
        return self.rows[row - 1][col - 1]

    @cached_property
    def positions(self) -> Dict[int, Tuple[int, int]]:
        return {
            value: (r, c)
            for r, row in enumerate(self.rows, start=1)
            for c, value in enumerate(row, start=1)
        }

    def position(self, value: int) -> Tuple[int, int]:
        try:
            return self.positions[value]
        except KeyError:
            raise TableauError(f"Entry {value} does not occur in {self}")

    def column(self, col: int) -> List[int]:
        """Entries of column col read bottom to top, skipping rows too short to reach it"""
        return [row[col - 1] for row in self.rows if len(row) >= col]

    @property
    def first_column(self) -> List[int]:
        return self.column(1)

    @property
    def width(self) -> int:
        return max(self.shape.parts)

    @property
    def is_standard(self) -> bool:
        return sorted(self.positions) == list(range(1, self.n + 1)) and len(self.positions) == self.n

    @property
    def rows_increase(self) -> bool:
        return all(a < b for row in self.rows for a, b in zip(row, row[1:]))

    def swap(self, i: int) -> 'Tableau':
        """Exchange entries i and i+1"""
        def image(v):
            if v == i:
                return i + 1
            if v == i + 1:
                return i
            return v
        return Tableau(tuple(tuple(image(v) for v in row) for row in self.rows))

    def __str__(self) -> str:
        return ';'.join(','.join(str(v) for v in row) for row in self.rows)

    def to_dict(self) -> Dict:
        return {'shape': list(self.shape.parts), 'rows': [list(r) for r in self.rows], 'text': str(self)}


@dataclass(frozen=True)
class TableauClassFlags:
    is_sit: bool
    is_set: bool
    is_sitstar: bool
    in_nset: bool

    def matches(self, cls: TableauClass) -> bool:
        return {
            TableauClass.SIT: self.is_sit,
            TableauClass.SET: self.is_set,
            TableauClass.SITSTAR: self.is_sitstar,
            TableauClass.NSET: self.is_sit and self.in_nset,
            TableauClass.SET_SITSTAR: self.is_set and self.is_sitstar,
            TableauClass.SET_MINUS_SITSTAR: self.is_set and not self.is_sitstar,
            TableauClass.SIT_MINUS_SITSTAR: self.is_sit and not self.is_sitstar,
            TableauClass.NSET_SITSTAR: self.in_nset and self.is_sitstar,
        }[TableauClass(cls)]

    def to_dict(self) -> Dict:
        return {
            'is_SIT': self.is_sit,
            'is_SET': self.is_set,
            'is_SITstar': self.is_sitstar,
            'in_NSET': self.in_nset,
        }


@dataclass(frozen=True)
class HeckeWord:
    """Generator indices i_1 ... i_m; acts as pi_{i_1} ... pi_{i_m}, rightmost first"""
    indices: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'indices', tuple(int(i) for i in self.indices))

    @classmethod
    def parse(cls, text: str) -> 'HeckeWord':
        from app.utils.validators import validator
        is_valid, error = validator.validate_word(text)
        if not is_valid:
            raise WordError(error)
        return cls(tuple(int(t) for t in text.split()))

    def check_range(self, n: int) -> None:
        for i in self.indices:
            if i < 1 or i > n - 1:
                raise WordError(f"Generator index {i} is outside 1..{n - 1}")

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __str__(self) -> str:
        return ' '.join(str(i) for i in self.indices)


@dataclass(frozen=True)
class ActionResult:
    outcome: ActionOutcome
    tableau: Optional[Tableau] = None

    @classmethod
    def fixed(cls, tableau: Tableau) -> 'ActionResult':
        return cls(ActionOutcome.FIXED, tableau)

    @classmethod
    def zero(cls) -> 'ActionResult':
        return cls(ActionOutcome.ZERO, None)

    @classmethod
    def swapped(cls, tableau: Tableau) -> 'ActionResult':
        return cls(ActionOutcome.SWAPPED, tableau)

    @property
    def is_zero(self) -> bool:
        return self.outcome == ActionOutcome.ZERO

    def __str__(self) -> str:
        return '0' if self.is_zero else str(self.tableau)

    def to_dict(self) -> Dict:
        return {
            'outcome': self.outcome.value,
            'tableau': None if self.tableau is None else str(self.tableau),
        }


@dataclass(frozen=True)
class QSymElement:
    """Integer combination of fundamental quasisymmetric functions of one degree"""
    degree: int
    coefficients: Dict[Tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for parts, coeff in self.coefficients.items():
            parts = tuple(parts)
            if sum(parts) != self.degree:
                raise ShapeError(f"F[{','.join(map(str, parts))}] does not have degree {self.degree}")
            if coeff:
                cleaned[parts] = int(coeff)
        object.__setattr__(self, 'coefficients', cleaned)

    def _check_degree(self, other: 'QSymElement'):
        if other.degree != self.degree:
            raise ShapeError(f"Degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: 'QSymElement') -> 'QSymElement':
        self._check_degree(other)
        merged = dict(self.coefficients)
        for parts, coeff in other.coefficients.items():
            merged[parts] = merged.get(parts, 0) + coeff
        return QSymElement(self.degree, merged)

    def __neg__(self) -> 'QSymElement':
        return QSymElement(self.degree, {p: -c for p, c in self.coefficients.items()})

    def __sub__(self, other: 'QSymElement') -> 'QSymElement':
        return self + (-other)

    def __mul__(self, scalar: int) -> 'QSymElement':
        return QSymElement(self.degree, {p: scalar * c for p, c in self.coefficients.items()})

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def items(self) -> List[Tuple[Composition, int]]:
        return [(Composition(p), self.coefficients[p]) for p in sorted(self.coefficients)]

    def coefficient(self, alpha: Composition) -> int:
        return self.coefficients.get(tuple(alpha.parts), 0)

    def __str__(self) -> str:
        if self.is_zero:
            return '0'
        pieces = []
        for alpha, coeff in self.items():
            term = f"F[{alpha}]" if abs(coeff) == 1 else f"{abs(coeff)}*F[{alpha}]"
            if not pieces:
                pieces.append(term if coeff > 0 else f"-{term}")
            else:
                pieces.append(f"+ {term}" if coeff > 0 else f"- {term}")
        return ' '.join(pieces)

    def to_dict(self) -> Dict:
        return {
            'degree': self.degree,
            'terms': [{'composition': list(a.parts), 'coefficient': c} for a, c in self.items()],
            'text': str(self),
        }


@dataclass(frozen=True)
class FillingRegime:
    """Row and column strictness rules for semistandard fillings"""
    row_mode: Strictness
    col_scope: ColumnScope
    col_mode: Strictness
    negated_columns: bool = False

    def __post_init__(self):
        if self.negated_columns and not (
            self.col_scope == ColumnScope.FIRST_COLUMN
            and self.col_mode == Strictness.WEAK
            and self.row_mode == Strictness.STRICT
        ):
            raise ShapeError("The negated-column regime requires a weak first column and strict rows")

    @property
    def name(self) -> str:
        cols = '1st-col' if self.col_scope == ColumnScope.FIRST_COLUMN else 'cols'
        col_sign = '<' if self.col_mode == Strictness.STRICT else '<='
        row_sign = '<' if self.row_mode == Strictness.STRICT else '<='
        label = f"{cols} {col_sign}, rows {row_sign}"
        return f"{label}, some column not <=" if self.negated_columns else label


@dataclass(frozen=True)
class ModuleSpec:
    """A module spanned by a class of tableaux, optionally taken modulo a sub-class"""
    shape: Composition
    variant: DescentVariant
    basis: TableauClass = TableauClass.SIT
    quotient_by: Optional[TableauClass] = None

    def __str__(self) -> str:
        base = f"{self.variant.value}:{self.basis.value}"
        if self.quotient_by is not None:
            base += f"/{self.quotient_by.value}"
        return f"{base}@{self.shape}"


# ==========================================
# REPORTS
# ==========================================

class BoundsReport(BaseModel):
    shape: List[int]
    min: str
    max: str
    graded: bool


class IdentityReport(BaseModel):
    tag: IdentityTag
    shape: List[int]
    m: int
    lhs: str
    rhs: str
    holds: bool


class GenfunComparison(BaseModel):
    regime: str
    partner: str
    holds: bool


class GenfunReport(BaseModel):
    shape: List[int]
    m: int
    comparisons: List[GenfunComparison] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.comparisons)


class BasisReport(BaseModel):
    family: BasisFamily
    n: int
    size: int
    rank: int

    @property
    def full_rank(self) -> bool:
        return self.rank == self.size


class ModuleReport(BaseModel):
    shape: List[int]
    variant: DescentVariant
    basis: TableauClass
    quotient_by: Optional[TableauClass] = None
    dim: int
    cyclic_generators_found: List[str] = Field(default_factory=list)
    commutant_dim: int
    radical_dim: int
    indecomposable: bool
    asserted: Optional[bool] = Field(default=None, serialization_alias='paper_asserted')


class Command(BaseModel):
    """A validated CLI request"""
    subcommand: str
    shape: Optional[List[int]] = None
    variant: Optional[DescentVariant] = None
    tableau_class: Optional[TableauClass] = None
    format: OutputFormat = OutputFormat.TEXT
    m: Optional[int] = Field(default=None, ge=1)
