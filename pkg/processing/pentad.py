"""
Pentads of Cartan type (r, n; A, D, Gamma)

G0 is the abelian algebra Q^r with basis eps_1..eps_r, G1 and G-1 are spanned by
e_1..e_n and f_1..f_n with [eps_i, e_j] = d_ij e_j, [eps_i, f_j] = -d_ij f_j and
[e_i, f_j] = delta_ij h_i, where h_i is the i-th row of Gamma * tD * A.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from processing.errors import InputFormatError, InvalidPentad
from processing.exactq import (
    QMatrix,
    RationalLike,
    Vector,
    complement_basis,
    dot,
    format_rational,
    independent_rows,
    inverse,
    left_nullspace,
    linear_combination,
    rank,
    rank_of_vectors,
    to_rational,
    unit_vector,
    zero_vector,
)
from processing.graded.local_algebra import LocalLieAlgebra


@dataclass(frozen=True)
class CartanPentad:
    """
    The datum (r, n; A, D, Gamma)

    Attributes:
        r: dimension of the commutative degree-0 algebra
        n: number of generators in each of degrees 1 and -1
        A: invertible r x r matrix defining B_A(x, y) = x * tA^-1 * y
        D: r x n matrix of weights
        gamma: the n nonzero diagonal entries of Gamma
    """

    r: int
    n: int
    A: QMatrix
    D: QMatrix
    gamma: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(to_rational(g) for g in self.gamma))
        if self.A.shape != (self.r, self.r):
            raise InvalidPentad(f"A must be {self.r}x{self.r}, got {self.A.rows}x{self.A.cols}")
        if self.D.shape != (self.r, self.n):
            raise InvalidPentad(f"D must be {self.r}x{self.n}, got {self.D.rows}x{self.D.cols}")
        if len(self.gamma) != self.n:
            raise InvalidPentad(f"Gamma must have {self.n} diagonal entries, got {len(self.gamma)}")
        if any(g == 0 for g in self.gamma):
            raise InvalidPentad("Gamma must be invertible (every diagonal entry nonzero)")
        if rank(self.A) != self.r:
            raise InvalidPentad(f"A must be invertible, has rank {rank(self.A)} < {self.r}")

    @classmethod
    def create(cls, A: Sequence[Sequence[RationalLike]], D: Sequence[Sequence[RationalLike]],
               gamma: Sequence[RationalLike]) -> "CartanPentad":
        """Build a pentad from nested lists, reading r and n off the shapes"""
        a = A if isinstance(A, QMatrix) else QMatrix(A)
        d = D if isinstance(D, QMatrix) else QMatrix(D, cols=len(gamma))
        return cls(r=a.rows, n=len(gamma), A=a, D=d, gamma=tuple(gamma))

    @property
    def gamma_matrix(self) -> QMatrix:
        return QMatrix.diagonal(self.gamma)

    @property
    def is_symmetric(self) -> bool:
        return self.A.is_symmetric()

    # -- serialization -----------------------------------------------------

    @classmethod
    def from_dict(cls, data: Dict) -> "CartanPentad":
        """Read the JSON pentad format; rationals are "p/q" strings or integers"""
        try:
            r, n = int(data["r"]), int(data["n"])
            a = QMatrix(data["A"], cols=r)
            d = QMatrix(data["D"], cols=n)
            gamma = tuple(to_rational(g) for g in data["Gamma"])
        except (KeyError, TypeError, ValueError) as e:
            raise InputFormatError(f"Malformed pentad: {e}") from e
        return cls(r=r, n=n, A=a, D=d, gamma=gamma)

    def to_dict(self) -> Dict:
        return {
            "r": self.r,
            "n": self.n,
            "A": self.A.to_strings(),
            "D": self.D.to_strings(),
            "Gamma": [format_rational(g) for g in self.gamma],
        }


@dataclass(frozen=True)
class StructureSummary:
    rankD: int
    rankC: int
    dimZ: int
    dimDelta: int
    symmetric: bool

    def to_dict(self) -> Dict:
        return {
            "rank_D": self.rankD,
            "rank_C": self.rankC,
            "dim_Z": self.dimZ,
            "dim_Delta": self.dimDelta,
            "symmetric": self.symmetric,
        }


@dataclass(frozen=True)
class StructureDecomposition:
    """
    Bases inside G0 = Q^r

    Attributes:
        coroot_span: independent coroots h_i spanning span{h_1, ..., h_n}
        center: combinations sum c_i h_i with c in the left kernel of C
        delta: standard basis vectors completing span{h_i} to Q^r; a choice, not canonical
    """

    coroot_span: Tuple[Vector, ...]
    center: Tuple[Vector, ...]
    delta: Tuple[Vector, ...]


def cartan_matrix(p: CartanPentad) -> QMatrix:
    """C = Gamma * tD * A * D"""
    return p.gamma_matrix @ p.D.T @ p.A @ p.D


def coroots(p: CartanPentad) -> List[Vector]:
    """h_i = i-th row of Gamma * tD * A, in eps-coordinates"""
    rows = p.gamma_matrix @ p.D.T @ p.A
    return [rows.row(i) for i in range(p.n)]


def bilinear_form(p: CartanPentad, x: Sequence[RationalLike], y: Sequence[RationalLike]) -> Fraction:
    """B_A(x, y) = x * tA^-1 * y"""
    if len(x) != p.r or len(y) != p.r:
        raise InvalidPentad(f"B_A takes vectors of length {p.r}")
    return dot([to_rational(v) for v in x], inverse(p.A).T.apply([to_rational(v) for v in y]))


def local_algebra(p: CartanPentad, name: str = "pentad") -> LocalLieAlgebra:
    h = coroots(p)
    pos_action = []
    neg_action = []
    for i in range(p.r):
        weights = p.D.row(i)
        pos_action.append(QMatrix.diagonal(weights))
        neg_action.append(QMatrix.diagonal([-w for w in weights]))
    pairing = [[h[i] if i == j else zero_vector(p.r) for j in range(p.n)] for i in range(p.n)]
    return LocalLieAlgebra.build(
        [f"f{j + 1}" for j in range(p.n)],
        [f"eps{i + 1}" for i in range(p.r)],
        [f"e{j + 1}" for j in range(p.n)],
        pos_action=pos_action,
        neg_action=neg_action,
        pairing=pairing,
        name=name,
    )


def structure_summary(p: CartanPentad) -> StructureSummary:
    rank_d = rank(p.D)
    rank_c = rank(cartan_matrix(p))
    return StructureSummary(
        rankD=rank_d,
        rankC=rank_c,
        dimZ=rank_d - rank_c,
        dimDelta=p.r - rank_d,
        symmetric=p.is_symmetric,
    )


def structure_decomposition(p: CartanPentad) -> StructureDecomposition:
    h = coroots(p)
    spanning = QMatrix(h, cols=p.r)
    independent = tuple(h[i] for i in independent_rows(spanning)) if p.n else ()
    center = []
    for c in left_nullspace(cartan_matrix(p)):
        z = linear_combination(c, h, p.r)
        if any(z) and rank_of_vectors(center + [z], p.r) > len(center):
            center.append(z)
    delta = tuple(unit_vector(p.r, i) for i in complement_basis(independent, p.r))
    return StructureDecomposition(coroot_span=independent, center=tuple(center), delta=delta)
