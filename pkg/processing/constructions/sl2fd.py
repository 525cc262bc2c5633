"""
Finite truncations of the graded Lie algebra built from sl2 acting on all of its
finite-dimensional irreducible representations

Indices are -1 or pairs (i, j) of non-negative integers, with -1 first and pairs
ordered lexicographically. For a finite index set M the local part has degree 0
spanned by h, degree 1 by x (index -1) and e-_{i,j}, degree -1 by y and e+_{i,j}:

    [h, x] = 2x, [h, e-_{i,j}] = -i e-_{i,j}, [x, y] = h,
    [e-_{i,j}, e+_{k,l}] = (-i/2) delta_{(i,j),(k,l)} h

and the matrices are A~ = (1/8), D~ = (2 | -i ...), Gamma~ = 4 * I, C~ = Gamma~ tD~ A~ D~.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import config
from processing.comparison import DimensionComparator
from processing.constructions.base_construction import BaseConstruction
from processing.constructions.contragredient import contragredient_local, reduced_local
from processing.errors import DegenerateIndexSet, InvalidIndex
from processing.exactq import QMatrix, Vector, nullspace, zero_vector
from processing.graded.analysis import LocalHomResult, degree0_center, local_hom_check, same_subspace
from processing.graded.expansion import expand
from processing.graded.local_algebra import LocalLieAlgebra
from processing.pentad import CartanPentad

log = logging.getLogger(__name__)

A_TILDE = Fraction(1, 8)
GAMMA_TILDE = Fraction(4)


@total_ordering
@dataclass(frozen=True)
class FDIndex:
    """-1 (pair is None) or a pair (i, j) with i, j >= 0"""

    pair: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if self.pair is not None:
            i, j = self.pair
            if any(isinstance(x, bool) or not isinstance(x, int) for x in (i, j)) or i < 0 or j < 0:
                raise InvalidIndex(f"Index pair must hold non-negative integers, got {self.pair}")

    @classmethod
    def minus_one(cls) -> "FDIndex":
        return cls(None)

    @classmethod
    def of(cls, i: int, j: int) -> "FDIndex":
        return cls((i, j))

    @property
    def is_minus_one(self) -> bool:
        return self.pair is None

    @property
    def i(self) -> Optional[int]:
        return None if self.pair is None else self.pair[0]

    def _key(self):
        return (0, 0, 0) if self.pair is None else (1,) + self.pair

    def __lt__(self, other: "FDIndex") -> bool:
        if not isinstance(other, FDIndex):
            return NotImplemented
        return self._key() < other._key()

    def __str__(self) -> str:
        return "(-1)" if self.pair is None else f"({self.pair[0]},{self.pair[1]})"


IndexLike = Union[FDIndex, int, Tuple[int, int]]


def _as_index(value: IndexLike) -> FDIndex:
    if isinstance(value, FDIndex):
        return value
    if isinstance(value, int) and not isinstance(value, bool) and value == -1:
        return FDIndex.minus_one()
    if isinstance(value, tuple) and len(value) == 2:
        return FDIndex.of(*value)
    raise InvalidIndex(f"Not an index: {value!r}")


_PAIR = re.compile(r"\(\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\)")


class FDIndexSet(tuple):
    """A nonempty, sorted, duplicate-free tuple of FDIndex"""

    def __new__(cls, indices: Iterable[IndexLike]):
        items = sorted({_as_index(v) for v in indices})
        if not items:
            raise InvalidIndex("Index set must be nonempty")
        return super().__new__(cls, items)

    @classmethod
    def parse(cls, text: str) -> "FDIndexSet":
        """
        Parse the command-line syntax "(-1),(1,0),(2,0)"

        Raises:
            InvalidIndex: on malformed text, negative pair entries, entries above
                config.MAX_INDEX_ENTRY, or an empty set
        """
        stripped = text.strip()
        matches = list(_PAIR.finditer(stripped))
        rebuilt = ",".join(m.group(0) for m in matches)
        if not matches or re.sub(r"\s", "", rebuilt) != re.sub(r"\s", "", stripped):
            raise InvalidIndex(f"Cannot parse index set {text!r}; expected e.g. \"(-1),(1,0)\"")
        indices = []
        for m in matches:
            first, second = m.group(1), m.group(2)
            if second is None:
                if int(first) != -1:
                    raise InvalidIndex(f"Single-entry index must be (-1), got ({first})")
                indices.append(FDIndex.minus_one())
                continue
            i, j = int(first), int(second)
            if max(i, j) > config.MAX_INDEX_ENTRY:
                raise InvalidIndex(f"Index ({i},{j}) exceeds MAX_INDEX_ENTRY = {config.MAX_INDEX_ENTRY}")
            indices.append(FDIndex.of(i, j))
        return cls(indices)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self)

    @property
    def is_degenerate(self) -> bool:
        """True when -1 is absent and every pair has i = 0"""
        return all(not a.is_minus_one and a.i == 0 for a in self)


def dtilde_entry(alpha: IndexLike) -> Fraction:
    alpha = _as_index(alpha)
    return Fraction(2) if alpha.is_minus_one else Fraction(-alpha.i)


def ctilde_entry(alpha: IndexLike, beta: IndexLike) -> Fraction:
    """2 at (-1, -1), -i when one index is (i, j) and the other -1, ik/2 for two pairs"""
    return GAMMA_TILDE * A_TILDE * dtilde_entry(alpha) * dtilde_entry(beta)


def dtilde_row(m: FDIndexSet) -> QMatrix:
    return QMatrix([[dtilde_entry(a) for a in m]], cols=len(m))


def ctilde_minor(m: FDIndexSet) -> QMatrix:
    return QMatrix([[ctilde_entry(a, b) for b in m] for a in m], cols=len(m))


def truncation_pentad(m: FDIndexSet) -> CartanPentad:
    """(1, |M|; (1/8), D~ restricted to M, 4 * I)"""
    return CartanPentad(r=1, n=len(m), A=QMatrix([[A_TILDE]]), D=dtilde_row(m), gamma=(GAMMA_TILDE,) * len(m))


def irreducible_pentad(n: int) -> CartanPentad:
    """(1, 2; (1/8), (2, -n), diag(4, 4)), sl2 with its (n + 1)-dimensional irreducible representation"""
    if n < 0:
        raise InvalidIndex(f"Highest weight must be non-negative, got {n}")
    return truncation_pentad(FDIndexSet([-1, (n, 0)]))


def _labels(m: FDIndexSet) -> Tuple[List[str], List[str]]:
    pos = ["x" if a.is_minus_one else f"e-{a}" for a in m]
    neg = ["y" if a.is_minus_one else f"e+{a}" for a in m]
    return pos, neg


def sl2fd_local(m: FDIndexSet) -> LocalLieAlgebra:
    d = [dtilde_entry(a) for a in m]
    size = len(m)
    pos_labels, neg_labels = _labels(m)
    # [x, y] = h and [e-, e+] = (-i/2) h are both d~/2 times h
    pairing = [[(d[a] / 2,) if a == b else zero_vector(1) for b in range(size)] for a in range(size)]
    return LocalLieAlgebra.build(
        neg_labels,
        ["h"],
        pos_labels,
        pos_action=[QMatrix.diagonal(d)],
        neg_action=[QMatrix.diagonal([-v for v in d])],
        pairing=pairing,
        name=f"sl2fd[{m}]",
    )


@dataclass(frozen=True)
class PhiMap:
    """
    The local map from the contragredient local part of C~^M onto sl2fd_local(M)

    Attributes:
        neg, zero, pos: matrices in degrees -1, 0, 1 (target x source)
        kernel: basis of the kernel of the degree-0 part, in h_alpha coordinates
    """

    neg: QMatrix
    zero: QMatrix
    pos: QMatrix
    kernel: Tuple[Vector, ...]

    @property
    def maps(self) -> Tuple[QMatrix, QMatrix, QMatrix]:
        return self.neg, self.zero, self.pos


def phi_map(m: FDIndexSet) -> PhiMap:
    """f_a -> y or e+, e_a -> x or e-, h_-1 -> h, h_(i,j) -> (-i/2) h"""
    size = len(m)
    zero = QMatrix([[dtilde_entry(a) / 2 for a in m]], cols=size)
    identity = QMatrix.identity(size)
    return PhiMap(neg=identity, zero=zero, pos=identity, kernel=tuple(nullspace(zero)))


@dataclass
class ReducedComparison:
    """Outcome of comparing a truncation with the reduced contragredient algebra of its minor"""

    index_set: str
    max_degree: int
    dims_truncation: Dict[int, int]
    dims_reduced: Dict[int, int]
    dims_agree: bool
    hom: LocalHomResult
    kernel_is_center: bool

    @property
    def ok(self) -> bool:
        return self.dims_agree and self.hom.ok and self.kernel_is_center

    def to_dict(self) -> Dict:
        return {
            "indices": self.index_set,
            "max_degree": self.max_degree,
            "truncation": {str(k): v for k, v in sorted(self.dims_truncation.items())},
            "reduced": {str(k): v for k, v in sorted(self.dims_reduced.items())},
            "dims_agree": self.dims_agree,
            "local_hom": self.hom.ok,
            "kernel_is_center": self.kernel_is_center,
            "ok": self.ok,
        }


def compare_with_reduced(m: FDIndexSet, max_degree: int) -> ReducedComparison:
    """
    Compare sl2fd_local(M) with G'(C~^M) up to |degree| <= max_degree

    Raises:
        DegenerateIndexSet: if -1 is not in M and every pair has i = 0
    """
    if m.is_degenerate:
        raise DegenerateIndexSet(f"Every index of {m} has i = 0 and -1 is absent; phi misses degree 0")
    c = ctilde_minor(m)
    truncation = expand(sl2fd_local(m), max_degree)
    reduced = expand(reduced_local(c), max_degree)
    table = DimensionComparator().compare_tables(
        {"truncation": truncation.dimensions(), "reduced": reduced.dimensions()}
    )

    phi = phi_map(m)
    source = contragredient_local(c)
    hom = local_hom_check(source, sl2fd_local(m), phi.maps)
    center = degree0_center(expand(source, 1))
    kernel_is_center = hom.ok and same_subspace(hom.kernel[0], center, len(m))
    log.info("sl2fd %s: dims %s, hom %s, kernel = center %s",
             m, "agree" if table["agree"] else "differ", hom.ok, kernel_is_center)
    return ReducedComparison(
        index_set=str(m),
        max_degree=max_degree,
        dims_truncation=truncation.dimensions(),
        dims_reduced=reduced.dimensions(),
        dims_agree=table["agree"],
        hom=hom,
        kernel_is_center=kernel_is_center,
    )


class SL2FDConstruction(BaseConstruction):
    """The truncation of the sl2 finite-dimensional algebra to an index set"""

    def __init__(self, indices: Union[FDIndexSet, Sequence[IndexLike], str]):
        if isinstance(indices, str):
            indices = FDIndexSet.parse(indices)
        elif not isinstance(indices, FDIndexSet):
            indices = FDIndexSet(indices)
        super().__init__(f"sl2fd[{indices}]")
        self.indices = indices

    def build_local(self) -> LocalLieAlgebra:
        return sl2fd_local(self.indices)

    def minor(self) -> QMatrix:
        return ctilde_minor(self.indices)

    def compare(self, max_degree: int) -> ReducedComparison:
        return compare_with_reduced(self.indices, max_degree)
