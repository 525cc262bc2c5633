"""
Pentads of Cartan type realizing G(C), G'(C), g(C) and the derived algebra of g(C)

Four realization modes:
    invertible     (n, n; C, I, I) for invertible C
    symmetrizable  (l, n; Q, P1, Gamma) from C = Gamma * S and S = tP1 * Q * P1
    full_km        (2n - l, n; A, [I; 0], I) with A a bordered completion of C
    derived        the full_km pentad, reporting the dimensions of its derived algebra
"""
import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from processing.constructions.base_construction import PentadConstruction
from processing.errors import CompletionFailed, NotSquare, NotSymmetrizable, SingularMatrix
from processing.exactq import (
    ONE,
    QMatrix,
    Vector,
    complement_basis,
    decompose_symmetric,
    determinant,
    dot,
    format_rational,
    rank,
    unit_vector,
)
from processing.graded.analysis import derived_dims
from processing.graded.expansion import expand
from processing.pentad import CartanPentad, cartan_matrix, coroots, local_algebra

log = logging.getLogger(__name__)

MODES = ("invertible", "symmetrizable", "full_km", "derived")


def _require_square(c: QMatrix) -> int:
    if not c.is_square():
        raise NotSquare(f"Cartan matrix must be square, got {c.rows}x{c.cols}")
    return c.rows


def realize_invertible(c: QMatrix) -> CartanPentad:
    """(n, n; C, I, I): its Cartan matrix is C and both Z and Delta vanish"""
    n = _require_square(c)
    if rank(c) < n:
        raise SingularMatrix(f"C has rank {rank(c)} < {n}; use the symmetrizable or full-km mode")
    return CartanPentad(r=n, n=n, A=c, D=QMatrix.identity(n), gamma=(ONE,) * n)


def symmetrize(c: QMatrix) -> Tuple[Tuple[Fraction, ...], QMatrix]:
    """
    Find Gamma diagonal and S symmetric with C = Gamma * S

    gamma is propagated along a spanning forest of the graph with an edge i - j
    whenever C_ij != 0, starting from gamma = 1 on every component root, using
    gamma_j = gamma_i * C_ji / C_ij. Non-tree edges are checked afterwards.

    Returns:
        (gamma, S)
    """
    n = _require_square(c)
    for i in range(n):
        for j in range(i + 1, n):
            if (c[i, j] == 0) != (c[j, i] == 0):
                raise NotSymmetrizable(f"C[{i + 1},{j + 1}] and C[{j + 1},{i + 1}] differ in being zero")

    gamma: List[Optional[Fraction]] = [None] * n
    for root in range(n):
        if gamma[root] is not None:
            continue
        gamma[root] = ONE
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j != i and c[i, j] != 0 and gamma[j] is None:
                    gamma[j] = gamma[i] * c[j, i] / c[i, j]
                    queue.append(j)

    s = QMatrix([[c[i, j] / gamma[i] for j in range(n)] for i in range(n)], cols=n)
    if not s.is_symmetric():
        bad = next((i, j) for i in range(n) for j in range(i + 1, n) if s[i, j] != s[j, i])
        raise NotSymmetrizable(f"Cycle through indices {bad[0] + 1} and {bad[1] + 1} is inconsistent")
    return tuple(gamma), s


def realize_symmetrizable(c: QMatrix) -> CartanPentad:
    """(l, n; Q, P1, Gamma) with A = Q symmetric, so Z and Delta vanish"""
    n = _require_square(c)
    gamma, s = symmetrize(c)
    p1, q = decompose_symmetric(s)
    log.debug("symmetrized with Gamma = %s, rank %d", [format_rational(g) for g in gamma], q.rows)
    return CartanPentad(r=q.rows, n=n, A=q, D=p1, gamma=gamma)


def complete_to_invertible(c: QMatrix) -> QMatrix:
    """
    Border C to an invertible (2n - l) x (2n - l) matrix [[C, N], [tN', 0]]

    N holds the standard basis vectors completing the column space of C, N' those
    completing its row space.
    """
    n = _require_square(c)
    l = rank(c)
    if l == n:
        return c
    col_extra = complement_basis([c.column(j) for j in range(n)], n)
    row_extra = complement_basis([c.row(i) for i in range(n)], n)
    k = n - l
    top = [list(c.row(i)) + [1 if i == col_extra[t] else 0 for t in range(k)] for i in range(n)]
    bottom = [list(unit_vector(n, row_extra[t])) + [0] * k for t in range(k)]
    a = QMatrix(top + bottom, cols=n + k)
    if determinant(a) == 0:
        raise CompletionFailed(f"Bordered completion of a rank {l} matrix of order {n} is singular")
    return a


def realize_full_km(c: QMatrix) -> Tuple[CartanPentad, "RealizationCertificate"]:
    """(2n - l, n; A, [I; 0], I), the pentad whose PC Lie algebra is g(C)"""
    n = _require_square(c)
    a = complete_to_invertible(c)
    r = a.rows
    d = QMatrix([unit_vector(n, i) if i < n else (0,) * n for i in range(r)], cols=n)
    pentad = CartanPentad(r=r, n=n, A=a, D=d, gamma=(ONE,) * n)
    return pentad, certificate_for(c, pentad, "full_km")


def derived_realization(c: QMatrix, max_degree: int) -> Dict[int, int]:
    """Dimensions of the derived algebra of the full Kac-Moody realization, per degree"""
    pentad, _ = realize_full_km(c)
    ga = expand(local_algebra(pentad, name="g(C)"), max_degree)
    return derived_dims(ga)


@dataclass(frozen=True)
class Realization:
    """
    A realization (h, simple roots, coroots) of C

    Attributes:
        dim_h: 2n - rank C
        simple_roots: alpha_j as coordinate functionals on h = Q^(2n-l)
        coroots: h_i in the same coordinates
    """

    dim_h: int
    simple_roots: Tuple[Vector, ...]
    coroots: Tuple[Vector, ...]

    def pairing_matrix(self) -> QMatrix:
        """(alpha_j(h_i))_ij"""
        n = len(self.coroots)
        return QMatrix(
            [[dot(self.simple_roots[j], self.coroots[i]) for j in range(n)] for i in range(n)],
            cols=n,
        )


def realization(c: QMatrix) -> Realization:
    """
    Read the realization triple off the full Kac-Moody pentad

    alpha_j is the j-th column of D (acting on eps-coordinates) and h_i is the
    i-th coroot, so alpha_j(h_i) = (Gamma * tD * A * D)_ij = C_ij.
    """
    pentad, _ = realize_full_km(c)
    roots = tuple(pentad.D.column(j) for j in range(pentad.n))
    return Realization(dim_h=pentad.r, simple_roots=roots, coroots=tuple(coroots(pentad)))


@dataclass(frozen=True)
class RealizationCertificate:
    mode: str
    pentad: CartanPentad
    cartan_round_trip: bool
    coroots_independent: bool
    alpha_independent: bool
    dim0: int
    rank_C: int

    @property
    def ok(self) -> bool:
        if not self.cartan_round_trip:
            return False
        if self.mode in ("full_km", "derived"):
            n = self.pentad.n
            return self.coroots_independent and self.alpha_independent and self.dim0 == 2 * n - self.rank_C
        return True

    def to_dict(self) -> Dict:
        return {
            "mode": self.mode,
            "cartan_round_trip": self.cartan_round_trip,
            "coroots_independent": self.coroots_independent,
            "alpha_independent": self.alpha_independent,
            "rank_D": rank(self.pentad.D),
            "rank_C": self.rank_C,
            "dim0": self.dim0,
            "ok": self.ok,
        }


def certificate_for(c: QMatrix, pentad: CartanPentad, mode: str) -> RealizationCertificate:
    if mode not in MODES:
        raise ValueError(f"Unknown realization mode: {mode}")
    h = coroots(pentad)
    cert = RealizationCertificate(
        mode=mode,
        pentad=pentad,
        cartan_round_trip=cartan_matrix(pentad) == c,
        coroots_independent=rank(QMatrix(h, cols=pentad.r)) == pentad.n,
        alpha_independent=rank(pentad.D) == pentad.n,
        dim0=pentad.r,
        rank_C=rank(c),
    )
    log.info("%s certificate: %s", mode, "ok" if cert.ok else "FAILED")
    return cert


def realize(c: QMatrix, mode: str) -> Tuple[CartanPentad, RealizationCertificate]:
    """Dispatch on the realization mode; derived uses the full_km pentad"""
    if mode == "invertible":
        pentad = realize_invertible(c)
    elif mode == "symmetrizable":
        pentad = realize_symmetrizable(c)
    elif mode in ("full_km", "derived"):
        pentad, _ = realize_full_km(c)
    else:
        raise ValueError(f"Unknown realization mode: {mode}")
    return pentad, certificate_for(c, pentad, mode)


class KMRealization(PentadConstruction):
    """PC Lie algebra of the pentad realizing C in one of the four modes"""

    def __init__(self, c: QMatrix, mode: str = "full_km"):
        pentad, certificate = realize(c, mode)
        super().__init__(pentad, name=f"{mode}(C)")
        self.c = c
        self.mode = mode
        self.certificate = certificate
