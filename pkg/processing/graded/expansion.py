"""
Minimal graded Lie algebra expansion of a local Lie algebra

The positive side is built degree by degree: V_1 = G1 and
V_{k+1} = (V_k (x) G1) / ker T_k, where T_k(u (x) e)(f) = [u, [e, f]] + [[u, f], e]
lands in Hom(G-1, V_k). V_{k+1} is stored as the image of T_k, so the bracket with
G-1 is read off directly and transitivity holds by construction. The negative side
is the same construction with the roles of G1 and G-1 exchanged.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import config
from processing.errors import DimensionMismatch, ExpansionLimitExceeded, InvalidLocal, OutOfRange
from processing.exactq import (
    QMatrix,
    Vector,
    ZERO,
    linear_combination,
    row_reduce,
    support,
    vec_add,
    vec_scale,
    vec_sub,
    zero_vector,
)
from processing.graded.local_algebra import LocalLieAlgebra, validate_local

log = logging.getLogger(__name__)


@dataclass
class GradedSide:
    """
    One side (positive or negative) of a graded Lie algebra, in absolute degrees

    Attributes:
        sign: +1 for V_1, V_2, ...; -1 for V_-1, V_-2, ...
        dims: dims[k] = dim V_{sign*k} for 1 <= k <= computed degree
        rho: rho[k][a] = matrix of ad(a) on V_{sign*k}, a running over the G0 basis
        beta: beta[k][j] = matrix of x -> [x, g_j] from V_{sign*k} to V_{sign*(k-1)},
            g_j running over the opposite generators (for k = 1 the target is G0)
        mu: mu[k][g] = matrix of x -> [x, g] from V_{sign*k} to V_{sign*(k+1)}
        sections: sections[k][s] = (u, g): basis vector s of V_{sign*k} is [u, g]
            with u a basis index of V_{sign*(k-1)} and g an own generator (k >= 2)
        transitions: transitions[k] = matrix of T_k (rows (j, v), columns (u, g))
        terminated_at: first degree k with dims[k] = 0, or None
    """

    sign: int
    dims: Dict[int, int] = field(default_factory=dict)
    rho: Dict[int, List[QMatrix]] = field(default_factory=dict)
    beta: Dict[int, List[QMatrix]] = field(default_factory=dict)
    mu: Dict[int, List[QMatrix]] = field(default_factory=dict)
    sections: Dict[int, List[Tuple[int, int]]] = field(default_factory=dict)
    transitions: Dict[int, QMatrix] = field(default_factory=dict)
    terminated_at: Optional[int] = None

    @property
    def terminated(self) -> bool:
        return self.terminated_at is not None

    def dim(self, k: int) -> int:
        if self.terminated_at is not None and k >= self.terminated_at:
            return 0
        return self.dims[k]


@dataclass(frozen=True)
class _Orientation:
    """Local data seen from one side: own generators, opposite generators, their pairing"""

    own_action: Tuple[QMatrix, ...]
    opp_action: Tuple[QMatrix, ...]
    pairing: Tuple[Tuple[Vector, ...], ...]  # pairing[g][j] = [g, opp_j] in G0
    dim0: int

    @property
    def n_own(self) -> int:
        return len(self.pairing)


def _orient(local: LocalLieAlgebra, sign: int) -> _Orientation:
    if sign > 0:
        return _Orientation(local.pos_action, local.neg_action, local.pairing, local.dim0)
    flipped = tuple(
        tuple(tuple(-c for c in local.pairing[i][j]) for i in range(local.dim_pos))
        for j in range(local.dim_neg)
    )
    return _Orientation(local.neg_action, local.pos_action, flipped, local.dim0)


class _SideBuilder:
    """Private, single-threaded builder for one side of an expansion"""

    def __init__(self, local: LocalLieAlgebra, sign: int, budget: "_Budget"):
        self.local = local
        self.data = _orient(local, sign)
        self.side = GradedSide(sign=sign)
        self.budget = budget
        self.n_opp = local.dim_neg if sign > 0 else local.dim_pos

    def start(self) -> None:
        data, side = self.data, self.side
        n0, n_own = data.dim0, data.n_own
        side.dims[1] = n_own
        side.rho[1] = list(data.own_action)
        side.beta[1] = [
            QMatrix.from_columns([data.pairing[g][j] for g in range(n_own)], n0)
            for j in range(self.n_opp)
        ]
        self.budget.spend(n_own)
        if n_own == 0:
            side.terminated_at = 1

    def _attach_map(self, k: int, g: int) -> QMatrix:
        """Matrix of w -> [w, g] from V_{k-1} to V_k (G0 to G1 when k = 1)"""
        data, side = self.data, self.side
        if k == 1:
            return QMatrix.from_columns([data.own_action[a].column(g) for a in range(data.dim0)], side.dims[1])
        return side.mu[k - 1][g]

    def step(self, k: int) -> None:
        """Build V_{k+1} from V_k"""
        data, side = self.data, self.side
        d, n_own, n_opp = side.dims[k], data.n_own, self.n_opp
        ncols = d * n_own

        # row (j, v), column (u, g): coordinate v of T_k(u (x) g)(opp_j)
        rows = [[ZERO] * ncols for _ in range(n_opp * d)]
        for j in range(n_opp):
            block = rows[j * d:(j + 1) * d]
            for g in range(n_own):
                outer = self._attach_map(k, g) @ side.beta[k][j]
                for v, target in enumerate(block):
                    for u, value in support(outer.row(v)):
                        target[u * n_own + g] += value
                for a, coeff in support(data.pairing[g][j]):
                    rho = side.rho[k][a]
                    for v, target in enumerate(block):
                        for u, value in support(rho.row(v)):
                            target[u * n_own + g] -= coeff * value
        side.transitions[k] = QMatrix._wrap(rows, ncols)

        reduced, pivots = row_reduce(rows, ncols)
        new_dim = len(pivots)
        log.debug("side %+d degree %d: tensor dim %d, kernel dim %d, new dim %d",
                  side.sign, k + 1, ncols, ncols - new_dim, new_dim)
        side.dims[k + 1] = new_dim
        side.sections[k + 1] = [(p // n_own, p % n_own) for p in pivots]
        side.mu[k] = [
            QMatrix._wrap([[reduced[s][u * n_own + g] for u in range(d)] for s in range(new_dim)], d)
            for g in range(n_own)
        ]
        side.beta[k + 1] = [
            QMatrix._wrap([[rows[j * d + v][p] for p in pivots] for v in range(d)], new_dim)
            for j in range(n_opp)
        ]
        side.rho[k + 1] = [self._induced_action(k, a) for a in range(data.dim0)]
        self.budget.spend(new_dim)
        if new_dim == 0:
            side.terminated_at = k + 1

    def _induced_action(self, k: int, a: int) -> QMatrix:
        """ad(a) on V_{k+1}: [a, [u, g]] = [[a, u], g] + [u, [a, g]]"""
        data, side = self.data, self.side
        d, new_dim = side.dims[k], side.dims[k + 1]
        sections = side.sections[k + 1]
        columns: List[Vector] = [()] * new_dim
        for g in range(data.n_own):
            # one product per generator, restricted to the sections ending in g
            slots = [s for s, (_, g_s) in enumerate(sections) if g_s == g]
            if not slots:
                continue
            us = [sections[s][0] for s in slots]
            moved = side.mu[k][g] @ side.rho[k][a].submatrix(range(d), us)
            extra = support(data.own_action[a].column(g))
            for c, (s, u) in enumerate(zip(slots, us)):
                column = moved.column(c)
                for g2, coeff in extra:
                    column = vec_add(column, vec_scale(coeff, side.mu[k][g2].column(u)))
                columns[s] = column
        return QMatrix._wrap([[columns[s][t] for s in range(new_dim)] for t in range(new_dim)], new_dim)


class _Budget:
    def __init__(self, limit: int, used: int):
        self.limit = limit
        self.used = used

    def spend(self, amount: int) -> None:
        self.used += amount
        if self.used > self.limit:
            raise ExpansionLimitExceeded(
                f"Total basis size {self.used} exceeds PENTAD_MAX_DIM = {self.limit}"
            )


class GradedAlgebra:
    """
    A minimal graded Lie algebra computed up to |degree| <= cutoff

    Values are read-only after expansion; bracket tables are memoized per degree pair.
    """

    def __init__(self, local: LocalLieAlgebra, cutoff: int, pos: GradedSide, neg: GradedSide):
        self.local = local
        self.cutoff = cutoff
        self.pos = pos
        self.neg = neg
        self._tables: Dict[Tuple[int, int], List[List[Vector]]] = {}

    # -- dimensions --------------------------------------------------------

    @property
    def terminated_pos(self) -> bool:
        return self.pos.terminated

    @property
    def terminated_neg(self) -> bool:
        return self.neg.terminated

    def side(self, degree: int) -> GradedSide:
        return self.pos if degree > 0 else self.neg

    def dim(self, degree: int) -> int:
        if degree == 0:
            return self.local.dim0
        side = self.side(degree)
        k = abs(degree)
        if side.terminated_at is not None and k >= side.terminated_at:
            return 0
        if k > self.cutoff:
            raise OutOfRange(f"Degree {degree} is beyond the cutoff {self.cutoff}")
        return side.dims[k]

    def in_range(self, degree: int) -> bool:
        if abs(degree) <= self.cutoff:
            return True
        side = self.side(degree)
        return side.terminated_at is not None and abs(degree) >= side.terminated_at

    def dimensions(self) -> Dict[int, int]:
        return {k: self.dim(k) for k in range(-self.cutoff, self.cutoff + 1)}

    def total_dim(self) -> int:
        return sum(self.dimensions().values())

    # -- brackets ----------------------------------------------------------

    def bracket(self, m: int, x: Sequence[Fraction], k: int, y: Sequence[Fraction]) -> Vector:
        """
        [x, y] for x in V_m and y in V_k, returned in V_{m+k} coordinates

        Raises:
            OutOfRange: when m, k or m + k lies beyond the cutoff on a side that has
                not terminated
        """
        for degree in (m, k, m + k):
            if not self.in_range(degree):
                raise OutOfRange(f"Bracket of degrees {m} and {k} needs degree {degree} > cutoff {self.cutoff}")
        if len(x) != self.dim(m) or len(y) != self.dim(k):
            raise DimensionMismatch(f"Coordinates do not match dim V_{m} = {self.dim(m)}, dim V_{k} = {self.dim(k)}")
        target = self.dim(m + k)
        if target == 0:
            return ()
        table = self.bracket_table(m, k)
        acc = [ZERO] * target
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = xi * yj
                for t, value in enumerate(table[i][j]):
                    if value:
                        acc[t] += c * value
        return tuple(acc)

    def bracket_table(self, m: int, k: int) -> List[List[Vector]]:
        """table[i][j] = [b_i, b_j] for the bases of V_m and V_k"""
        key = (m, k)
        cached = self._tables.get(key)
        if cached is None:
            cached = self._compute_table(m, k)
            self._tables[key] = cached
        return cached

    def _zero_table(self, m: int, k: int) -> List[List[Vector]]:
        target = self.dim(m + k)
        return [[zero_vector(target)] * self.dim(k) for _ in range(self.dim(m))]

    def _apply_left(self, m: int, k: int, x: Sequence[Fraction], j: int) -> Vector:
        """[x, b_j] for x in V_m (coordinates) and b_j a basis vector of V_k"""
        table = self.bracket_table(m, k)
        return linear_combination(x, [row[j] for row in table], self.dim(m + k))

    def _apply_right(self, m: int, k: int, i: int, y: Sequence[Fraction]) -> Vector:
        """[b_i, y] for b_i a basis vector of V_m and y in V_k (coordinates)"""
        table = self.bracket_table(m, k)
        return linear_combination(y, table[i], self.dim(m + k))

    def _compute_table(self, m: int, k: int) -> List[List[Vector]]:
        dm, dk = self.dim(m), self.dim(k)
        if dm == 0 or dk == 0 or self.dim(m + k) == 0:
            return self._zero_table(m, k)
        local = self.local

        if m == 0 and k == 0:
            return [[local.zero_bracket[a][b] for b in range(dk)] for a in range(dm)]
        if m == 0:
            rho = self.side(k).rho[abs(k)]
            return [[rho[a].column(j) for j in range(dk)] for a in range(dm)]
        if k == 0:
            swapped = self.bracket_table(0, m)
            return [[tuple(-c for c in swapped[a][i]) for a in range(dk)] for i in range(dm)]

        s = 1 if m > 0 else -1
        if (k > 0) == (m > 0):
            if abs(k) == 1:
                mu = self.side(m).mu[abs(m)]
                return [[mu[g].column(i) for g in range(dk)] for i in range(dm)]
            # [x, [u, g]] = [[x, u], g] - [[x, g], u]
            sections = self.side(k).sections[abs(k)]
            table = []
            for i in range(dm):
                row = []
                for u, g in sections:
                    first = self._apply_left(m + k - s, s, self.bracket_table(m, k - s)[i][u], g)
                    second = self._apply_left(m + s, k - s, self.bracket_table(m, s)[i][g], u)
                    row.append(vec_sub(first, second))
                table.append(row)
            return table

        if abs(m) == 1:
            # [g, y] = -[y, g]
            beta = self.side(k).beta[abs(k)]
            return [[tuple(-c for c in beta[g].column(j)) for j in range(dk)] for g in range(dm)]
        # [[u, g], y] = [u, [g, y]] + [[u, y], g]
        sections = self.side(m).sections[abs(m)]
        table = []
        for u, g in sections:
            row = []
            for j in range(dk):
                first = self._apply_right(m - s, s + k, u, self.bracket_table(s, k)[g][j])
                second = self._apply_left(m - s + k, s, self.bracket_table(m - s, k)[u][j], g)
                row.append(vec_add(first, second))
            table.append(row)
        return table


def expand(local: LocalLieAlgebra, max_degree: int, max_total_dim: Optional[int] = None) -> GradedAlgebra:
    """
    Expand a local Lie algebra into its minimal graded Lie algebra up to |degree| <= max_degree

    Args:
        local: the local part; must pass validate_local
        max_degree: cutoff N >= 1
        max_total_dim: cap on the total basis size (defaults to config.PENTAD_MAX_DIM)

    Returns:
        GradedAlgebra with both sides computed up to the cutoff or their termination
    """
    if max_degree < 1:
        raise OutOfRange(f"Expansion cutoff must be at least 1, got {max_degree}")
    failures = validate_local(local)
    if failures:
        raise InvalidLocal(f"{local.name}: local axioms fail: {', '.join(failures)}")
    limit = config.PENTAD_MAX_DIM if max_total_dim is None else max_total_dim
    budget = _Budget(limit, local.dim0)

    sides = []
    for sign in (1, -1):
        builder = _SideBuilder(local, sign, budget)
        builder.start()
        for k in range(1, max_degree):
            if builder.side.terminated:
                break
            builder.step(k)
        sides.append(builder.side)
        log.info("%s: side %+d dims %s%s", local.name, sign, [builder.side.dim(k) for k in range(1, max_degree + 1)],
                 " (terminated)" if builder.side.terminated else "")
    return GradedAlgebra(local, max_degree, sides[0], sides[1])
