"""
Local Lie algebras G-1 + G0 + G1 and their axiom check
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from processing.errors import DimensionMismatch
from processing.exactq import (
    QMatrix,
    Vector,
    is_zero_vector,
    linear_combination,
    unit_vector,
    vec_add,
    vec_sub,
    zero_vector,
)


@dataclass(frozen=True)
class LocalLieAlgebra:
    """
    Structure constants of a local Lie algebra

    Attributes:
        neg_labels, zero_labels, pos_labels: basis labels of G-1, G0, G1
        zero_bracket: zero_bracket[a][b] = [a, b] in G0 coordinates
        pos_action: pos_action[a] is the matrix of ad(a) on G1 (column j = [a, e_j])
        neg_action: neg_action[a] is the matrix of ad(a) on G-1
        pairing: pairing[i][j] = [e_i, f_j] in G0 coordinates; [f_j, e_i] is its negative
    """

    neg_labels: Tuple[str, ...]
    zero_labels: Tuple[str, ...]
    pos_labels: Tuple[str, ...]
    zero_bracket: Tuple[Tuple[Vector, ...], ...]
    pos_action: Tuple[QMatrix, ...]
    neg_action: Tuple[QMatrix, ...]
    pairing: Tuple[Tuple[Vector, ...], ...]
    name: str = "local"

    def __post_init__(self):
        n0, npos, nneg = len(self.zero_labels), len(self.pos_labels), len(self.neg_labels)
        if len(self.zero_bracket) != n0 or any(
            len(row) != n0 or any(len(v) != n0 for v in row) for row in self.zero_bracket
        ):
            raise DimensionMismatch(f"{self.name}: [G0, G0] table must be {n0} x {n0} of G0 vectors")
        if len(self.pos_action) != n0 or any(m.shape != (npos, npos) for m in self.pos_action):
            raise DimensionMismatch(f"{self.name}: G0 action on G1 must be {n0} matrices of size {npos}")
        if len(self.neg_action) != n0 or any(m.shape != (nneg, nneg) for m in self.neg_action):
            raise DimensionMismatch(f"{self.name}: G0 action on G-1 must be {n0} matrices of size {nneg}")
        if len(self.pairing) != npos or any(
            len(row) != nneg or any(len(v) != n0 for v in row) for row in self.pairing
        ):
            raise DimensionMismatch(f"{self.name}: [G1, G-1] table must be {npos} x {nneg} of G0 vectors")

    @classmethod
    def build(cls, neg_labels: Sequence[str], zero_labels: Sequence[str], pos_labels: Sequence[str],
              pos_action: Sequence[QMatrix], neg_action: Sequence[QMatrix],
              pairing: Sequence[Sequence[Sequence[Fraction]]],
              zero_bracket: Optional[Sequence[Sequence[Sequence[Fraction]]]] = None,
              name: str = "local") -> "LocalLieAlgebra":
        n0 = len(zero_labels)
        if zero_bracket is None:
            zero_bracket = [[zero_vector(n0)] * n0 for _ in range(n0)]
        return cls(
            neg_labels=tuple(neg_labels),
            zero_labels=tuple(zero_labels),
            pos_labels=tuple(pos_labels),
            zero_bracket=tuple(tuple(tuple(v) for v in row) for row in zero_bracket),
            pos_action=tuple(pos_action),
            neg_action=tuple(neg_action),
            pairing=tuple(tuple(tuple(v) for v in row) for row in pairing),
            name=name,
        )

    @classmethod
    def abelian(cls, dim_neg: int, dim0: int, dim_pos: int, name: str = "abelian") -> "LocalLieAlgebra":
        return cls.build(
            [f"f{j + 1}" for j in range(dim_neg)],
            [f"h{a + 1}" for a in range(dim0)],
            [f"e{i + 1}" for i in range(dim_pos)],
            pos_action=[QMatrix.zeros(dim_pos, dim_pos)] * dim0,
            neg_action=[QMatrix.zeros(dim_neg, dim_neg)] * dim0,
            pairing=[[zero_vector(dim0)] * dim_neg for _ in range(dim_pos)],
            name=name,
        )

    @property
    def dim_neg(self) -> int:
        return len(self.neg_labels)

    @property
    def dim0(self) -> int:
        return len(self.zero_labels)

    @property
    def dim_pos(self) -> int:
        return len(self.pos_labels)

    # brackets of arbitrary elements, given in coordinates

    def bracket_00(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        acc = zero_vector(self.dim0)
        for a, ua in enumerate(u):
            if ua == 0:
                continue
            for b, vb in enumerate(v):
                if vb:
                    acc = vec_add(acc, tuple(ua * vb * c for c in self.zero_bracket[a][b]))
        return acc

    def act_pos(self, w: Sequence[Fraction], x: Sequence[Fraction]) -> Vector:
        """[w, x] for w in G0, x in G1"""
        images = [m.apply(x) for m in self.pos_action]
        return linear_combination(w, images, self.dim_pos)

    def act_neg(self, w: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        """[w, y] for w in G0, y in G-1"""
        images = [m.apply(y) for m in self.neg_action]
        return linear_combination(w, images, self.dim_neg)

    def pair(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        """[x, y] for x in G1, y in G-1"""
        acc = zero_vector(self.dim0)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj:
                    acc = vec_add(acc, tuple(xi * yj * c for c in self.pairing[i][j]))
        return acc

    def validate(self) -> List[str]:
        return validate_local(self)


def validate_local(local: LocalLieAlgebra) -> List[str]:
    """
    Check antisymmetry and every Jacobi identity that stays inside the local part

    Returns:
        Descriptions of the violated identities; empty when the local part is valid
    """
    failures = []
    n0 = local.dim0
    zl, pl, nl = local.zero_labels, local.pos_labels, local.neg_labels
    h = [unit_vector(n0, a) for a in range(n0)]

    for a in range(n0):
        for b in range(a, n0):
            if vec_add(local.zero_bracket[a][b], local.zero_bracket[b][a]) != zero_vector(n0):
                failures.append(f"antisymmetry [{zl[a]}, {zl[b]}]")

    # (G0, G0, G0)
    for a in range(n0):
        for b in range(a + 1, n0):
            for c in range(b + 1, n0):
                total = vec_add(
                    vec_add(local.bracket_00(h[a], local.zero_bracket[b][c]),
                            local.bracket_00(h[b], local.zero_bracket[c][a])),
                    local.bracket_00(h[c], local.zero_bracket[a][b]),
                )
                if not is_zero_vector(total):
                    failures.append(f"Jacobi ({zl[a]}, {zl[b]}, {zl[c]})")

    # (G0, G0, G1) and (G0, G0, G-1): the actions are representations
    for action, labels, piece in ((local.pos_action, pl, "G1"), (local.neg_action, nl, "G-1")):
        for a in range(n0):
            for b in range(a + 1, n0):
                commutator = action[a] @ action[b] - action[b] @ action[a]
                bracket = local.zero_bracket[a][b]
                expected = QMatrix.zeros(len(labels), len(labels))
                for c, coeff in enumerate(bracket):
                    if coeff:
                        expected = expected + action[c].scale(coeff)
                if commutator != expected:
                    failures.append(f"Jacobi ({zl[a]}, {zl[b]}, {piece})")

    # (G0, G1, G-1): [a, [e, f]] = [[a, e], f] + [e, [a, f]]
    for a in range(n0):
        for i in range(local.dim_pos):
            e = unit_vector(local.dim_pos, i)
            ae = local.pos_action[a].apply(e)
            for j in range(local.dim_neg):
                f = unit_vector(local.dim_neg, j)
                af = local.neg_action[a].apply(f)
                lhs = local.bracket_00(h[a], local.pairing[i][j])
                rhs = vec_add(local.pair(ae, f), local.pair(e, af))
                if vec_sub(lhs, rhs) != zero_vector(n0):
                    failures.append(f"Jacobi ({zl[a]}, {pl[i]}, {nl[j]})")
    return failures
