"""
Local parts of contragredient Lie algebras G(C) and reduced contragredient Lie algebras G'(C)

For a square C the local part has generators e_a, h_a, f_a with [h_a, h_b] = 0,
[h_a, e_b] = C_ab e_b, [h_a, f_b] = -C_ab f_b and [e_a, f_b] = delta_ab h_a.
G'(C) divides degree 0 by the center {sum c_a h_a : c * C = 0}.
"""
import logging
from typing import List

from processing.constructions.base_construction import BaseConstruction
from processing.errors import NotSquare
from processing.exactq import (
    QMatrix,
    Vector,
    independent_rows,
    left_nullspace,
    solve,
    unit_vector,
    zero_vector,
)
from processing.graded.local_algebra import LocalLieAlgebra

log = logging.getLogger(__name__)


def _require_square(c: QMatrix) -> int:
    if not c.is_square():
        raise NotSquare(f"Cartan matrix must be square, got {c.rows}x{c.cols}")
    return c.rows


def _labels(n: int):
    return [f"f{a + 1}" for a in range(n)], [f"e{a + 1}" for a in range(n)]


def contragredient_local(c: QMatrix) -> LocalLieAlgebra:
    n = _require_square(c)
    neg_labels, pos_labels = _labels(n)
    pos_action = [QMatrix.diagonal(c.row(a)) for a in range(n)]
    neg_action = [QMatrix.diagonal([-v for v in c.row(a)]) for a in range(n)]
    pairing = [[unit_vector(n, a) if a == b else zero_vector(n) for b in range(n)] for a in range(n)]
    return LocalLieAlgebra.build(
        neg_labels,
        [f"h{a + 1}" for a in range(n)],
        pos_labels,
        pos_action=pos_action,
        neg_action=neg_action,
        pairing=pairing,
        name="G(C)",
    )


def center_of(c: QMatrix) -> List[Vector]:
    """Coefficient vectors c with c * C = 0, i.e. the center inside span{h_a}"""
    _require_square(c)
    return left_nullspace(c)


def reduced_local(c: QMatrix) -> LocalLieAlgebra:
    """
    Local part of G'(C)

    Degree 0 is span{h_a} modulo the left kernel of C. The images of h_p for the
    independent rows p of C form its basis; the class of h_b has the coordinates of
    row b of C in the basis of independent rows, and h_p acts on e_b by C_pb.
    """
    n = _require_square(c)
    pivots = independent_rows(c)
    l = len(pivots)
    # columns are the pivot rows of C; solving gives each row in that basis
    basis = QMatrix([c.row(p) for p in pivots], cols=n).T
    coords = [
        unit_vector(l, pivots.index(b)) if b in pivots else solve(basis, c.row(b))
        for b in range(n)
    ]
    pos_action = [QMatrix.diagonal(c.row(p)) for p in pivots]
    neg_action = [QMatrix.diagonal([-v for v in c.row(p)]) for p in pivots]
    pairing = [[coords[a] if a == b else zero_vector(l) for b in range(n)] for a in range(n)]
    neg_labels, pos_labels = _labels(n)
    log.debug("reduced degree 0 spanned by h%s", [p + 1 for p in pivots])
    return LocalLieAlgebra.build(
        neg_labels,
        [f"h{p + 1}" for p in pivots],
        pos_labels,
        pos_action=pos_action,
        neg_action=neg_action,
        pairing=pairing,
        name="G'(C)",
    )


class ContragredientConstruction(BaseConstruction):
    """G(C), or G'(C) when reduced"""

    def __init__(self, c: QMatrix, reduced: bool = False, name: str = None):
        super().__init__(name or ("G'(C)" if reduced else "G(C)"))
        self.c = c
        self.reduced = reduced

    def build_local(self) -> LocalLieAlgebra:
        if self.reduced:
            return reduced_local(self.c)
        return contragredient_local(self.c)
