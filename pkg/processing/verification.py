"""
Built-in regression fixtures for the worked pentad examples
"""
import logging
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import config
from processing.comparison import DimensionComparator
from processing.constructions.contragredient import reduced_local
from processing.constructions.km_realize import realize_full_km
from processing.constructions.sl2fd import (
    FDIndexSet,
    ctilde_entry,
    ctilde_minor,
    dtilde_entry,
    irreducible_pentad,
    phi_map,
    sl2fd_local,
)
from processing.exactq import QMatrix
from processing.graded.expansion import expand
from processing.pentad import (
    CartanPentad,
    bilinear_form,
    cartan_matrix,
    local_algebra,
    structure_summary,
)

log = logging.getLogger(__name__)

AFFINE_A1 = QMatrix([[2, -2], [-2, 2]])


def km_affine_pentad() -> CartanPentad:
    """(3, 2; A, D, (4, 4)) realizing g(C) for the affine A1 matrix"""
    return CartanPentad.create(
        A=[["1/8", 0, 0], [0, 0, 1], [0, 1, 0]],
        D=[[2, -2], [0, 0], [0, 1]],
        gamma=[4, 4],
    )


def loop_dims(max_degree: int, degree0: int = 1) -> Dict[int, int]:
    """Dimensions of C[t, t^-1] (x) sl2 graded by deg(e t^m) = 2m + 1, deg(h t^m) = 2m"""
    dims = {}
    for k in range(-max_degree, max_degree + 1):
        if k == 0:
            dims[k] = degree0
        else:
            dims[k] = 2 if k % 2 else 1
    return dims


class FixtureVerifier:
    """Run every worked example as a fixture and combine the results"""

    def __init__(self, max_degree: Optional[int] = None):
        self.name = "fixture_verifier"
        self.max_degree = max_degree or config.VERIFY_PAPER_MAX_DEGREE
        self.comparator = DimensionComparator()
        self.fixtures: List[Callable[[], Dict]] = [
            self.check_km_pentad_cartan,
            self.check_irreducible_cartan,
            self.check_killing_normalization,
            self.check_sl2_triple,
            self.check_km_pentad_structure,
            self.check_km_pentad_expansion,
            self.check_loop_pentad_expansion,
            self.check_full_km_loop,
            self.check_reduced_loop,
            self.check_dtilde_ctilde_entries,
            self.check_ctilde_minors,
            self.check_sl2fd_triple,
            self.check_sl2fd_weight_two,
            self.check_sl2fd_abelian,
            self.check_phi_kernel,
        ]

    def run(self) -> Dict:
        """
        Run all fixtures

        Returns:
            Combined report with one entry per fixture and an overall "passed" flag
        """
        results = []
        for fixture in self.fixtures:
            start = time.perf_counter()
            try:
                result = fixture()
            except Exception as e:  # a crashing fixture is a failed fixture
                log.exception("fixture %s raised", fixture.__name__)
                result = {"passed": False, "detail": f"{type(e).__name__}: {e}"}
            result["fixture"] = fixture.__name__.replace("check_", "")
            result["seconds"] = round(time.perf_counter() - start, 3)
            log.info("%s: %s", result["fixture"], "pass" if result["passed"] else "FAIL")
            results.append(result)
        return self._combine_results(results)

    def _combine_results(self, results: List[Dict]) -> Dict:
        failed = [r["fixture"] for r in results if not r["passed"]]
        return {
            "passed": not failed,
            "total_fixtures": len(results),
            "failed_fixtures": failed,
            "results": results,
        }

    # -- fixtures ----------------------------------------------------------

    def check_km_pentad_cartan(self) -> Dict:
        c = cartan_matrix(km_affine_pentad())
        return {"passed": c == AFFINE_A1, "detail": f"C = {c.to_strings()}"}

    def check_irreducible_cartan(self) -> Dict:
        wrong = []
        for n in range(1, 7):
            expected = QMatrix([[2, -n], [-n, Fraction(n * n, 2)]])
            if cartan_matrix(irreducible_pentad(n)) != expected:
                wrong.append(n)
        return {"passed": not wrong, "detail": f"mismatch for n in {wrong}" if wrong else "n = 1..6"}

    def check_killing_normalization(self) -> Dict:
        p = CartanPentad.create(A=[["1/8"]], D=[[2]], gamma=[4])
        value = bilinear_form(p, [1], [1])
        return {"passed": value == 8, "detail": f"B(h, h) = {value}"}

    def check_sl2_triple(self) -> Dict:
        p = CartanPentad.create(A=[["1/8"]], D=[[2]], gamma=[4])
        local = local_algebra(p, name="sl2")
        triple = (local.pos_action[0][0, 0] == 2 and local.neg_action[0][0, 0] == -2
                  and local.pairing[0][0] == (1,))
        ga = expand(local, 4)
        dims = {k: v for k, v in ga.dimensions().items() if v}
        passed = triple and dims == {-1: 1, 0: 1, 1: 1} and ga.terminated_pos and ga.terminated_neg
        return {"passed": passed, "detail": f"dims {dims}"}

    def check_km_pentad_structure(self) -> Dict:
        summary = structure_summary(km_affine_pentad())
        passed = (summary.rankD, summary.rankC, summary.dimZ, summary.dimDelta) == (2, 1, 1, 1)
        return {"passed": passed, "detail": str(summary.to_dict())}

    def _loop_check(self, local, degree0: int) -> Dict:
        ga = expand(local, self.max_degree)
        comparison = self.comparator.compare_tables(
            {"expansion": ga.dimensions(), "loop": loop_dims(self.max_degree, degree0)}
        )
        return {"passed": comparison["agree"], "detail": "; ".join(comparison["notes"])}

    def check_km_pentad_expansion(self) -> Dict:
        return self._loop_check(local_algebra(km_affine_pentad(), name="g(C)"), degree0=3)

    def check_loop_pentad_expansion(self) -> Dict:
        p = CartanPentad.create(A=[["1/8"]], D=[[2, -2]], gamma=[4, 4])
        return self._loop_check(local_algebra(p, name="loop"), degree0=1)

    def check_full_km_loop(self) -> Dict:
        pentad, certificate = realize_full_km(AFFINE_A1)
        result = self._loop_check(local_algebra(pentad, name="full_km"), degree0=3)
        result["passed"] = result["passed"] and certificate.ok
        return result

    def check_dtilde_ctilde_entries(self) -> Dict:
        m1, p10, p05, p30, p20, p37 = -1, (1, 0), (0, 5), (3, 0), (2, 0), (3, 7)
        checks = [
            dtilde_entry(m1) == 2,
            dtilde_entry(p05) == 0,
            dtilde_entry(p30) == -3,
            ctilde_entry(m1, m1) == 2,
            ctilde_entry(p10, p10) == Fraction(1, 2),
            ctilde_entry(p20, p37) == 3,
        ]
        return {"passed": all(checks), "detail": f"{sum(checks)} of {len(checks)} entries"}

    def check_ctilde_minors(self) -> Dict:
        expected = {
            "(-1),(2,0)": QMatrix([[2, -2], [-2, 2]]),
            "(-1),(1,0)": QMatrix([[2, -1], [-1, "1/2"]]),
            "(0,0)": QMatrix([[0]]),
        }
        wrong = [text for text, c in expected.items() if ctilde_minor(FDIndexSet.parse(text)) != c]
        return {"passed": not wrong, "detail": f"wrong minors {wrong}" if wrong else "3 minors"}

    def check_phi_kernel(self) -> Dict:
        kernel = phi_map(FDIndexSet.parse("(-1),(2,0)")).kernel
        passed = kernel == ((Fraction(1), Fraction(1)),)
        return {"passed": passed, "detail": f"kernel {[[str(a) for a in v] for v in kernel]}"}

    def check_reduced_loop(self) -> Dict:
        return self._loop_check(reduced_local(AFFINE_A1), degree0=1)

    def check_sl2fd_triple(self) -> Dict:
        local = sl2fd_local(FDIndexSet.parse("(-1)"))
        x, y, h = (1,), (1,), (1,)
        brackets = (local.act_pos(h, x), local.act_neg(h, y), local.pair(x, y))
        passed = brackets == ((2,), (-2,), (1,))
        return {"passed": passed, "detail": f"[h,x], [h,y], [x,y] = {_show(brackets)}"}

    def check_sl2fd_weight_two(self) -> Dict:
        local = sl2fd_local(FDIndexSet.parse("(-1),(2,0)"))
        h, e_minus, e_plus = (1,), (0, 1), (0, 1)
        brackets = (local.act_pos(h, e_minus), local.act_neg(h, e_plus), local.pair(e_minus, e_plus))
        passed = brackets == ((0, -2), (0, 2), (-1,))
        return {"passed": passed, "detail": f"[h,e-], [h,e+], [e-,e+] = {_show(brackets)}"}

    def check_sl2fd_abelian(self) -> Dict:
        local = sl2fd_local(FDIndexSet.parse("(0,3)"))
        zero = (local.pos_action[0].is_zero() and local.neg_action[0].is_zero()
                and local.pair((1,), (1,)) == (0,))
        ga = expand(local, 2)
        passed = zero and ga.terminated_pos and ga.terminated_neg
        return {"passed": passed, "detail": f"all brackets vanish: {zero}; dims {ga.dimensions()}"}


def _show(vectors) -> str:
    return ", ".join("(" + ", ".join(str(a) for a in v) + ")" for v in vectors)
