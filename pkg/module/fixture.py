import sys
from dataclasses import dataclass

from model import WeierstrassModel, compute_invariants, local_data
from .verify import good_reduction_obstruction, prime_to_ell_conductor, tate_trace_residues, unramified_at


#y^2 + xy + y = x^3 - 89x + 316, the mod-7 example of level 55
CALEGARI_CURVE = WeierstrassModel(1, 0, 1, -89, 316)
CALEGARI_ELL = 7
EXPECTED_DISC = -(2 ** 7) * 5 * 11 ** 3
EXPECTED_V2 = 7
EXPECTED_CONDUCTOR = {5: 1, 11: 1}



@dataclass(frozen=True)
class FixtureResult:
    claim: str
    passed: bool
    detail: str



class FixtureChecker:
    """Regression checks on a curve known to satisfy the level-lowering hypotheses at 2."""

    def __init__(self, model=CALEGARI_CURVE, ell=CALEGARI_ELL, stream=None):
        self.model = model
        self.ell = ell
        self.stream = stream or sys.stderr


    def checks(self):
        ell = self.ell
        return [
            ('discriminant', lambda: self._expect(compute_invariants(self.model).disc, EXPECTED_DISC)),
            ('multiplicative_at_2', lambda: self._expect(local_data(self.model, 2).is_multiplicative, True)),
            ('v2_disc', lambda: self._expect(local_data(self.model, 2).min_disc_valuation, EXPECTED_V2)),
            ('unramified_at_2', lambda: self._expect(unramified_at(self.model, 2, ell).unramified, True)),
            ('tate_residues_at_2', lambda: self._expect(tate_trace_residues(2, ell), frozenset({3, 4}))),
            ('good_reduction_obstruction_at_2', lambda: self._expect(good_reduction_obstruction(ell, 2), True)),
            ('conductor_support', lambda: self._expect(prime_to_ell_conductor(self.model, ell), EXPECTED_CONDUCTOR)),
        ]


    @staticmethod
    def _expect(actual, expected):
        return actual == expected, f"got {actual}, expected {expected}"


    def check(self):
        results = []
        for name, evaluate in self.checks():
            try:
                passed, detail = evaluate()
            except Exception as e:
                passed, detail = False, f"{type(e).__name__}: {e}"
            results.append(FixtureResult(name, passed, detail))
        return results


    def run(self):
        print(f"--- Fixture Checks: {self.model}, ell={self.ell} ---", file=self.stream)
        results = self.check()
        for result in results:
            status = 'pass' if result.passed else 'FAIL'
            print(f"  [{status}] {result.claim}: {result.detail}", file=self.stream)

        failed = [result.claim for result in results if not result.passed]
        if failed:
            print(f"--- Fixture Checks Failed: {', '.join(failed)} ---", file=self.stream)
            return 1
        print(f"--- Fixture Checks Passed ({len(results)} claims) ---", file=self.stream)
        return 0
