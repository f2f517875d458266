import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from sympy import primerange

from model import (
    ClaimError,
    NumberTheoryError,
    frey_curve,
    reduce_mod_p,
    count_points,
    trace_of_frobenius,
)
from .report import ReportWriter, bound_to_dict, report_to_dict
from .verify import MIN_ELL, is_irreducible, verify_theorem
from .weil import dimension_growth_table


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

MARKDOWN_REPORT_COLUMNS = [
    'ell', 'v3_min_disc', 'reduction_at_3', 'unramified_at_3', 'tate_residues_at_3',
    'reducibility_exception_set', 'actual_a5', 'irreducible', 'no_good_reduction_curve_at_3',
    'theorem_holds',
]



def _verify_one(ell, cfg, trial_bound):
    try:
        return verify_theorem(ell, cfg, trial_bound)
    except ClaimError as e:
        return e



class Sweeper:
    """Runs verify_theorem over every prime of the configured window.

    Workers may finish in any order; results are consumed in submission order so the
    report stream is always ascending in ell.
    """

    def __init__(self, config, stream=None, err=None):
        self.config = config
        self.stream = stream or sys.stdout
        self.err = err or sys.stderr
        self.cfg = config.reducibility()
        self.primes = list(primerange(config.ell_min, config.ell_max + 1))


    def results(self):
        work = partial(_verify_one, cfg=self.cfg, trial_bound=self.config.trial_division_bound)

        logger.debug("sweeping %d primes with %d worker(s)", len(self.primes), self.config.parallelism)
        if self.config.parallelism > 1:
            with ProcessPoolExecutor(max_workers=self.config.parallelism) as executor:
                futures = [executor.submit(work, ell) for ell in self.primes]
                for ell, future in zip(self.primes, futures):
                    yield ell, future.result()
        else:
            for ell in self.primes:
                yield ell, work(ell)


    def run(self):
        print(f"--- Verification Sweep Started! ell in [{self.config.ell_min}, {self.config.ell_max}], "
              f"{len(self.primes)} primes ---", file=self.err)

        columns = MARKDOWN_REPORT_COLUMNS if self.config.output_format == 'markdown' else None
        writer = ReportWriter(self.stream, self.config.output_format, columns)
        failed = []

        for ell, outcome in self.results():
            if isinstance(outcome, ClaimError):
                print(f">> ell={ell}: {outcome}", file=self.err)
                failed.append(ell)
                continue

            writer.write(report_to_dict(outcome))
            if not outcome.theorem_holds:
                print(f">> ell={ell}: unconfirmed claims {outcome.failed_claims}", file=self.err)
                failed.append(ell)

        verified = len(self.primes) - len(failed)
        print(f"--- Verification Sweep Finished: {verified}/{len(self.primes)} primes verified ---", file=self.err)
        return EXIT_FAILURE if failed else EXIT_OK



class WeilTabulator:
    def __init__(self, config, stream=None, err=None):
        self.config = config
        self.stream = stream or sys.stdout
        self.err = err or sys.stderr


    def run(self):
        p, d_max = self.config.weil_p, self.config.weil_dmax
        mode = 'totally real' if self.config.totally_real else 'coefficient box'
        print(f"--- Dimension Growth Table: p={p}, degree <= {d_max} ({mode}) ---", file=self.err)

        try:
            table = dimension_growth_table(
                p, d_max,
                max_degree=self.config.max_degree,
                totally_real=self.config.totally_real,
                jobs=self.config.parallelism,
            )
        except NumberTheoryError as e:
            print(f">> {e}", file=self.err)
            return EXIT_USAGE

        writer = ReportWriter(self.stream, self.config.output_format)
        for degree in sorted(table):
            writer.write(bound_to_dict(table[degree]))
        return EXIT_OK



def run_count(ell, p, stream=None, output_format='json-lines', err=None):
    """Number of points and trace of Frobenius of E^ell mod p."""
    stream, err = stream or sys.stdout, err or sys.stderr
    try:
        curve = reduce_mod_p(frey_curve(ell), p)
        points = count_points(curve)
        trace = trace_of_frobenius(curve).trace
    except NumberTheoryError as e:
        print(f">> {e}", file=err)
        return EXIT_USAGE

    ReportWriter(stream, output_format).write(
        {'ell': str(ell), 'p': str(p), 'points': str(points), 'trace': str(trace)}
    )
    return EXIT_OK



def run_exception_table(config, stream=None, err=None):
    """The irreducibility case analysis, one row per prime of the window."""
    stream, err = stream or sys.stdout, err or sys.stderr
    cfg = config.reducibility()
    writer = ReportWriter(stream, config.output_format)
    reducible = []

    for ell in primerange(max(config.ell_min, MIN_ELL), config.ell_max + 1):
        if ell == cfg.auxiliary_prime:
            continue
        evidence = is_irreducible(frey_curve(ell), ell, cfg)
        writer.write({
            'ell': str(ell),
            'exceptions': [str(a) for a in sorted(evidence.exceptions)],
            'actual_a5': str(evidence.actual_trace),
            'irreducible': evidence.irreducible,
        })
        if not evidence.irreducible:
            reducible.append(ell)

    if reducible:
        print(f">> irreducibility not established for {reducible}", file=err)
        return EXIT_FAILURE
    return EXIT_OK
