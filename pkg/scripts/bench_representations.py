"""Compare the four representations of J(s, a) on a grid.

For each (s, a) this prints the value, error bound, terms or quadrature
pieces, and wall time of the direct sum, the Mellin integral, the
Hermite-type integral and the free-parameter expansion, plus the deviation
from an mpmath Hurwitz-zeta oracle.
"""

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from dirlambda import numeric as nm


@dataclass
class BenchConfig:
    s_values: list = field(default_factory=lambda: [0.2, 0.5, 1, 2, 3.5, -1.5])
    a_values: list = field(default_factory=lambda: [Fraction(1, 4), Fraction(1, 2), Fraction(1)])
    x_free: list = field(default_factory=lambda: [0.5, 1.0, 2.0, 3.0])
    tolerance: float = 1e-12
    digits: int = 30


def oracle(s, a):
    s, a = mpmath.mpf(s), mpmath.mpf(a.numerator) / a.denominator
    if s == 1:
        return (mpmath.digamma((a + 1) / 2) - mpmath.digamma(a / 2)) / 2
    return 2 ** (-s) * (mpmath.zeta(s, a / 2) - mpmath.zeta(s, (a + 1) / 2))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--tol", type=float, default=BenchConfig.tolerance)
    p.add_argument("--digits", type=int, default=BenchConfig.digits)
    args = p.parse_args()
    cfg = BenchConfig(tolerance=args.tol, digits=args.digits)
    prec = nm.Precision(target_tolerance=cfg.tolerance, working_digits=cfg.digits)

    out = csv.writer(sys.stdout)
    out.writerow(["representation", "s", "a", "x_free", "terms", "wall_s", "error_bound", "deviation", "covered"])
    for s in cfg.s_values:
        for a in cfg.a_values:
            runs = []
            if s > 0:
                runs += [("direct", "", lambda: nm.eval_J_direct(s, a, prec)),
                         ("mellin", "", lambda: nm.eval_J_mellin(s, a, prec))]
            runs += [("promain", x, lambda x=x: nm.eval_J_promain(s, a, x, prec)) for x in cfg.x_free]
            runs.append(("hermite", "", lambda: nm.eval_J_hermite(s, a, prec)))
            with mpmath.workdps(50):
                exact = oracle(s, a)
            for name, x, run in runs:
                t0 = time.perf_counter()
                r = run()
                wall = time.perf_counter() - t0
                with mpmath.workdps(50):
                    dev = abs(r.value - exact)
                out.writerow([name, s, a, x, r.terms, f"{wall:.3f}", mpmath.nstr(r.error_bound, 3),
                              mpmath.nstr(dev, 3), dev <= r.error_bound])


if __name__ == "__main__":
    main()
