"""Truncations of the shifted-argument series for Gamma(s) J(s, a).

Prints the residual Gamma(s) J(s, a) - [closed part - sum_{n<=N} 2^n Gamma(s+n)/(n+1)! J(s+n, a)]
and the size of the N-th term.  Since J(s+n, a) -> a^(-s-n) and
2^n Gamma(s+n)/(n+1)! grows like 2^n n^(s-2), the terms never shrink for
a >= 1/2, so the residual cannot settle near zero.
"""

import argparse

import mpmath

from dirlambda import numeric as nm


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--s", type=float, default=3.0)
    p.add_argument("--a", default="1")
    p.add_argument("--N", type=int, nargs="+", default=[0, 1, 2, 5, 10, 20, 40, 60])
    args = p.parse_args()
    prec = nm.QUAD_PRECISION
    print(f"s={args.s} a={args.a}")
    print(f"{'N':>4}  {'residual':>12}  {'|term N|':>12}")
    for N in args.N:
        r = nm.check_promain2(args.s, args.a, N, prec)
        with mpmath.workdps(30):
            term = (mpmath.mpf(2) ** N * mpmath.gamma(args.s + N) / mpmath.factorial(N + 1)
                    * nm.eval_J_direct(args.s + N, args.a, prec).value) if N else mpmath.mpf(0)
        print(f"{N:>4}  {mpmath.nstr(r.value, 4):>12}  {mpmath.nstr(abs(term), 4):>12}")


if __name__ == "__main__":
    main()
