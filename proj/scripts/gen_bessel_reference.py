#!/usr/bin/env python3
"""Generate the high-precision reference table for the modified Bessel
functions K0 and K1 used by the test suite.

Values are computed with mpmath at 50 decimal digits (arbitrary-precision
series summed to convergence, independent of the C++ implementation) and
written with 20 significant digits, which is far beyond double precision.

Usage: gen_bessel_reference.py [output.csv]
"""
import sys
import mpmath as mp

N_POINTS = 200
X_MIN = mp.mpf("1e-6")
X_MAX = mp.mpf("50")


def main() -> None:
    out = sys.argv[1] if len(sys.argv) > 1 else "bessel_reference.csv"
    mp.mp.dps = 50
    lo = mp.log10(X_MIN)
    hi = mp.log10(X_MAX)
    with open(out, "w") as f:
        f.write("x,k0,k1\n")
        for i in range(N_POINTS):
            t = lo + (hi - lo) * i / (N_POINTS - 1)
            x = mp.power(10, t)
            k0 = mp.besselk(0, x)
            k1 = mp.besselk(1, x)
            f.write(
                "%s,%s,%s\n"
                % (mp.nstr(x, 20), mp.nstr(k0, 20), mp.nstr(k1, 20))
            )
    print("wrote %s (%d rows)" % (out, N_POINTS))


if __name__ == "__main__":
    main()
