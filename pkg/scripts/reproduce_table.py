"""Print the even moments of orders 2..N with all three exact derivations side by side."""

import argparse
import math

from laplace_series import even_moment_remark, even_moment_theorem, format_rational, mgf_series_coefficients


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=20)
    args = parser.parse_args()

    series = mgf_series_coefficients(args.max_order)
    print(f"{'m':>3}  {'E[Y^m]':>28}  {'approx':>22}  agree")
    for n in range(1, args.max_order // 2 + 1):
        a = even_moment_theorem(n)
        b = even_moment_remark(n)
        c = series[2 * n] * math.factorial(2 * n)
        print(f"{2 * n:>3}  {format_rational(a):>28}  {float(a):>22.15g}  {a == b == c}")


if __name__ == "__main__":
    main()
