#!/usr/bin/env python3
"""Print the parameter table for all admissible levels up to a bound:
defining root order, sub-representation parameter order, half-order,
twist order, and the resulting image type."""

import argparse

from burauforge.quantum import build_params, gamma_at_p, twist_projective_order


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-p", type=int, default=64)
    args = ap.parse_args()
    header = f"{'p':>4} {'ord(a)':>7} {'ord(q)':>7} {'o(p)':>6} {'twist':>6}  image"
    print(header)
    print("-" * len(header))
    for p in range(3, args.max_p + 1):
        if p % 4 == 2:
            continue
        params = build_params(p)
        twist = twist_projective_order(p)[0] if p >= 5 else "-"
        cls, _ = gamma_at_p(p)
        image = cls.case
        if cls.triangle:
            image += f" {tuple(cls.triangle)}"
        print(f"{p:>4} {params.a_root.multiplicative_order():>7} "
              f"{params.burau_parameter.multiplicative_order():>7} "
              f"{str(params.half_order):>6} {str(twist):>6}  {image}")


if __name__ == "__main__":
    main()
