"""Print exact code totals and class-count lower bounds from the mass formula.

Usage: python scripts/mass_constants.py
"""
from terncode.mass import count_T, lower_bound

TOTALS = [(24, 11), (25, 12)]
BOUNDS = [(26, 12), (27, 13), (28, 14), (29, 14), (30, 14)]


def main():
    for n, k in TOTALS:
        print(f"T({n},{k}) = {count_T(n, k)}")
    for n, k in BOUNDS:
        print(f"classes of [{n},{k}] self-orthogonal codes >= {lower_bound(n, k)}")


if __name__ == "__main__":
    main()
