"""Sup norm, variation and their ratio for zigzag primitives with N teeth.

The sup norm stays 1 while the variation is 2N - 1, so no bound of the BV
norm by the Alexiewicz norm can hold.
"""
import argparse

from regprim.bv import variation
from regprim.distribution import alexiewicz_norm, primitive_of
from regprim.measure import finiteness_report, zigzag
from regprim.regulated import sup_norm


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-teeth", type=int, default=20)
    args = parser.parse_args()
    print(f"{'N':>4} {'sup':>4} {'||f||':>6} {'V F':>5} {'witness nu':>11}")
    for n in range(1, args.max_teeth + 1):
        f = zigzag(n)
        F = primitive_of(f)
        rep = finiteness_report(f)
        print(f"{n:>4} {str(sup_norm(F)):>4} {str(alexiewicz_norm(f)):>6} {str(variation(F)):>5} "
              f"{str(rep.witness_measure):>11}")


if __name__ == "__main__":
    main()
