"""Hoelder ratio |int fg| / (|int f||g(inf)| + ||f|| V g) along the sharpness family.

f has a ramp primitive of the given height over [0, width]; g steps from
left to right at the anchor.  The ratio climbs to 1 as the anchor reaches
the end of the ramp.
"""
import argparse
from fractions import Fraction

from regprim.algebra import holder_bound, sharpness_pair


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--height", type=Fraction, default=Fraction(1))
    parser.add_argument("--left", type=Fraction, default=Fraction(2))
    parser.add_argument("--right", type=Fraction, default=Fraction(1))
    parser.add_argument("--steps", type=int, default=12)
    args = parser.parse_args()
    print(f"{'anchor':>12} {'value':>12} {'first bound':>12} {'ratio':>14}")
    for k in range(args.steps + 1):
        anchor = 1 - Fraction(1, 2 ** k) if k < args.steps else Fraction(1)
        f, g = sharpness_pair(args.height, args.left, args.right, anchor)
        rep = holder_bound(f, g)
        ratio = Fraction(rep.value) / Fraction(rep.first)
        print(f"{str(anchor):>12} {str(rep.value):>12} {str(rep.first):>12} {float(ratio):>14.10f}")


if __name__ == "__main__":
    main()
