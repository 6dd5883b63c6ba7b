"""Finite-horizon reports for the spike-minus-mass and escaping-mass sequences."""
import argparse
from fractions import Fraction

from regprim.convergence import (
    FINITE_EVIDENCE, SequenceSpec, dominated_check, escaping_mass, spike_minus_mass,
    strong_distances, weak_pairings,
)
from regprim.distribution import bump, dirac, zero


def show(name, seq, probes):
    phi = bump(-1, 2, 3)
    strong = strong_distances(seq)
    weak = weak_pairings(seq, phi)
    dom = dominated_check(seq, dirac(), probes)
    print(f"== {name} (horizon {seq.horizon})")
    print("  strong distances, last five:", [str(d) for d in strong.distances[-5:]])
    print("  pairings with a bump, last three:", [f"{float(v):.3e}" for v in weak.pairings[-3:]])
    print("  dominated by the Dirac mass:", dom.dominated)
    print("  primitives settle at the probes:", dom.pointwise_ok, " undecided:", [str(p) for p in dom.undecided()])
    print("  boundary condition at infinity:", dom.boundary_ok, " gap:", dom.infinity_gap)
    print("  integrals, last five:", [str(v) for v in dom.integrals[-5:]])
    print("  dominated-convergence conclusion applies:", dom.conclusion_applies())


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--horizon", type=int, default=50)
    args = parser.parse_args()
    probes = [Fraction(-1), Fraction(0), Fraction(1, 3), Fraction(2), Fraction(10)]
    show("n chi_(0,1/n) - delta_(1/n)", SequenceSpec(spike_minus_mass, zero(), args.horizon), probes)
    show("delta_n", SequenceSpec(escaping_mass, zero(), args.horizon), probes)
    print(f"({FINITE_EVIDENCE})")


if __name__ == "__main__":
    main()
