#!/usr/bin/env python3
# encoding: utf-8
"""
    slitlab
    -------

    Numerical laboratory for the symmetric two-slit experiment

    :license: MIT, see LICENSE.txt for more details

"""
import sys
import numpy as np
import slitlab


def main(args):
    """
    Builds mirror pairs of one-slit current lines, counts their symmetry line
    crossings and compares the half plane occupancy before and after the
    tangent swap.

    usage:

        ./swap_mirror_pairs.py <number of pairs>

    e.g.:

        ./swap_mirror_pairs.py 16

    """
    n = int(args[1])
    physics = slitlab.make_params(E=50.0, a=1.0, sigma=0.25)
    ensemble = slitlab.hidden_pair_ensemble(physics, n, 0.0, 5.0, verbose=True)
    for pair in ensemble:
        print(pair)

    slices = np.linspace(0.0, 5.0, 6)
    raw = slitlab.ensemble_occupancy(ensemble, slices)
    swapped = slitlab.ensemble_occupancy(ensemble.swapped(), slices)
    print("{0:>6} {1:>12} {2:>12}".format("x", "raw", "swapped"))
    for x in slices:
        print("{0:6.2f} {1!s:>12} {2!s:>12}".format(x, raw[x], swapped[x]))
    return


if __name__ == "__main__":
    if len(sys.argv) < 2:
        print(main.__doc__)
    else:
        main(sys.argv)
