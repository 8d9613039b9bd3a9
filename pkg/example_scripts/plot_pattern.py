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
    Samples the one-slit, two-slit and half plane intensities of the gaussian
    desk on the detection line and plots them into an SVG file.

    usage:

        ./plot_pattern.py <L> <output.svg>

    e.g.:

        ./plot_pattern.py 5.0 pattern.svg

    """
    L = float(args[1])
    physics = slitlab.make_params(E=50.0, a=1.0, sigma=0.25)
    lo, hi = slitlab.default_window(physics, L)
    y_grid = np.linspace(lo, hi, 2001)

    samples = {}
    for kind in ("one_slit_1", "one_slit_2", "two_slit", "restricted_upper"):
        field = slitlab.WaveField(kind, physics)
        samples[kind] = slitlab.intensity_slice(field, L, y_grid)
        print(
            "{0:<18} peak intensity {1:.6g}".format(
                kind, np.max(samples[kind].intensity)
            )
        )

    results = slitlab.Results(verbose=True)
    results.plot_pattern_svg(args[2], samples)
    return


if __name__ == "__main__":
    if len(sys.argv) < 3:
        print(main.__doc__)
    else:
        main(sys.argv)
