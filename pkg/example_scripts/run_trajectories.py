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
    Integrates a symmetric family of two-slit current lines, reports whether
    any of them leaves its half plane and writes the polylines as CSV.

    usage:

        ./run_trajectories.py <lines per half plane> <output.csv>

    e.g.:

        ./run_trajectories.py 32 trajectories.csv

    """
    n = int(args[1])
    physics = slitlab.make_params(E=50.0, a=1.0, sigma=0.25)
    field = slitlab.WaveField("two_slit", physics)
    window = slitlab.launch_window(physics, 0.0, margin=physics.a)
    family = slitlab.symmetric_family(field, 0.0, n, window, 5.0, verbose=True)

    for trajectory in family:
        if trajectory.start_y == 0:
            continue
        side = np.sign(trajectory.start_y)
        print(
            "y0={0:+.4f} status={1:<15} min distance to axis {2:.4g}".format(
                trajectory.start_y, trajectory.status, np.min(side * trajectory.y)
            )
        )
    report = slitlab.ordering_check(family, np.linspace(0.5, 4.5, 9))
    print("Ordering preserved: {0}".format(report.ok))

    results = slitlab.Results(verbose=True)
    results.write_trajectories_csv(args[2], family)
    return


if __name__ == "__main__":
    if len(sys.argv) < 3:
        print(main.__doc__)
    else:
        main(sys.argv)
