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
    Sweeps the slit weights of the point source model and prints fringe
    visibility V, which-path predictability P and P ** 2 + V ** 2. Optionally
    writes the table as CSV.

    usage:

        ./duality_sweep.py <L> [<output.csv>]

    e.g.:

        ./duality_sweep.py 100 duality.csv

    """
    L = float(args[1])
    physics = slitlab.make_params(E=50.0, a=1.0, sigma=0.25, model="point")
    period = slitlab.fringe_period(physics, L)
    y_grid = np.linspace(-2 * period, 2 * period, 2001)
    weights = [round(0.1 * i, 1) for i in range(1, 10)]
    records = slitlab.duality_sweep(physics, weights, L, y_grid, verbose=True)

    results = slitlab.Results()
    for w, record in zip(weights, records):
        results.add("duality", "{0:.1f}".format(w), record)
    results_df = results.format_all_results()
    print(results_df[results_df["quantity"].isin(["P", "V", "duality_sum"])])
    if len(args) > 2:
        results_df.to_csv(args[2], index=False)
    return


if __name__ == "__main__":
    if len(sys.argv) < 2:
        print(main.__doc__)
    else:
        main(sys.argv)
