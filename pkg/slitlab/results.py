#!/usr/bin/env python
# encoding: utf-8
"""
    slitlab
    -------

    Result container and the CSV / JSON / SVG writers of the command line
    surface

    :license: MIT, see LICENSE.txt for more details

"""
from __future__ import absolute_import
from collections import namedtuple
import codecs
import csv
import datetime
import json
import math
import os
import numpy as np
import pandas as pd
import slitlab

r_key = namedtuple("r_key", ["command", "name"])

PATTERN_FIELDNAMES = ["y", "intensity", "re", "im"]

TRAJECTORY_FIELDNAMES = ["trajId", "x", "y"]

SWAP_FIELDNAMES = ["pairId", "x", "y1", "y2", "yLowerSwapped", "yUpperSwapped"]


def jsonable(value):
    """
    Converts payload values to JSON compatible builtins: numpy scalars and
    arrays, complex numbers as {"re": .., "im": ..}, namedtuples as dicts and
    non finite floats as None.
    """
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if hasattr(value, "_asdict"):
        return jsonable(value._asdict())
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": jsonable(value.real), "im": jsonable(value.imag)}
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def payload_json(payload):
    """Canonical JSON text of a payload (sorted keys, no metadata)."""
    return json.dumps(jsonable(payload), sort_keys=True, indent=2, allow_nan=False)


class Results(dict):
    """
    slitlab results class.

    Holds the payloads of executed commands. Can be accessed as a dictionary.

    Structure

        key (named tuple)

            * command
            * name

        value (dict)

            JSON compatible payload of the result
    """

    def __init__(self, config=None, params=None, verbose=False):
        self.config = config
        if params is None:
            params = config.params if config is not None else slitlab.params
        self.params = params
        self.verbose = verbose
        self.written_files = []
        return

    def add(self, command, name, payload):
        """
        Adds a payload to the result container.

        Returns:
            r_key: (command, name)
        """
        key = r_key(command, name)
        self[key] = payload
        return key

    @property
    def config_hash(self):
        if self.config is None:
            return ""
        return self.config.config_hash

    def _header(self, command, fieldnames):
        return "# slitlab {0} command={1} config={2} columns={3}\n".format(
            slitlab.__version_str__, command, self.config_hash, ",".join(fieldnames)
        )

    def _float(self, value):
        return self.params["CSV_FLOAT_FORMAT"].format(float(value))

    def _register(self, file_name):
        self.written_files.append(file_name)
        if self.verbose:
            print("> Wrote {0}".format(file_name))

    def _write_csv(self, file_name, command, fieldnames, rows):
        with codecs.open(file_name, mode="w", encoding="utf-8") as out_csv:
            out_csv.write(self._header(command, fieldnames))
            csv_out = csv.DictWriter(out_csv, fieldnames, lineterminator="\n")
            csv_out.writeheader()
            for row in rows:
                csv_out.writerow(row)
        self._register(file_name)

    def write_pattern_csv(self, file_name, sample, command="pattern"):
        """
        Writes an intensity slice.

        Keys in csv:

            * y         : ordinate on the detection line
            * intensity : |psi(L, y)| ** 2
            * re        : real part of psi(L, y)
            * im        : imaginary part of psi(L, y)
        """
        rows = (
            {
                "y": self._float(y),
                "intensity": self._float(i),
                "re": self._float(v.real),
                "im": self._float(v.imag),
            }
            for y, i, v in zip(sample.y_grid, sample.intensity, sample.amplitude)
        )
        self._write_csv(file_name, command, PATTERN_FIELDNAMES, rows)
        return

    def write_trajectories_csv(self, file_name, trajectories, command="trajectories"):
        """
        Writes trajectory polylines, one row per accepted point.

        Keys in csv:

            * trajId : position of the trajectory in its family
            * x, y   : polyline point
        """

        def rows():
            for traj_id, trajectory in enumerate(trajectories):
                for x, y in trajectory.points:
                    yield {
                        "trajId": traj_id,
                        "x": self._float(x),
                        "y": self._float(y),
                    }

        self._write_csv(file_name, command, TRAJECTORY_FIELDNAMES, rows())
        return

    def write_swap_csv(self, file_name, pairs, command="swap"):
        """
        Writes mirror pairs with their tangent swapped relabelling on the
        common x grid.

        Keys in csv:

            * pairId        : pair index
            * x             : grid abscissa
            * y1, y2        : slit 1 line and its mirror partner
            * yLowerSwapped : -|y1|
            * yUpperSwapped : +|y1|
        """

        def rows():
            for pair in pairs:
                for x, y1, y2 in zip(pair.traj1.x, pair.traj1.y, pair.traj2.y):
                    yield {
                        "pairId": pair.pair_id,
                        "x": self._float(x),
                        "y1": self._float(y1),
                        "y2": self._float(y2),
                        "yLowerSwapped": self._float(-abs(y1)),
                        "yUpperSwapped": self._float(abs(y1)),
                    }

        self._write_csv(file_name, command, SWAP_FIELDNAMES, rows())
        return

    def write_json(self, file_name, command, payload=None):
        """
        Writes a payload as canonical JSON with a metadata block. The
        timestamp is the only non deterministic field.
        """
        if payload is None:
            payload = {
                key.name: value for key, value in self.items() if key.command == command
            }
        document = jsonable(payload)
        document["metadata"] = {
            "tool": "slitlab",
            "version": slitlab.__version_str__,
            "command": command,
            "configHash": self.config_hash,
            "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        }
        with codecs.open(file_name, mode="w", encoding="utf-8") as out_json:
            out_json.write(
                json.dumps(document, sort_keys=True, indent=2, allow_nan=False) + "\n"
            )
        self._register(file_name)
        return

    def _svg_metadata(self, command):
        return {
            "Date": None,
            "Creator": "slitlab {0}".format(slitlab.__version_str__),
            "Description": "command={0} config={1}".format(command, self.config_hash),
        }

    def _figure(self):
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        plt.rcParams["svg.hashsalt"] = self.params["SVG_HASH_SALT"]
        return plt

    def plot_pattern_svg(self, file_name, samples, command="pattern"):
        """
        Plots intensity slices.

        Args:
            samples (dict): label -> slice_sample
        """
        plt = self._figure()
        fig, ax = plt.subplots(figsize=(8, 4.5))
        for label, sample in sorted(samples.items()):
            ax.plot(sample.y_grid, sample.intensity, label=label, lw=1)
        ax.set_xlabel("y")
        ax.set_ylabel("|psi(L, y)|^2")
        ax.legend(loc="upper right", fontsize="small")
        fig.savefig(file_name, format="svg", metadata=self._svg_metadata(command))
        plt.close(fig)
        self._register(file_name)
        return

    def plot_trajectories_svg(
        self, file_name, trajectories, command="trajectories", color="#1f5f8b"
    ):
        """Plots trajectory polylines in the (x, y) plane."""
        plt = self._figure()
        fig, ax = plt.subplots(figsize=(8, 4.5))
        for trajectory in trajectories:
            ax.plot(trajectory.x, trajectory.y, color=color, lw=0.5)
        ax.axhline(0.0, color="#999999", lw=0.5, ls="--")
        ax.set_xlabel("x")
        ax.set_ylabel("y")
        fig.savefig(file_name, format="svg", metadata=self._svg_metadata(command))
        plt.close(fig)
        self._register(file_name)
        return

    def format_all_results(self):
        """
        Format all scalar results to a pandas DataFrame.

        returns:
            results_df (Dataframe) : one row per scalar payload entry

        Structure

            columns
                * command
                * name
                * quantity
                * value
        """
        rows = []
        for key in sorted(self.keys()):
            payload = jsonable(self[key])
            if not isinstance(payload, dict):
                payload = {"value": payload}
            for quantity, value in sorted(payload.items()):
                if isinstance(value, (bool, int, float)) or value is None:
                    rows.append(
                        {
                            "command": key.command,
                            "name": key.name,
                            "quantity": quantity,
                            "value": value,
                        }
                    )
        return pd.DataFrame(rows, columns=["command", "name", "quantity", "value"])

    def output_path(self, out_dir, file_name):
        if not os.path.exists(out_dir):
            os.makedirs(out_dir)
        return os.path.join(out_dir, file_name)
