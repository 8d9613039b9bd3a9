#! /usr/bin/env python
# -*- coding: utf-8 -*-
# encoding: utf-8
"""
    slitlab
    -------

    Loading and validation of JSON run configurations

    :license: MIT, see LICENSE.txt for more details

"""
from __future__ import absolute_import
import copy
import hashlib
import json
import math
import numpy as np
import slitlab
import slitlab.knowledge_base
from slitlab.errors import ConfigError, DomainError
from slitlab.wavefield import MODELS, WaveField, fringe_period, make_params
from slitlab.decomposition import default_window
from slitlab.current import integrator_settings

PARAM_TYPE_LOOKUP = {
    "NODE_FLOOR": float,
    "REL_TOL": float,
    "ABS_TOL_SCALE": float,
    "MAX_STEP_FRACTION": float,
    "FD_STEP": float,
    "X_MIN_FACTOR": float,
    "LAUNCH_GRID_POINTS": int,
    "RESAMPLE_POINTS": int,
    "QUAD_EPSREL": float,
    "QUAD_LIMIT": int,
    "CUTOFF_WIDTHS": float,
    "LAUNCH_WIDTHS": float,
    "MIN_POINTS_PER_FRINGE": float,
    "CROSSING_TOLERANCE": float,
    "FLUX_PANELS": int,
    "FLUX_PANEL_ORDER": int,
    "ORACLE_REFINEMENT": int,
    "CSV_FLOAT_FORMAT": str,
    "SVG_HASH_SALT": str,
}

TOP_LEVEL_KEYS = (
    "model",
    "E",
    "a",
    "sigma",
    "xMin",
    "L",
    "yWindow",
    "gridN",
    "trajectories",
    "weights",
    "outputDir",
    "tolerancesOverride",
)

PHYSICS_FIELDS = {"E": "E", "a": "a", "sigma": "sigma", "x_min": "xMin", "point": "xMin"}

TRAJECTORY_KEYS = ("n", "x0", "xEnd", "relTol", "absTol", "maxStep", "nodeFloor")

DEFAULT_GRID_N = 2001

DEFAULT_TRAJECTORIES_PER_HALF_PLANE = 64

DEFAULT_OUTPUT_DIR = "slitlab_output"


def _number(field, value, positive=False, allow_none=False):
    if value is None and allow_none:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(field, "must be a number")
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(field, "must be finite")
    if positive and not value > 0:
        raise ConfigError(field, "must be > 0")
    return value


def _integer(field, value, minimum):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(field, "must be an integer")
    if value < minimum:
        raise ConfigError(field, "must be >= {0}".format(minimum))
    return value


def _convert_param(field, key, value):
    kind = PARAM_TYPE_LOOKUP[key]
    if kind is str:
        if not isinstance(value, str):
            raise ConfigError(field, "must be a string")
        return value
    if kind is int:
        return _integer(field, value, 1)
    return _number(field, value, positive=True)


def _check_keys(prefix, data, allowed):
    if not isinstance(data, dict):
        raise ConfigError(prefix or "<root>", "must be a JSON object")
    for key in sorted(data.keys()):
        if key not in allowed:
            path = "{0}.{1}".format(prefix, key) if prefix else key
            raise ConfigError(path, "unknown key")


def _weights(value):
    if value is None:
        return [
            [math.sqrt(w), 0.0, math.sqrt(1.0 - w), 0.0]
            for w in slitlab.knowledge_base.weight_sweep
        ]
    if not isinstance(value, list) or len(value) == 0:
        raise ConfigError("weights", "must be a list of 4 numbers or a list of such lists")
    if all(not isinstance(v, list) for v in value):
        value = [value]
    weights = []
    for i, entry in enumerate(value):
        field = "weights[{0}]".format(i)
        if not isinstance(entry, list) or len(entry) != 4:
            raise ConfigError(field, "must be [c1re, c1im, c2re, c2im]")
        entry = [_number("{0}[{1}]".format(field, j), v) for j, v in enumerate(entry)]
        if all(v == 0 for v in entry):
            raise ConfigError(field, "at least one weight must be non zero")
        weights.append(entry)
    return weights


class Config(dict):
    """
    Fully defaulted and validated run configuration.

    Keys follow the JSON schema (camelCase). Derived defaults are filled in at
    load time so that the canonical JSON of a Config loads back into an equal
    Config.
    """

    @property
    def params(self):
        """slitlab.params merged with tolerancesOverride."""
        merged = copy.deepcopy(slitlab.params)
        merged.update(self["tolerancesOverride"])
        return merged

    @property
    def physics(self):
        return make_params(
            E=self["E"],
            a=self["a"],
            sigma=self["sigma"],
            model=self["model"],
            x_min=self["xMin"],
            params=self.params,
        )

    @property
    def y_grid(self):
        return np.linspace(self["yWindow"][0], self["yWindow"][1], self["gridN"])

    @property
    def weight_pairs(self):
        return [(complex(w[0], w[1]), complex(w[2], w[3])) for w in self["weights"]]

    def integrator_settings(self):
        t = self["trajectories"]
        return integrator_settings(
            rel_tol=t["relTol"],
            abs_tol=t["absTol"],
            max_step=t["maxStep"],
            node_floor=t["nodeFloor"],
        )

    def to_json(self, indent=None):
        """Canonical JSON: sorted keys, fixed separators."""
        if indent is None:
            return json.dumps(self, sort_keys=True, separators=(",", ":"))
        return json.dumps(self, sort_keys=True, indent=indent)

    @property
    def config_hash(self):
        return hashlib.sha256(self.to_json().encode("utf-8")).hexdigest()


def load_config(text):
    """
    Parses and validates a JSON run configuration.

    Args:
        text (bytes or str): UTF-8 JSON object

    Returns:
        Config: with all defaults applied

    Raises:
        ConfigError: with the dotted path of the offending field

    Examples::

        >>> cfg = load_config(b'{"model": "gaussian", "E": 0.5, "a": 1.0, "sigma": 0.25, "L": 5.0}')
        >>> cfg["gridN"]
        2001
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as error:
            raise ConfigError("<root>", "invalid UTF-8 ({0})".format(error))
    try:
        data = json.loads(text)
    except ValueError as error:
        raise ConfigError("<root>", "invalid JSON ({0})".format(error))
    _check_keys("", data, TOP_LEVEL_KEYS)
    return _validate(data)


def _validate(data):
    overrides = data.get("tolerancesOverride", {}) or {}
    _check_keys("tolerancesOverride", overrides, tuple(PARAM_TYPE_LOOKUP.keys()))
    overrides = {
        key: _convert_param("tolerancesOverride.{0}".format(key), key, value)
        for key, value in sorted(overrides.items())
    }
    params = copy.deepcopy(slitlab.params)
    params.update(overrides)

    model = data.get("model", "gaussian")
    if model not in MODELS:
        raise ConfigError("model", "must be one of {0}".format(", ".join(MODELS)))
    for key in ("E", "a", "L"):
        if key not in data:
            raise ConfigError(key, "is required")
    E = _number("E", data["E"], positive=True)
    a = _number("a", data["a"], positive=True)
    L = _number("L", data["L"], positive=True)
    sigma = _number("sigma", data.get("sigma"), positive=True, allow_none=True)
    x_min = _number("xMin", data.get("xMin"), positive=True, allow_none=True)
    if model == "gaussian" and sigma is None:
        raise ConfigError("sigma", "is required for the gaussian model")
    if model == "point" and sigma is None and x_min is None:
        raise ConfigError("xMin", "is required for the point model without sigma")
    try:
        physics = make_params(E=E, a=a, sigma=sigma, model=model, x_min=x_min, params=params)
    except DomainError as error:
        # make_params messages lead with the offending argument
        name = str(error).split(" ", 1)[0]
        raise ConfigError(PHYSICS_FIELDS.get(name, "model"), str(error))
    field = WaveField(kind="two_slit", params=physics)
    if L < field.domain_x_min:
        raise ConfigError("L", "must be >= xMin = {0}".format(field.domain_x_min))

    if "yWindow" in data:
        window = data["yWindow"]
        if not isinstance(window, list) or len(window) != 2:
            raise ConfigError("yWindow", "must be [ymin, ymax]")
        window = [_number("yWindow[0]", window[0]), _number("yWindow[1]", window[1])]
        if not window[0] < window[1]:
            raise ConfigError("yWindow", "require ymin < ymax")
    elif model == "gaussian":
        window = list(default_window(physics, L, params=params))
    else:
        half = 2.0 * fringe_period(physics, L)
        window = [-half, half]

    grid_n = _integer("gridN", data.get("gridN", DEFAULT_GRID_N), 3)

    trajectories = data.get("trajectories", {}) or {}
    _check_keys("trajectories", trajectories, TRAJECTORY_KEYS)
    n = _integer(
        "trajectories.n",
        trajectories.get("n", DEFAULT_TRAJECTORIES_PER_HALF_PLANE),
        1,
    )
    default_x0 = 0.0 if model == "gaussian" else max(L / 10.0, field.domain_x_min)
    x0 = _number("trajectories.x0", trajectories.get("x0", default_x0))
    if x0 < field.domain_x_min:
        raise ConfigError("trajectories.x0", "must be >= {0}".format(field.domain_x_min))
    x_end = _number("trajectories.xEnd", trajectories.get("xEnd", L))
    if not x_end > x0:
        raise ConfigError("trajectories.xEnd", "must be > trajectories.x0")
    rel_tol = _number(
        "trajectories.relTol", trajectories.get("relTol", params["REL_TOL"]), positive=True
    )
    if rel_tol < 1e-12:
        raise ConfigError("trajectories.relTol", "must be >= 1e-12")
    abs_tol = _number(
        "trajectories.absTol",
        trajectories.get("absTol", params["ABS_TOL_SCALE"] * field.transverse_scale(x_end)),
        positive=True,
    )
    max_step = _number(
        "trajectories.maxStep",
        trajectories.get("maxStep", params["MAX_STEP_FRACTION"] * (x_end - x0)),
        positive=True,
    )
    node_floor = _number(
        "trajectories.nodeFloor",
        trajectories.get("nodeFloor", params["NODE_FLOOR"]),
        positive=True,
    )

    output_dir = data.get("outputDir", DEFAULT_OUTPUT_DIR)
    if not isinstance(output_dir, str) or output_dir == "":
        raise ConfigError("outputDir", "must be a non empty string")

    return Config(
        {
            "model": model,
            "E": E,
            "a": a,
            "sigma": sigma,
            "xMin": physics.x_min,
            "L": L,
            "yWindow": window,
            "gridN": grid_n,
            "trajectories": {
                "n": n,
                "x0": x0,
                "xEnd": x_end,
                "relTol": rel_tol,
                "absTol": abs_tol,
                "maxStep": max_step,
                "nodeFloor": node_floor,
            },
            "weights": _weights(data.get("weights")),
            "outputDir": output_dir,
            "tolerancesOverride": overrides,
        }
    )


def default_config(name="gaussian"):
    """Fully defaulted Config of a desk configuration in slitlab.knowledge_base."""
    desk = slitlab.knowledge_base.desk_configurations[name]
    return load_config(json.dumps(desk))
