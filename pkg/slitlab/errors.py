#!/usr/bin/env python
# encoding: utf-8
"""
    slitlab
    -------

    Exceptions raised by slitlab

    :license: MIT, see LICENSE.txt for more details

"""


class SlitlabError(Exception):
    """Base class of all slitlab errors."""


class DomainError(SlitlabError, ValueError):
    """Parameters or evaluation points outside the model domain."""


class NodeError(SlitlabError, ArithmeticError):
    """Intensity below the node floor, the velocity field is undefined."""


class QuadratureError(SlitlabError, ArithmeticError):
    """Adaptive quadrature did not reach the requested accuracy."""


class ResolutionError(SlitlabError, ValueError):
    """Sampling grid too coarse for the requested fringe analysis."""


class ConfigError(SlitlabError, ValueError):
    """
    Invalid run configuration.

    Args:
        field (str): dotted path of the offending key, e.g. "trajectories.n"
        reason (str): human readable reason
    """

    def __init__(self, field, reason):
        self.field = field
        self.reason = reason
        super().__init__("{0}: {1}".format(field, reason))
