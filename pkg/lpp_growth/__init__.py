# -*- coding: utf-8 -*-

"""
.. _lpp_module:

lpp_growth
==========
lpp-growth implements growth-diagram RSK, geometric last passage percolation in full- and
half-space, and the exact Schur and Pfaffian Schur process measures that describe the
last passage times along down-right paths. A verification harness compares the two
sides exactly and by Monte Carlo.
"""

__version__ = '0.1.0.dev0'
__author__ = 'lpp-growth authors and contributors'

import logging

LOGGER = logging.getLogger(__name__)
LOGGER.addHandler(logging.NullHandler())

from .partition import Partition, Cell, EMPTY  # noqa: E402
from .paths import DownRightPath, path_from_word  # noqa: E402
from .matrix import WeightMatrix  # noqa: E402

__all__ = [
    'Partition',
    'Cell',
    'EMPTY',
    'DownRightPath',
    'path_from_word',
    'WeightMatrix',
]
