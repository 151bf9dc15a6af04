"""
bignet translates binding bigraphs into proof-net morphisms of a free symmetric monoidal
closed category, checks those nets for correctness and decides equality on both sides.

The modules, bottom-up: :mod:`bignet.formula`, :mod:`bignet.theory`, :mod:`bignet.net`,
:mod:`bignet.correctness`, :mod:`bignet.normal`, :mod:`bignet.bigraph` and :mod:`bignet.translate`.
"""
from typing import Any

from bignet import util
from bignet.util import echo

settings: dict[str, Any] = {
    "switching_cap": 2 ** 20,
    "rewiring_state_cap": 20_000,
    "bfs_crosscheck_cells": 6,
    "unit_search_cap": 4096,
    "iso_size_cap": 5000,
}
"""
Search caps. A search that would exceed its cap raises :class:`bignet.util.SizeLimit`.
"""

__all__ = ["settings", "util", "echo"]

__version__ = "0.3.0"
"""
The current version of bignet. This value is read from `setup.py`.
"""
