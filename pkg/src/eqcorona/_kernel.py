"""Select the search kernel at import: compiled if available, else pure Python.

Set ``EQCORONA_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _search_py

FOUND, EXHAUSTED, TIMED_OUT = _search_py.FOUND, _search_py.EXHAUSTED, _search_py.TIMED_OUT

search = _search_py.search
BACKEND = "python"

if not os.environ.get("EQCORONA_PURE_PYTHON"):
    try:
        from ._search import search  # noqa: F811
    except ImportError:
        pass
    else:
        BACKEND = "cython"

__all__ = ["search", "BACKEND", "FOUND", "EXHAUSTED", "TIMED_OUT"]
