"""Canonical forms of positions.

The kernel is compiled with Cython when available; set ``LLGAMES_PURE=1``
to force the pure-Python implementation.
"""

from __future__ import annotations

import os

if os.environ.get("LLGAMES_PURE"):
    from ._canon_py import encode, tree_code as _tree_code  # noqa: F401
    BACKEND = "python"
else:
    try:
        from ._canon import encode, tree_code as _tree_code  # type: ignore
        BACKEND = "cython"
    except ImportError:
        from ._canon_py import encode, tree_code as _tree_code
        BACKEND = "python"

_CODES: dict = {}
_VLABELS: dict = {}


def vlabel_id(label) -> int:
    """Intern an arbitrary hashable vertex label as a small int."""
    got = _VLABELS.get(label)
    if got is None:
        got = _VLABELS.setdefault(label, len(_VLABELS))
    return got


def tree_code(vertices, labels, edges, root, skip=None, table=None) -> int:
    """Code of the tree rooted at ``root``, ignoring the branch through ``skip``.

    ``vertices`` lists vertex ids, ``labels`` maps id -> hashable label,
    ``edges`` are ``(src, dst, label)`` with Formula labels.
    """
    return _tree_code(vertices, labels, edges, root, skip, _CODES if table is None else table, _VLABELS)
