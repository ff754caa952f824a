"""JSON matroid format.

One of::

    {"n": 3, "bases": [[0, 1], [0, 2], [1, 2]]}
    {"n": 2, "circuits": [[0]]}
    {"n": 6, "presentation": [[0, 1, 2, 3, 4, 5], ...]}
    {"n": 2, "rank_table": [0, 1, 1, 1]}

``rank_table`` is indexed by subset bitmask (bit e = element e).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from . import bitset as bs
from .core import (Matroid, SetSystem, matroid_from_bases, matroid_from_circuits,
                   matroid_from_presentation, matroid_from_rank_table)
from .errors import MatroidError

FORMS = ("bases", "circuits", "presentation", "rank_table")
# keys written by this package that readers accept and ignore
PASSIVE_KEYS = ("element_map", "fresh")


@dataclass(frozen=True)
class Loaded:
    matroid: Matroid
    form: str
    presentation: SetSystem | None = None


def _sets(value: Any, field: str, n: int) -> list[int]:
    if not isinstance(value, list):
        raise MatroidError(f"field {field!r} must be a list of lists of elements")
    out = []
    for i, s in enumerate(value):
        if not isinstance(s, list) or not all(isinstance(e, int) and not isinstance(e, bool)
                                              for e in s):
            raise MatroidError(f"field {field!r}[{i}] must be a list of integers")
        bad = [e for e in s if not 0 <= e < n]
        if bad:
            raise MatroidError(f"field {field!r}[{i}] has element {bad[0]} outside 0..{n - 1}")
        out.append(bs.to_mask(s))
    return out


def from_obj(obj: Any, *, max_n: int | None = None, validate: bool = True) -> Loaded:
    if not isinstance(obj, dict):
        raise MatroidError("matroid JSON must be an object")
    if "n" not in obj:
        raise MatroidError("missing field 'n'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise MatroidError("field 'n' must be a nonnegative integer")
    present = [k for k in FORMS if k in obj]
    unknown = sorted(set(obj) - set(FORMS) - {"n"} - set(PASSIVE_KEYS))
    if unknown:
        raise MatroidError(f"unknown field {unknown[0]!r}")
    if len(present) != 1:
        raise MatroidError(f"expected exactly one of {', '.join(FORMS)}; got {present or 'none'}")
    form = present[0]
    value = obj[form]
    if form == "rank_table":
        if not isinstance(value, list) or not all(isinstance(v, int) for v in value):
            raise MatroidError("field 'rank_table' must be a list of integers")
        return Loaded(matroid_from_rank_table(n, value, validate=validate, max_n=max_n), form)
    sets = _sets(value, form, n)
    if form == "bases":
        return Loaded(matroid_from_bases(n, sets, validate=validate, max_n=max_n), form)
    if form == "circuits":
        return Loaded(matroid_from_circuits(n, sets, validate=validate, max_n=max_n), form)
    A = SetSystem(n, tuple(sets))
    return Loaded(matroid_from_presentation(A, validate=validate, max_n=max_n), form, A)


def load(path: str, **kw) -> Loaded:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise MatroidError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    try:
        return from_obj(obj, **kw)
    except MatroidError as exc:
        raise MatroidError(f"{path}: {exc}") from None


def lists(masks) -> list[list[int]]:
    return [bs.elements(m) for m in masks]


def to_obj(M: Matroid, form: str = "bases") -> dict:
    """Matroid as JSON; the presentation form is not derivable and falls back to bases."""
    if form == "rank_table":
        return {"n": M.n, "rank_table": [int(v) for v in M.ranks]}
    if form == "circuits":
        return {"n": M.n, "circuits": lists(M.circuits())}
    return {"n": M.n, "bases": lists(M.bases())}


def presentation_obj(A: SetSystem) -> dict:
    return {"n": A.n, "presentation": A.to_lists()}


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))
