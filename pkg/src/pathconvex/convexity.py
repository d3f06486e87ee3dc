"""Convexity specifications and their resolution against a graph.

A spec is either a symbolic ``(a, b, c, d)`` tuple, applied uniformly to all
vertex pairs, or four explicit length matrices. Either way, resolution
produces :class:`ResolvedBounds`: four concrete integer matrices giving, for
every pair ``(i, j)``, the admissible path length range ``[a, b]`` and chord
length range ``[c, d]``.

Bound symbols
-------------
``int k``          the constant ``k >= 1``
``SIGMA``          shortest ``ij``-path length
``ELL``            longest ``ij``-path length
``INF``            no restriction (materialized as ``n - 1``)
``NMINUS``         ``n - 1``
``MinSigma(k)``    ``min(k, dist(i, j))``
"""

from __future__ import annotations

import enum
import hashlib
import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path as FsPath
from typing import Sequence, Union

import numpy as np

from .errors import (
    AsymmetricMatrixError,
    MalformedTokenError,
    MatrixParseError,
    MatrixShapeMismatchError,
    MissingParameterError,
    NegativeEntryError,
    NonzeroDiagonalError,
    UnknownPresetError,
)
from .graph import LONGEST_PATH_CAP, Graph, all_pairs_distances, longest_path_matrix


class Sym(enum.Enum):
    SIGMA = "sigma"
    ELL = "ell"
    INF = "inf"
    NMINUS = "nminus"

    def __repr__(self) -> str:
        return self.name


SIGMA, ELL, INF, NMINUS = Sym.SIGMA, Sym.ELL, Sym.INF, Sym.NMINUS


@dataclass(frozen=True)
class MinSigma:
    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise MalformedTokenError(f"min:<k> needs k >= 1, got {self.k!r}")


BoundSymbol = Union[int, Sym, MinSigma]
Entry = Union[int, Sym]  # matrix entries: naturals or INF
Matrix = tuple[tuple[Entry, ...], ...]


def _check_symbol(x) -> BoundSymbol:
    if isinstance(x, bool):
        raise MalformedTokenError(f"bad bound {x!r}")
    if isinstance(x, (int, np.integer)):
        if x < 1:
            raise MalformedTokenError(f"constant bounds must be >= 1, got {x}")
        return int(x)
    if isinstance(x, (Sym, MinSigma)):
        return x
    raise MalformedTokenError(f"bad bound {x!r}")


def symbol_text(x: BoundSymbol) -> str:
    if isinstance(x, MinSigma):
        return f"min:{x.k}"
    if isinstance(x, Sym):
        return x.value
    return str(x)


@dataclass(frozen=True, eq=False)
class ConvexitySpec:
    """Symbolic tuple or four length matrices, plus an optional preset name."""

    symbols: tuple[BoundSymbol, BoundSymbol, BoundSymbol, BoundSymbol] | None = None
    matrices: tuple[Matrix, Matrix, Matrix, Matrix] | None = None
    name: str | None = None

    def __post_init__(self):
        if (self.symbols is None) == (self.matrices is None):
            raise ValueError("exactly one of symbols / matrices must be given")

    @property
    def is_matrix(self) -> bool:
        return self.matrices is not None

    def to_text(self) -> str:
        """Canonical text form; parse_spec(to_text()) round-trips symbolic specs."""
        if self.name is not None:
            return f"preset:{self.name}"
        if self.symbols is not None:
            return "abcd:" + ",".join(symbol_text(s) for s in self.symbols)
        return f"matrices:{self.digest}"

    def to_json_obj(self):
        """Symbolic specs serialize as their text; matrix specs as the file schema."""
        if self.symbols is not None:
            return self.to_text()
        return matrices_to_json_obj(self)

    @cached_property
    def digest(self) -> str:
        blob = json.dumps(self.to_json_obj() if self.is_matrix else self.to_text(), sort_keys=True)
        return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()

    def __eq__(self, other):
        if not isinstance(other, ConvexitySpec):
            return NotImplemented
        return (self.symbols, self.matrices) == (other.symbols, other.matrices)

    def __hash__(self):
        return hash((self.symbols, self.matrices))

    def __repr__(self) -> str:
        if self.symbols is not None:
            body = ", ".join(symbol_text(s) for s in self.symbols)
            tag = f" [{self.name}]" if self.name else ""
            return f"ConvexitySpec(({body}){tag})"
        return f"ConvexitySpec(matrices n={len(self.matrices[0])})"


def abcd(a, b, c, d, name: str | None = None) -> ConvexitySpec:
    return ConvexitySpec(symbols=tuple(_check_symbol(x) for x in (a, b, c, d)), name=name)


# -- presets -------------------------------------------------------------

_FIXED_PRESETS: dict[str, tuple] = {
    "geodesic": (SIGMA, SIGMA, 1, 1),
    "monophonic": (2, INF, 1, 1),
    "g3": (3, SIGMA, 1, 1),
    "m3": (3, INF, 1, 1),
    "p3": (2, 2, 1, 2),
    "p3star": (2, 2, 1, 1),
    "triangle": (2, INF, 1, 2),
    "total": (2, INF, 3, INF),
    "detour": (ELL, ELL, 1, INF),
    "allpath": (2, INF, 1, INF),
    "hamiltonian": (NMINUS, NMINUS, 1, INF),
}

# name -> (arity, builder)
_PARAM_PRESETS = {
    "gk": (1, lambda k: (SIGMA, MinSigma(k), 1, 1)),
    "gk_new": (1, lambda k: (k, SIGMA, 1, 1)),
    "mk": (1, lambda k: (k, INF, 1, 1)),
    "klpath": (2, lambda k, l: (k, l, 1, 1)),
    "kcycle": (1, lambda k: (k - 1, k - 1, k - 1, k - 1)),
}

#: The eleven literature convexities, with g_k instantiated at k = 2.
LITERATURE_PRESETS = (
    "geodesic", "monophonic", "g3", "m3", "gk:2", "p3",
    "p3star", "triangle", "total", "detour", "allpath",
)


def _positive_int(tok: str, where: str) -> int:
    tok = tok.strip()
    if not tok:
        raise MissingParameterError(f"{where}: missing integer parameter")
    try:
        k = int(tok)
    except ValueError:
        raise MalformedTokenError(f"{where}: expected an integer, got {tok!r}") from None
    if k < 1:
        raise MalformedTokenError(f"{where}: parameter must be >= 1, got {k}")
    return k


def preset(name: str) -> ConvexitySpec:
    """Look up a preset by name, e.g. ``"geodesic"``, ``"gk:3"``, ``"klpath:2,4"``."""
    base, sep, params = name.partition(":")
    if base in _FIXED_PRESETS:
        if sep:
            raise MalformedTokenError(f"preset {base!r} takes no parameter")
        return abcd(*_FIXED_PRESETS[base], name=base)
    if base not in _PARAM_PRESETS:
        raise UnknownPresetError(f"unknown preset {base!r}")
    arity, build = _PARAM_PRESETS[base]
    if not sep or not params.strip():
        raise MissingParameterError(f"preset {base!r} needs {arity} parameter(s), e.g. {base}:3")
    parts = params.split(",")
    if len(parts) != arity:
        raise MissingParameterError(f"preset {base!r} needs {arity} parameter(s), got {len(parts)}")
    ks = [_positive_int(p, f"preset {base}") for p in parts]
    if base == "kcycle" and ks[0] < 2:
        raise MalformedTokenError("preset kcycle needs k >= 2")
    canon = base + ":" + ",".join(map(str, ks))
    return abcd(*build(*ks), name=canon)


def _parse_token(tok: str) -> BoundSymbol:
    t = tok.strip().lower()
    if not t:
        raise MalformedTokenError("empty bound token")
    for sym in Sym:
        if t == sym.value:
            return sym
    if t.startswith("min:"):
        return MinSigma(_positive_int(t[4:], "min:<k>"))
    if t == "min":
        raise MissingParameterError("min needs a parameter, e.g. min:3")
    try:
        k = int(t)
    except ValueError:
        raise MalformedTokenError(f"unrecognized bound token {tok!r}") from None
    if k < 1:
        raise MalformedTokenError(f"constant bounds must be >= 1, got {k}")
    return k


def parse_spec(text: str) -> ConvexitySpec:
    """Parse ``preset:<name>`` or ``abcd:<a>,<b>,<c>,<d>``."""
    text = text.strip()
    kind, sep, rest = text.partition(":")
    if not sep:
        raise MalformedTokenError(f"spec {text!r} must start with 'preset:' or 'abcd:'")
    if kind == "preset":
        if not rest:
            raise MissingParameterError("preset: needs a name")
        return preset(rest)
    if kind == "abcd":
        toks = rest.split(",")
        if len(toks) != 4:
            raise MalformedTokenError(f"abcd: needs exactly four tokens, got {len(toks)}")
        return abcd(*(_parse_token(t) for t in toks))
    raise MalformedTokenError(f"spec {text!r} must start with 'preset:' or 'abcd:'")


# -- matrix mode -----------------------------------------------------------


def _as_matrix(m, label: str, n: int | None) -> Matrix:
    try:
        rows = [list(r) for r in m]
    except TypeError:
        raise MatrixShapeMismatchError(f"matrix {label} is not a list of rows") from None
    size = len(rows) if n is None else n
    if len(rows) != size or any(len(r) != size for r in rows):
        shape = f"{len(rows)}x{'/'.join(sorted({str(len(r)) for r in rows})) or 0}"
        raise MatrixShapeMismatchError(f"matrix {label} has shape {shape}, expected {size}x{size}")
    out = []
    for i, row in enumerate(rows):
        new = []
        for j, x in enumerate(row):
            if x is INF:
                new.append(INF)
                continue
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                raise MatrixParseError(f"matrix {label}[{i + 1}][{j + 1}] is not an integer: {x!r}")
            if x < 0:
                raise NegativeEntryError(f"matrix {label}[{i + 1}][{j + 1}] = {x} is negative")
            new.append(int(x))
        out.append(tuple(new))
    for i in range(size):
        if out[i][i] != 0:
            raise NonzeroDiagonalError(f"matrix {label} has nonzero diagonal entry at ({i + 1},{i + 1})")
        for j in range(i + 1, size):
            if out[i][j] != out[j][i]:
                raise AsymmetricMatrixError(
                    f"matrix {label} is not symmetric at ({i + 1},{j + 1}): {out[i][j]!r} vs {out[j][i]!r}")
    return tuple(out)


def matrix_spec(A, B, C, D) -> ConvexitySpec:
    """Build a matrix-mode spec. Entries are naturals or :data:`INF`."""
    mats = []
    n = None
    for label, m in zip("ABCD", (A, B, C, D)):
        mat = _as_matrix(m, label, n)
        n = len(mat)
        mats.append(mat)
    return ConvexitySpec(matrices=tuple(mats))


def constant_matrix(n: int, value: Entry) -> Matrix:
    """The ``n x n`` length matrix with every off-diagonal entry equal to ``value``."""
    return tuple(tuple(0 if i == j else value for j in range(n)) for i in range(n))


def _encode(x: Entry) -> int:
    return -1 if x is INF else x


def matrices_to_json_obj(spec: ConvexitySpec) -> dict:
    n = len(spec.matrices[0])
    obj = {"n": n}
    for label, mat in zip("ABCD", spec.matrices):
        obj[label] = [[_encode(x) for x in row] for row in mat]
    return obj


def dump_matrix_spec(spec: ConvexitySpec, path: str | FsPath) -> None:
    FsPath(path).write_text(json.dumps(matrices_to_json_obj(spec)) + "\n")


def matrix_spec_from_json(obj) -> ConvexitySpec:
    if not isinstance(obj, dict):
        raise MatrixParseError("matrix file must hold a JSON object")
    missing = [k for k in ("n", "A", "B", "C", "D") if k not in obj]
    if missing:
        raise MatrixParseError(f"matrix file is missing key(s) {', '.join(missing)}")
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise MatrixParseError(f"'n' must be a positive integer, got {n!r}")
    mats = []
    for label in "ABCD":
        raw = obj[label]
        if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
            raise MatrixShapeMismatchError(f"matrix {label} must be an array of arrays")
        decoded = []
        for i, row in enumerate(raw):
            new = []
            for j, x in enumerate(row):
                if isinstance(x, bool) or not isinstance(x, int):
                    raise MatrixParseError(f"matrix {label}[{i + 1}][{j + 1}] is not an integer: {x!r}")
                if x == -1:
                    new.append(INF)
                elif x < 0:
                    raise NegativeEntryError(
                        f"matrix {label}[{i + 1}][{j + 1}] = {x}; only -1 (infinity) may be negative")
                else:
                    new.append(x)
            decoded.append(new)
        mats.append(_as_matrix(decoded, label, n))
    return ConvexitySpec(matrices=tuple(mats))


def load_matrix_spec(path: str | FsPath) -> ConvexitySpec:
    """Load the JSON matrix format: keys ``n, A, B, C, D``; ``-1`` means infinity."""
    try:
        text = FsPath(path).read_text()
    except OSError as exc:
        raise MatrixParseError(f"cannot read matrix file {str(path)!r}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return matrix_spec_from_json(obj)


# -- resolution --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ResolvedBounds:
    """Concrete per-pair bounds; ``A..D`` are ``n x n`` int64 arrays, 0-indexed."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray
    _rows: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for m in (self.A, self.B, self.C, self.D):
            m.setflags(write=False)
        n = self.n
        rows = [[None] * (n + 1) for _ in range(n + 1)]
        a, b, c, d = (m.tolist() for m in (self.A, self.B, self.C, self.D))
        for i in range(n):
            for j in range(n):
                rows[i + 1][j + 1] = (a[i][j], b[i][j], c[i][j], d[i][j])
        object.__setattr__(self, "_rows", tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return self.A.shape[0]

    def bounds(self, i: int, j: int) -> tuple[int, int, int, int]:
        """``(a, b, c, d)`` for the pair ``(i, j)`` (1-indexed)."""
        return self._rows[i][j]

    def _off_diagonal(self, m: np.ndarray) -> np.ndarray:
        return m[~np.eye(self.n, dtype=bool)]

    def matches_distances(self, g: Graph) -> bool:
        """True when ``a_ij = b_ij = dist(i, j)`` for every pair (the geodesic shape)."""
        dist = all_pairs_distances(g)
        return bool(np.array_equal(self.A, dist) and np.array_equal(self.B, dist))

    def is_length_two(self) -> bool:
        """True when every pair asks for paths of exactly two edges."""
        if self.n < 2:
            return False
        return bool(np.all(self._off_diagonal(self.A) == 2) and np.all(self._off_diagonal(self.B) == 2))

    def __eq__(self, other):
        if not isinstance(other, ResolvedBounds):
            return NotImplemented
        return all(np.array_equal(x, y) for x, y in zip(self.as_tuple(), other.as_tuple()))

    def __hash__(self):
        return hash(tuple(m.tobytes() for m in self.as_tuple()))

    def as_tuple(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        return self.A, self.B, self.C, self.D


def _symbol_matrix(sym: BoundSymbol, g: Graph, dist, longest, cap) -> np.ndarray:
    n = g.n
    if isinstance(sym, int):
        m = np.full((n, n), sym, dtype=np.int64)
    elif sym is SIGMA:
        m = dist.copy()
    elif sym is ELL:
        if longest[0] is None:
            longest[0] = longest_path_matrix(g, cap)
        m = longest[0].copy()
    elif sym in (INF, NMINUS):
        m = np.full((n, n), n - 1, dtype=np.int64)
    elif isinstance(sym, MinSigma):
        m = np.minimum(dist, sym.k)
    else:  # pragma: no cover
        raise TypeError(sym)
    np.fill_diagonal(m, 0)
    return m


def resolve_bounds(spec: ConvexitySpec, g: Graph, cap: int = LONGEST_PATH_CAP) -> ResolvedBounds:
    """Evaluate ``spec`` against ``g``.

    ``cap`` limits the exhaustive longest-path search used for ``ELL``.
    """
    n = g.n
    if spec.matrices is not None:
        size = len(spec.matrices[0])
        if size != n:
            raise MatrixShapeMismatchError(f"matrices are {size}x{size} but the graph has n={n}")
        mats = []
        for mat in spec.matrices:
            arr = np.array([[n - 1 if x is INF else x for x in row] for row in mat], dtype=np.int64)
            np.fill_diagonal(arr, 0)
            mats.append(arr)
        return ResolvedBounds(*mats)
    dist = all_pairs_distances(g)
    longest = [None]
    return ResolvedBounds(*(_symbol_matrix(s, g, dist, longest, cap) for s in spec.symbols))


def resolve(spec: ConvexitySpec | str, g: Graph, cap: int = LONGEST_PATH_CAP) -> ResolvedBounds:
    """Convenience: accept spec text too."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    return resolve_bounds(spec, g, cap)
