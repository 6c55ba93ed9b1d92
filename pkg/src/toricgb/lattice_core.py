"""Lattice points of dilated simplices and the simplicial semigroups they generate.

Points are plain tuples of non-negative ints.  A :class:`Configuration`
fixes ``alpha``, ``d`` and the ordered non-vertex generators ``a_1..a_c``;
the vertices ``alpha * unit_j`` are always implied.
"""

from __future__ import annotations

import json
import math
import threading
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence

Point = tuple[int, ...]
PointSet = tuple[Point, ...]

# Coordinates never legitimately exceed this at desk scale; anything larger
# signals a runaway computation rather than a real result.
COORD_LIMIT = 2**62


class ConfigError(ValueError):
    """Raised when a configuration cannot be parsed or fails validation."""

    def __init__(self, message: str, violations: Sequence[str] = ()):
        super().__init__(message)
        self.violations = list(violations)


def m_alpha_d(alpha: int, d: int) -> PointSet:
    """All points of N^d with coordinate sum ``alpha``, lexicographically sorted."""
    if alpha < 0 or d < 1:
        raise ValueError(f"need alpha >= 0 and d >= 1, got {alpha}, {d}")
    # stars and bars: bar positions among alpha + d - 1 slots
    pts = []
    for bars in combinations(range(alpha + d - 1), d - 1):
        prev = -1
        coords = []
        for b in bars:
            coords.append(b - prev - 1)
            prev = b
        coords.append(alpha + d - 2 - prev)
        pts.append(tuple(coords))
    return tuple(sorted(pts))


def vertices(alpha: int, d: int) -> PointSet:
    return tuple(tuple(alpha if i == j else 0 for i in range(d)) for j in range(d))


def _check_point(p: Point) -> Point:
    for x in p:
        if abs(x) >= COORD_LIMIT:
            raise OverflowError(f"coordinate {x} exceeds {COORD_LIMIT}")
    return p


def add(p: Point, q: Point) -> Point:
    return _check_point(tuple(a + b for a, b in zip(p, q)))


def sumset(A: Iterable[Point], B: Iterable[Point]) -> PointSet:
    """Minkowski sum ``A + B``, deduplicated and sorted."""
    B = list(B)
    return tuple(sorted({add(a, b) for a in A for b in B}))


def degree(p: Point, alpha: int) -> int:
    s = sum(p)
    if s % alpha:
        raise ValueError(f"{p} has coordinate sum {s}, not a multiple of {alpha}")
    return s // alpha


@dataclass(frozen=True)
class Configuration:
    """A point set ``{e_1..e_d, a_1..a_c}`` inside M_{alpha,d}.

    Generator order is significant: it fixes the variable indices x_1..x_c.
    """

    alpha: int
    d: int
    generators: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(tuple(int(x) for x in g) for g in self.generators))

    @property
    def c(self) -> int:
        return len(self.generators)

    @property
    def vertices(self) -> PointSet:
        return vertices(self.alpha, self.d)

    @property
    def points(self) -> PointSet:
        """Vertices and generators, sorted (the degree-one slice of S)."""
        return tuple(sorted(set(self.vertices) | set(self.generators)))

    def column_images(self) -> tuple[Point, ...]:
        """Images of the variables x_1..x_c, y_1..y_d in N^d."""
        return self.generators + self.vertices

    @classmethod
    def from_dict(cls, data: dict) -> "Configuration":
        try:
            alpha = data["alpha"]
            d = data["d"]
            gens = data["generators"]
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"configuration is missing field {exc}") from exc
        if not isinstance(alpha, int) or not isinstance(d, int):
            raise ConfigError("alpha and d must be integers")
        if not isinstance(gens, list) or not all(
            isinstance(g, list) and all(isinstance(x, int) for x in g) for g in gens
        ):
            raise ConfigError("generators must be a list of integer lists")
        return cls(alpha, d, tuple(tuple(g) for g in gens))

    @classmethod
    def from_json(cls, text: str) -> "Configuration":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed configuration JSON: {exc}") from exc
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "d": self.d, "generators": [list(g) for g in self.generators]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def validate(config: Configuration) -> list[str]:
    """Return the list of violated configuration invariants.

    Entries starting with ``"warning:"`` are advisory (only the gcd
    condition); every other entry is an error.
    """
    out = []
    alpha, d = config.alpha, config.d
    if alpha < 2:
        out.append(f"alpha must be >= 2 (got {alpha})")
    if d < 2:
        out.append(f"d must be >= 2 (got {d})")
    if config.c < 2:
        out.append(f"need at least 2 generators (got c={config.c})")
    verts = set(vertices(alpha, d)) if d >= 1 and alpha >= 0 else set()
    seen = set()
    for i, g in enumerate(config.generators, 1):
        if len(g) != d:
            out.append(f"generator a{i}={g} has {len(g)} coordinates, expected {d}")
            continue
        if any(x < 0 for x in g) or sum(g) != alpha:
            out.append(f"generator a{i}={g} is not in M_{{{alpha},{d}}}")
        if g in verts:
            out.append(f"generator a{i}={g} equals a vertex")
        if g in seen:
            out.append(f"generator a{i}={g} is a duplicate")
        seen.add(g)
    entries = [x for g in config.generators for x in g]
    if entries and reduce(math.gcd, entries) != 1:
        out.append(f"warning: generator entries have common divisor {reduce(math.gcd, entries)}")
    return out


def errors(config: Configuration) -> list[str]:
    return [v for v in validate(config) if not v.startswith("warning:")]


def require_valid(config: Configuration) -> Configuration:
    errs = errors(config)
    if errs:
        raise ConfigError("invalid configuration: " + "; ".join(errs), errs)
    return config


class Semigroup:
    """Memoized degree slices S_0, S_1, ... of the semigroup of a configuration.

    Points are packed into integers in base ``2**RADIX_BITS`` so that
    point addition is a single integer addition.  Thread-safe; one
    instance may be shared between callers.
    """

    RADIX_BITS = 20

    def __init__(self, config: Configuration):
        self.config = config
        self.d = config.d
        self._atoms = tuple(self.encode(p) for p in config.points)
        self._levels: list[frozenset[int]] = [frozenset({0})]
        self._lock = threading.Lock()

    def encode(self, p: Sequence[int]) -> int:
        code = 0
        shift = 0
        for x in p:
            code |= x << shift
            shift += self.RADIX_BITS
        return code

    def decode(self, code: int) -> Point:
        mask = (1 << self.RADIX_BITS) - 1
        return tuple((code >> (k * self.RADIX_BITS)) & mask for k in range(self.d))

    @property
    def atom_codes(self) -> tuple[int, ...]:
        return self._atoms

    def vertex_codes(self) -> tuple[int, ...]:
        return tuple(self.encode(v) for v in self.config.vertices)

    def level_codes(self, n: int) -> frozenset[int]:
        """Packed codes of S_n."""
        if n < 0:
            raise ValueError("degree must be non-negative")
        if n * self.config.alpha >= 1 << self.RADIX_BITS:
            raise OverflowError(f"degree {n} exceeds the packed coordinate range")
        with self._lock:
            while len(self._levels) <= n:
                prev = self._levels[-1]
                self._levels.append(frozenset(p + a for p in prev for a in self._atoms))
            return self._levels[n]

    def level(self, n: int) -> frozenset[Point]:
        return frozenset(self.decode(c) for c in self.level_codes(n))

    def contains(self, p: Sequence[int]) -> bool:
        s = sum(p)
        if s % self.config.alpha or any(x < 0 for x in p):
            return False
        return self.encode(p) in self.level_codes(s // self.config.alpha)


def semigroup_level(config: Configuration, n: int) -> PointSet:
    """The sorted set of elements of S of degree ``n``."""
    return tuple(sorted(Semigroup(config).level(n)))


# --- integer linear algebra -------------------------------------------------


def hermite_rows(vectors: Iterable[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    Returns an echelon basis: each row has a positive pivot strictly right
    of the previous row's pivot, and entries above a pivot are reduced
    into ``[0, pivot)``.
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis: list[list[int]] = []
    col = 0
    while rows and col < ncols:
        nz = [r for r in rows if r[col] != 0]
        if not nz:
            col += 1
            continue
        rest = [r for r in rows if r[col] == 0]
        # Euclid on column `col` across the rows that touch it
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            new = [piv]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[col] != 0:
                    new.append(r)
                elif any(r):
                    rest.append(r)
            nz = new
        piv = nz[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        basis.append(piv)
        rows = rest
        col += 1
    for i, row in enumerate(basis):
        pc = next(j for j, a in enumerate(row) if a)
        for k in range(i):
            q = basis[k][pc] // row[pc]
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], row)]
    return basis


def lattice_contains(hnf: list[list[int]], p: Sequence[int]) -> bool:
    """Membership of ``p`` in the lattice whose HNF basis is ``hnf``."""
    v = list(p)
    for row in hnf:
        pc = next(j for j, a in enumerate(row) if a)
        if any(v[:pc]):
            return False
        q, r = divmod(v[pc], row[pc])
        if r:
            return False
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def integer_kernel(columns: Sequence[Sequence[int]]) -> list[list[int]]:
    """Z-basis of ``{u in Z^n : sum_i u_i * columns[i] = 0}``."""
    n = len(columns)
    m = len(columns[0]) if n else 0
    aug = [list(col) + [1 if i == j else 0 for j in range(n)] for i, col in enumerate(columns)]
    # echelonize on the first m columns only; the identity block records the transform
    rows = aug
    done: list[list[int]] = []
    for col in range(m):
        nz = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            new = [piv]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                (new if r[col] != 0 else rest).append(r)
            nz = new
        done.extend(nz)
        rows = rest
    return [r[m:] for r in rows]


@dataclass
class GroupMembership:
    """Membership oracle for the group Z(S) generated by a configuration."""

    config: Configuration
    hnf: list[list[int]] = field(init=False)

    def __post_init__(self):
        self.hnf = hermite_rows(self.config.column_images())

    def __call__(self, p: Sequence[int]) -> bool:
        return lattice_contains(self.hnf, p)


def in_group(config: Configuration, p: Sequence[int]) -> bool:
    """True iff ``p`` lies in the subgroup of Z^d generated by the configuration."""
    return GroupMembership(config)(p)
