"""Invariants of a simplicial semigroup and the degree bounds stated in terms of them."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

from .groebner import BinomialBasis, initial_ideal, toric_basis, toric_ideal_by_elimination
from .hilbert import hilbert_numerator, poly_eval, reduce_numerator
from .lattice_core import Configuration, GroupMembership, Point, Semigroup, m_alpha_d, require_valid


class ConsistencyError(RuntimeError):
    """An invariant contradicted a bound that is known to hold: a bug, not data."""


# --- reduction number --------------------------------------------------------


def reduction_number(config: Configuration, cap: int | None = None, semigroup: Semigroup | None = None) -> int:
    """Least ``r >= 1`` with ``S_{r+1} = {e_1..e_d} + S_r``.

    ``cap`` is an upper bound known in advance (``deg - codim`` when the
    multiplicity is at hand); by default the cheap face bound is used.
    Running past it raises :class:`ConsistencyError`.
    """
    require_valid(config)
    if cap is None:
        cap = face_bounds(config, face_analysis(config))["a2ii"]
    sg = semigroup or Semigroup(config)
    verts = sg.vertex_codes()
    r = 1
    while True:
        shifted = {p + v for p in sg.level_codes(r) for v in verts}
        if len(shifted) == len(sg.level_codes(r + 1)):
            return r
        r += 1
        if r > cap:
            raise ConsistencyError(f"reduction number exceeds its bound {cap}")


# --- multiplicity ------------------------------------------------------------


def multiplicity_from_basis(basis: BinomialBasis, c: int) -> tuple[int, list[int], list[int]]:
    """Multiplicity, Hilbert numerator and h-polynomial from a toric Gröbner basis."""
    nvars = basis.universe.nvars
    num = hilbert_numerator(initial_ideal(basis), nvars)
    try:
        h = reduce_numerator(num, c)
    except ArithmeticError as exc:
        raise ConsistencyError(f"Hilbert numerator has the wrong dimension: {exc}") from exc
    return poly_eval(h, 1), num, h


def multiplicity(config: Configuration, basis: BinomialBasis | None = None) -> int:
    """deg K[S], read off the Hilbert series of the revlex initial ideal."""
    require_valid(config)
    if basis is None:
        basis = toric_ideal_by_elimination(config)
    return multiplicity_from_basis(basis, config.c)[0]


def hilbert_function(config: Configuration, upto: int, semigroup: Semigroup | None = None) -> list[int]:
    sg = semigroup or Semigroup(config)
    return [len(sg.level_codes(n)) for n in range(upto + 1)]


def multiplicity_by_counting(
    config: Configuration, max_degree: int = 40, stable: int | None = None, semigroup: Semigroup | None = None
) -> int:
    """deg K[S] from the (d-1)-st difference of |S_n|, once it has settled.

    The difference must repeat ``stable`` times in a row (default ``d + 1``).
    """
    d = config.d
    stable = stable or d + 1
    sg = semigroup or Semigroup(config)
    values: list[int] = []
    diffs: list[int] = []
    for n in range(max_degree + 1):
        values.append(len(sg.level_codes(n)))
        if len(values) < d:
            continue
        col = values[-d:]
        for _ in range(d - 1):
            col = [b - a for a, b in zip(col, col[1:])]
        diffs.append(col[0])
        if len(diffs) >= stable and len(set(diffs[-stable:])) == 1:
            return diffs[-1]
    raise ConsistencyError(f"Hilbert function did not settle by degree {max_degree}")


# --- faces -------------------------------------------------------------------


@dataclass(frozen=True)
class FaceData:
    index_set: tuple[int, ...]  # 1-based coordinates forced to zero
    dimension: int
    points_in_A: int
    is_full: bool


def _face(config: Configuration, I: Sequence[int]) -> FaceData:
    zero = [i - 1 for i in I]
    pts = [p for p in config.points if all(p[i] == 0 for i in zero)]
    dim = config.d - 1 - len(I)
    full = len(pts) == comb(config.alpha + dim, dim)
    return FaceData(tuple(I), dim, len(pts), full)


def face_analysis(config: Configuration) -> list[FaceData]:
    """Every proper face of the simplex (``1 <= |I| <= d-1``) with its point count."""
    d = config.d
    return [_face(config, I) for k in range(d - 1, 0, -1) for I in combinations(range(1, d + 1), k)]


def face_bounds(config: Configuration, faces: Sequence[FaceData]) -> dict[str, int]:
    """Reduction-number bounds from full faces and from point counts on faces.

    The simplex itself (``I`` empty) is included alongside the proper faces.
    """
    alpha, d = config.alpha, config.d
    allf = list(faces) + [_face(config, ())]
    full = [alpha ** (d - 1 - f.dimension) + f.dimension - 1 for f in allf if f.is_full]
    counts = []
    for f in allf:
        p = f.dimension
        q = f.points_in_A - p - 1
        if q >= 0:
            counts.append((alpha**p - q) * alpha ** (d - 1 - p))
    return {"a2ii": min(full), "a2iii": min(counts)}


# --- ring properties ---------------------------------------------------------


def _group_points(config: Configuration, n: int, member: GroupMembership) -> list[Point]:
    return [p for p in m_alpha_d(n * config.alpha, config.d) if member(p)]


def is_normal(config: Configuration, cap: int | None = None, semigroup: Semigroup | None = None) -> bool:
    """Compare S_n with the lattice points of degree n in Z(S) for ``n <= cap``.

    The default ``cap = max(1, d - 1)`` suffices: the normalization is
    generated over the vertex subsemigroup by points of the half-open
    parallelepiped they span, all of degree below ``d``.
    """
    require_valid(config)
    cap = max(1, config.d - 1) if cap is None else cap
    sg = semigroup or Semigroup(config)
    member = GroupMembership(config)
    for n in range(1, cap + 1):
        if len(_group_points(config, n, member)) != len(sg.level_codes(n)):
            return False
    return True


def is_isolated_singularity(config: Configuration) -> bool:
    """All points with ``alpha-1`` in one coordinate and ``1`` in another are generators."""
    alpha, d = config.alpha, config.d
    pts = set(config.points)
    for i in range(d):
        for j in range(d):
            if i != j:
                p = [0] * d
                p[i] = alpha - 1
                p[j] += 1
                if tuple(p) not in pts:
                    return False
    return True


@dataclass
class GcmResult:
    status: str  # "yes" | "no" | "unknown"
    degree_cap: int
    window: int
    difference: list[Point] = field(default_factory=list)
    witness: Point | None = None
    direction: int | None = None  # 0-based coordinate index of the vertex e_j

    def to_dict(self) -> dict:
        out = {"status": self.status, "degree_cap": self.degree_cap, "window": self.window}
        if self.status == "yes":
            out["difference"] = [list(p) for p in self.difference]
        if self.status == "no":
            out["witness"] = list(self.witness)
            out["direction"] = self.direction + 1
        return out


def gcm_check(
    config: Configuration,
    degree_cap: int | None = None,
    window: int | None = None,
    semigroup: Semigroup | None = None,
) -> GcmResult:
    """Bounded test for finiteness of ``S' \\ S`` with ``S' = ∩_i (S - S_i)``.

    ``S_i`` is the part of S with i-th coordinate zero, for ``i = 1..d``.
    Points of degree up to ``degree_cap`` are examined and shifts ``s`` in
    ``S_i`` are searched up to the same degree.  The outcome is "yes" with
    the complete difference set when nothing new appears in degrees
    ``[window, degree_cap]``, "no" with a ray ``b + N e_j`` lying in the
    difference throughout, and "unknown" otherwise.
    """
    require_valid(config)
    d, alpha = config.d, config.alpha
    degree_cap = 4 * d if degree_cap is None else degree_cap
    window = 2 * d if window is None else window
    if degree_cap < d:
        raise ValueError("degree_cap must be at least d")
    sg = semigroup or Semigroup(config)
    member = GroupMembership(config)
    shift_cap = degree_cap
    faces: list[list[list[int]]] = []  # faces[i][k]: codes of S_i in degree k
    for i in range(d):
        faces.append(
            [[c for c in sg.level_codes(k) if sg.decode(c)[i] == 0] for k in range(shift_cap + 1)]
        )

    def in_s_prime(code: int, n: int) -> bool:
        for i in range(d):
            if not any(code + s in sg.level_codes(n + k) for k in range(shift_cap + 1) for s in faces[i][k]):
                return False
        return True

    diff: list[tuple[int, Point]] = []
    for n in range(degree_cap + 1):
        level = sg.level_codes(n)
        for p in _group_points(config, n, member):
            code = sg.encode(p)
            if code not in level and in_s_prime(code, n):
                diff.append((n, p))
    diff.sort()
    diff_set = {p for _, p in diff}
    if not any(n >= window for n, _ in diff):
        return GcmResult("yes", degree_cap, window, [p for _, p in diff])
    for n, b in diff:
        for j in range(d):
            ray = [tuple(x + (alpha * k if i == j else 0) for i, x in enumerate(b)) for k in range(degree_cap - n + 1)]
            if not all(p in diff_set for p in ray):
                continue
            far = tuple(x + (alpha * degree_cap if i == j else 0) for i, x in enumerate(b))
            far_code = sg.encode(far)
            if far_code not in sg.level_codes(n + degree_cap) and in_s_prime(far_code, n + degree_cap):
                return GcmResult("no", degree_cap, window, witness=b, direction=j)
    return GcmResult("unknown", degree_cap, window)


# --- bounds and the full report ----------------------------------------------


def bounds(
    config: Configuration, r: int, deg: int, faces: Sequence[FaceData] | None = None
) -> dict[str, int]:
    """Every degree bound, keyed by short name.

    ``eg`` is the Eisenbud-Goto value ``deg - c + 1``; ``a1``, ``a3`` and
    ``a4`` bound the Gröbner degree for revlex and x-block orders; ``a2ii``
    and ``a2iii`` bound the reduction number; ``a6`` bounds the basis of the
    elimination ideal; ``sturmfels`` is ``c * deg``.
    """
    alpha, d, c = config.alpha, config.d, config.c
    out = {
        "eg": deg - c + 1,
        "a1": max(r + 1, 2 * r - 1),
        "a3": max(2, 2 * (deg - c) - 1),
        "a4": max(c, alpha, c * (alpha - 1) - 1),
        "a6": d * (alpha - 1) + min(2 * r, c * (alpha - 1)),
        "sturmfels": c * deg,
    }
    out.update(face_bounds(config, faces if faces is not None else face_analysis(config)))
    return out


@dataclass
class InvariantReport:
    config: Configuration
    r: int
    deg: int
    codim: int
    hilbert_numerator: list[int]
    h_polynomial: list[int]
    faces: list[FaceData]
    normal: bool
    isolated_singularity: bool
    bounds: dict[str, int]
    gb_max_degree: dict[str, int]
    gcm: GcmResult | None = None

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "r": self.r,
            "deg": self.deg,
            "codim": self.codim,
            "hilbert_numerator": self.hilbert_numerator,
            "h_polynomial": self.h_polynomial,
            "faces": [
                {"index_set": list(f.index_set), **{k: v for k, v in asdict(f).items() if k != "index_set"}}
                for f in self.faces
            ],
            "normal": self.normal,
            "isolated_singularity": self.isolated_singularity,
            "bounds": dict(sorted(self.bounds.items())),
            "gb_max_degree": self.gb_max_degree,
            "gcm": self.gcm.to_dict() if self.gcm else None,
        }


def compute_report(
    config: Configuration,
    *,
    orders: Sequence[str] = ("revlex", "xblock", "lex"),
    gcm_cap: int | None = None,
    with_gcm: bool = True,
) -> InvariantReport:
    require_valid(config)
    sg = Semigroup(config)
    revlex = toric_ideal_by_elimination(config)
    deg, num, h = multiplicity_from_basis(revlex, config.c)
    r = reduction_number(config, cap=deg - config.c, semigroup=sg)
    faces = face_analysis(config)
    gb = {}
    for name in orders:
        gb[name] = (revlex if name == "revlex" else toric_basis(config, name)).max_degree
    return InvariantReport(
        config=config,
        r=r,
        deg=deg,
        codim=config.c,
        hilbert_numerator=num,
        h_polynomial=h,
        faces=faces,
        normal=is_normal(config, semigroup=sg),
        isolated_singularity=is_isolated_singularity(config),
        bounds=bounds(config, r, deg, faces),
        gb_max_degree=gb,
        gcm=gcm_check(config, degree_cap=gcm_cap, semigroup=sg) if with_gcm else None,
    )
