"""Buchberger's algorithm specialised to binomial ideals.

Every polynomial handled here is ``lead - tail`` with both coefficients one:
S-polynomials and reductions of such binomials stay of that shape, so no
field arithmetic is needed.  Monomials are exponent tuples.
"""

from __future__ import annotations

import heapq
import json
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .lattice_core import Configuration, integer_kernel, require_valid
from .order import Kind, Monomial, TermOrder, Universe, UniverseMismatch

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """The S-pair budget ran out before the computation finished."""


class Binomial(NamedTuple):
    lead: Monomial
    tail: Monomial

    @property
    def degree(self) -> int:
        """Total degree of the polynomial (the larger of its two terms)."""
        return max(sum(self.lead), sum(self.tail))

    def is_homogeneous(self) -> bool:
        return sum(self.lead) == sum(self.tail)

    def is_primitive(self) -> bool:
        return not any(min(a, b) for a, b in zip(self.lead, self.tail))


@dataclass(frozen=True)
class BinomialBasis:
    elements: tuple[Binomial, ...]
    order: TermOrder
    reduced: bool = False

    @property
    def max_degree(self) -> int:
        """Largest lead degree, i.e. the largest degree of a generator of in(I)."""
        return max((sum(b.lead) for b in self.elements), default=0)

    @property
    def max_poly_degree(self) -> int:
        return max((b.degree for b in self.elements), default=0)

    @property
    def universe(self) -> Universe:
        return self.order.universe

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


# --- monomial helpers --------------------------------------------------------


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _strip_common(a: Monomial, b: Monomial) -> tuple[Monomial, Monomial]:
    g = [x if x < y else y for x, y in zip(a, b)]
    if not any(g):
        return a, b
    return tuple(x - z for x, z in zip(a, g)), tuple(y - z for y, z in zip(b, g))


def orient(order: TermOrder, a: Monomial, b: Monomial, primitive: bool = True) -> Binomial | None:
    """Normalise ``a - b`` into a Binomial under ``order``; None for zero."""
    if primitive:
        a, b = _strip_common(a, b)
    if a == b:
        return None
    key = order.key
    return Binomial(a, b) if key(a) > key(b) else Binomial(b, a)


class _Reducer:
    """Leads of the current basis with sparse supports for quick divisibility."""

    __slots__ = ("entries",)

    def __init__(self):
        # each entry: (sparse lead support, lead, tail)
        self.entries: list[tuple[tuple[tuple[int, int], ...], Monomial, Monomial]] = []

    def add(self, b: Binomial) -> None:
        sparse = tuple((i, e) for i, e in enumerate(b.lead) if e)
        self.entries.append((sparse, b.lead, b.tail))

    def remove_where(self, pred) -> None:
        self.entries = [e for e in self.entries if not pred(e[1])]

    def find(self, m: Monomial):
        for sparse, lead, tail in self.entries:
            for i, e in sparse:
                if m[i] < e:
                    break
            else:
                return lead, tail
        return None

    def normal_form(self, m: Monomial) -> Monomial:
        find = self.find
        while True:
            hit = find(m)
            if hit is None:
                return m
            lead, tail = hit
            m = tuple(x - l + t for x, l, t in zip(m, lead, tail))


def normal_form(m: Monomial, basis: BinomialBasis) -> Monomial:
    """Normal form of a monomial modulo a Gröbner basis (again a monomial)."""
    basis.order.check(m)
    red = _Reducer()
    for b in basis.elements:
        red.add(b)
    return red.normal_form(tuple(m))


def buchberger(
    gens: Iterable[tuple[Monomial, Monomial]],
    order: TermOrder,
    *,
    cap: int | None = None,
    primitive: bool = True,
    chain: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> BinomialBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    ``primitive`` divides every binomial by the gcd of its terms, which is
    only sound for ideals saturated with respect to all variables (toric
    ideals).  With ``cap`` set, S-pairs whose lcm has degree above ``cap``
    are discarded; for homogeneous input this yields the part of the basis
    in degrees ``<= cap``.
    """
    key = order.key
    nvars = order.universe.nvars
    red = _Reducer()
    basis: list[Binomial] = []
    active: list[bool] = []
    pairs: dict[tuple[int, int], Monomial] = {}
    heap: list = []
    spent = 0

    def push_pair(i: int, j: int) -> None:
        L = _lcm(basis[i].lead, basis[j].lead)
        deg = sum(L)
        if cap is not None and deg > cap:
            return
        pairs[(i, j)] = L
        heapq.heappush(heap, (deg, key(L), 1, i, j))

    def insert(h: Binomial) -> None:
        n = len(basis)
        lh = h.lead
        basis.append(h)
        active.append(True)
        cands = [i for i in range(n) if active[i]]
        if chain:
            # Gebauer-Moeller, selecting new pairs in ascending lcm degree
            sp_h = [(k, e) for k, e in enumerate(lh) if e]

            def div_h(L):
                for k, e in sp_h:
                    if L[k] < e:
                        return False
                return True

            order_c = sorted(
                ((sum(L), i, L) for i in cands for L in (_lcm(basis[i].lead, lh),)),
                key=lambda t: t[0],
            )
            kept: list[list[tuple[int, int]]] = []
            new = []
            for _, i, L in order_c:
                hit = False
                for K in kept:
                    for k, e in K:
                        if L[k] < e:
                            break
                    else:
                        hit = True
                        break
                if hit:
                    continue
                kept.append([(k, e) for k, e in enumerate(L) if e])
                if not _coprime(basis[i].lead, lh):
                    new.append(i)
            stale = [
                (i, j)
                for (i, j), L in pairs.items()
                if div_h(L) and _lcm(basis[i].lead, lh) != L and _lcm(basis[j].lead, lh) != L
            ]
            for p in stale:
                del pairs[p]
        else:
            new = [i for i in cands if not _coprime(basis[i].lead, lh)]
        for i in new:
            push_pair(i, n)
        for i in cands:
            if _divides(lh, basis[i].lead):
                active[i] = False
        red.remove_where(lambda lead: _divides(lh, lead))
        red.add(h)

    for a, b in gens:
        if len(a) != nvars or len(b) != nvars:
            raise UniverseMismatch(f"generator of length {len(a)} in a {nvars}-variable universe")
        g = orient(order, tuple(a), tuple(b), primitive)
        if g is not None:
            L = g.lead
            heapq.heappush(heap, (max(sum(g.lead), sum(g.tail)), key(L), 0, g.lead, g.tail))

    nf = red.normal_form
    while heap:
        deg, _, kind, p, q = heapq.heappop(heap)
        if kind == 1:
            if pairs.pop((p, q), None) is None:
                continue
            spent += 1
            if spent > budget:
                raise BudgetExceeded(f"S-pair budget of {budget} exceeded")
            bi, bj = basis[p], basis[q]
            L = _lcm(bi.lead, bj.lead)
            s1 = tuple(x - l + t for x, l, t in zip(L, bi.lead, bi.tail))
            s2 = tuple(x - l + t for x, l, t in zip(L, bj.lead, bj.tail))
        else:
            s1, s2 = p, q
        if primitive:
            s1, s2 = _strip_common(s1, s2)
        n1, n2 = nf(s1), nf(s2)
        h = orient(order, n1, n2, primitive)
        if h is None:
            continue
        if primitive and (h.lead != n1 and h.lead != n2):
            # common factor stripped: the lead may have become reducible
            h = _fully_reduce(h, red, order, primitive)
            if h is None:
                continue
        insert(h)

    final = [b for b, on in zip(basis, active) if on]
    return _autoreduce(final, order, primitive)


def _fully_reduce(h: Binomial, red: _Reducer, order: TermOrder, primitive: bool) -> Binomial | None:
    while True:
        n1, n2 = red.normal_form(h.lead), red.normal_form(h.tail)
        g = orient(order, n1, n2, primitive)
        if g is None or g == h:
            return g
        h = g


def _autoreduce(elements: Sequence[Binomial], order: TermOrder, primitive: bool) -> BinomialBasis:
    key = order.key
    elems = sorted(elements, key=lambda b: key(b.lead))
    minimal: list[Binomial] = []
    for b in elems:
        if not any(_divides(m.lead, b.lead) for m in minimal):
            minimal.append(b)
    red = _Reducer()
    for b in minimal:
        red.add(b)
    out = []
    for b in minimal:
        tail = red.normal_form(b.tail)
        lead, tail = (_strip_common(b.lead, tail) if primitive else (b.lead, tail))
        out.append(Binomial(lead, tail))
    out.sort(key=lambda b: key(b.lead))
    return BinomialBasis(tuple(out), order, reduced=True)


def reduced_groebner_basis(
    gens: BinomialBasis | Iterable[tuple[Monomial, Monomial]],
    order: TermOrder,
    *,
    budget: int = DEFAULT_BUDGET,
    chain: bool = True,
    primitive: bool = True,
) -> BinomialBasis:
    """The reduced Gröbner basis under ``order`` of the ideal generated by ``gens``."""
    if isinstance(gens, BinomialBasis):
        if gens.universe.nvars != order.universe.nvars:
            raise UniverseMismatch("generators and order live in different universes")
        gens = gens.elements
    return buchberger(gens, order, budget=budget, chain=chain, primitive=primitive)


def truncated_groebner(
    gens: BinomialBasis | Iterable[tuple[Monomial, Monomial]],
    order: TermOrder,
    cap: int | float,
    *,
    budget: int = DEFAULT_BUDGET,
) -> BinomialBasis:
    """Degree-truncated Buchberger: S-pairs of degree above ``cap`` are never formed."""
    if isinstance(gens, BinomialBasis):
        gens = gens.elements
    gens = list(gens)
    if cap == float("inf"):
        return buchberger(gens, order, budget=budget)
    top = max((max(sum(a), sum(b)) for a, b in gens), default=0)
    if cap < top:
        raise ValueError(f"cap {cap} is below the generator degree {top}")
    return buchberger(gens, order, cap=int(cap), budget=budget)


def initial_ideal(basis: BinomialBasis) -> tuple[Monomial, ...]:
    """Minimal generators of the initial ideal, ascending in the basis order."""
    leads = [b.lead for b in basis.elements]
    mins = [m for m in leads if not any(o != m and _divides(o, m) for o in leads)]
    return tuple(sorted(set(mins), key=basis.order.key))


def basis_membership(b: tuple[Monomial, Monomial], basis: BinomialBasis) -> bool:
    """True iff ``b`` (after orientation and gcd stripping) is an element of ``basis``."""
    g = orient(basis.order, tuple(b[0]), tuple(b[1]))
    return g is not None and g in set(basis.elements)


def ideal_contains(basis: BinomialBasis, b: tuple[Monomial, Monomial]) -> bool:
    """Ideal membership of ``b[0] - b[1]`` via normal forms modulo a Gröbner basis."""
    red = _Reducer()
    for g in basis.elements:
        red.add(g)
    return red.normal_form(tuple(b[0])) == red.normal_form(tuple(b[1]))


def satisfies_buchberger_criterion(basis: BinomialBasis) -> bool:
    """Check that every S-pair of ``basis`` reduces to zero (no criteria skipped)."""
    red = _Reducer()
    for g in basis.elements:
        red.add(g)
    els = basis.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            bi, bj = els[i], els[j]
            L = _lcm(bi.lead, bj.lead)
            s1 = tuple(x - l + t for x, l, t in zip(L, bi.lead, bi.tail))
            s2 = tuple(x - l + t for x, l, t in zip(L, bj.lead, bj.tail))
            if red.normal_form(s1) != red.normal_form(s2):
                return False
    return True


# --- toric ideals ------------------------------------------------------------


def _txy_generators(config: Configuration) -> list[tuple[Monomial, Monomial]]:
    c, d, alpha = config.c, config.d, config.alpha
    n = d + c + d
    gens = []
    for i, a in enumerate(config.generators):
        x = [0] * n
        x[d + i] = 1
        gens.append((tuple(x), tuple(a) + (0,) * (c + d)))
    for j in range(d):
        y = [0] * n
        y[d + c + j] = 1
        t = [0] * n
        t[j] = alpha
        gens.append((tuple(y), tuple(t)))
    return gens


def elimination_basis(config: Configuration, *, budget: int = DEFAULT_BUDGET) -> BinomialBasis:
    """Reduced Gröbner basis of J_A = (x_i - t^{a_i}, y_j - t_j^alpha) under elim-revlex."""
    require_valid(config)
    order = TermOrder(Kind.ELIM_REVLEX, Universe(config.c, config.d, with_t=True))
    return buchberger(_txy_generators(config), order, budget=budget)


def toric_ideal_by_elimination(config: Configuration, *, budget: int = DEFAULT_BUDGET) -> BinomialBasis:
    """Gröbner basis of I_A obtained as the t-free part of the J_A basis.

    The result is the reduced basis under revlex, the restriction of
    elim-revlex to the x,y variables.
    """
    big = elimination_basis(config, budget=budget)
    d = config.d
    keep = [
        (b.lead[d:], b.tail[d:])
        for b in big.elements
        if not any(b.lead[:d]) and not any(b.tail[:d])
    ]
    return _autoreduce(
        [Binomial(a, b) for a, b in keep], big.order.restricted(), primitive=True
    )


def _swap(m: Monomial, i: int, j: int) -> Monomial:
    if i == j:
        return m
    m = list(m)
    m[i], m[j] = m[j], m[i]
    return tuple(m)


def lattice_generators(config: Configuration) -> list[tuple[Monomial, Monomial]]:
    """Binomials of a kernel lattice basis plus ``x_i^alpha - y^{a_i}``."""
    c, d, alpha = config.c, config.d, config.alpha
    gens = []
    for u in integer_kernel(config.column_images()):
        gens.append((tuple(max(v, 0) for v in u), tuple(max(-v, 0) for v in u)))
    for i, a in enumerate(config.generators):
        x = [0] * (c + d)
        x[i] = alpha
        gens.append((tuple(x), (0,) * c + tuple(a)))
    return gens


def toric_ideal_by_lattice(config: Configuration, *, budget: int = DEFAULT_BUDGET) -> BinomialBasis:
    """Generators of I_A from the kernel lattice, saturated one y-variable at a time.

    Because each ``x_i^alpha - y^{a_i}`` is present, saturating by the
    y-variables alone already saturates by every variable.  Saturation by
    ``y_j`` uses a revlex basis with ``y_j`` moved to the last position,
    where dividing each element by its ``y_j``-content gives a basis of the
    quotient ideal.
    """
    require_valid(config)
    c, d = config.c, config.d
    universe = Universe(c, d)
    revlex = TermOrder(Kind.REVLEX, universe)
    last = c + d - 1
    gens = lattice_generators(config)
    for j in range(d):
        pos = c + j
        swapped = [(_swap(a, pos, last), _swap(b, pos, last)) for a, b in gens]
        gb = buchberger(swapped, revlex, primitive=False, budget=budget)
        gens = []
        for b in gb.elements:
            k = min(b.lead[last], b.tail[last])
            lead = b.lead[:last] + (b.lead[last] - k,)
            tail = b.tail[:last] + (b.tail[last] - k,)
            gens.append((_swap(lead, pos, last), _swap(tail, pos, last)))
    final = reduced_groebner_basis(gens, revlex, budget=budget)
    return BinomialBasis(final.elements, revlex, reduced=False)


def toric_basis(config: Configuration, order: TermOrder | str = "revlex", *, budget: int = DEFAULT_BUDGET) -> BinomialBasis:
    """Reduced Gröbner basis of I_A under an order on the x,y variables."""
    if isinstance(order, str):
        order = TermOrder.named(order, Universe(config.c, config.d))
    base = toric_ideal_by_elimination(config, budget=budget)
    if order.kind is Kind.REVLEX:
        return base
    return reduced_groebner_basis(base, order, budget=budget)


def _sparse_key(order: TermOrder):
    """Sort key on sorted variable-index tuples, valid between monomials of equal degree."""
    if order.kind is Kind.REVLEX:
        return lambda m: tuple(-v for v in reversed(m))
    if order.kind is Kind.LEX:
        return lambda m: tuple(-v for v in m)
    if order.kind is Kind.XBLOCK:
        c = order.universe.c
        return lambda m: (sum(1 for v in m if v < c), tuple(-v for v in reversed(m)))
    raise ValueError(f"{order.name} is not an order on the x,y variables")


def fiber_basis(config: Configuration, order: TermOrder | str, max_degree: int) -> BinomialBasis:
    """The reduced Gröbner basis elements of I_A of degree ``<= max_degree``.

    Works one degree at a time without any generating set: in degree n
    the standard monomial of each fiber (monomials with the same image in
    S_n) is its smallest member, every divisor of a standard monomial is
    standard, and a basis element is ``m - std(fiber(m))`` for each
    non-standard ``m`` whose degree-(n-1) divisors are all standard.
    Monomials are handled as sorted tuples of variable indices.
    """
    require_valid(config)
    from .lattice_core import Semigroup

    if isinstance(order, str):
        order = TermOrder.named(order, Universe(config.c, config.d))
    key = _sparse_key(order)
    nvars = config.c + config.d
    sg = Semigroup(config)
    images = [sg.encode(p) for p in config.column_images()]
    standard: dict[tuple[int, ...], int] = {(): 0}
    found: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for _ in range(max_degree):
        # candidates: every degree-(n-1) divisor is standard
        cands: dict[tuple[int, ...], int] = {}
        for m, img in standard.items():
            lo = m[-1] if m else 0
            for v in range(lo, nvars):
                mm = m + (v,)
                ok = True
                prev = -1
                for pos, u in enumerate(m):
                    if u == prev:
                        continue
                    prev = u
                    if mm[:pos] + mm[pos + 1 :] not in standard:
                        ok = False
                        break
                if ok:
                    cands[mm] = img + images[v]
        best: dict[int, tuple] = {}
        for m, img in cands.items():
            k = key(m)
            cur = best.get(img)
            if cur is None or k < cur[0]:
                best[img] = (k, m)
        std = {m: img for img, (_, m) in best.items()}
        for m, img in cands.items():
            if m not in std:
                found.append((m, best[img][1]))
        standard = std

    def dense(m):
        out = [0] * nvars
        for v in m:
            out[v] += 1
        return tuple(out)

    dkey = order.key
    els = sorted((Binomial(dense(a), dense(b)) for a, b in found), key=lambda b: dkey(b.lead))
    return BinomialBasis(tuple(els), order, reduced=True)


# --- text / JSON formats -----------------------------------------------------


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
    return "*".join(parts) if parts else "1"


def format_basis(basis: BinomialBasis) -> str:
    names = basis.universe.names()
    return "".join(
        f"{format_monomial(b.lead, names)} - {format_monomial(b.tail, names)}\n" for b in basis.elements
    )


_FACTOR = re.compile(r"^([txy])(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, universe: Universe) -> Monomial:
    names = universe.names()
    index = {n: i for i, n in enumerate(names)}
    m = [0] * len(names)
    text = text.strip()
    if text == "1":
        return tuple(m)
    for factor in text.split("*"):
        hit = _FACTOR.match(factor.strip())
        if not hit or f"{hit.group(1)}{hit.group(2)}" not in index:
            raise ValueError(f"bad factor {factor!r}")
        m[index[f"{hit.group(1)}{hit.group(2)}"]] += int(hit.group(3) or 1)
    return tuple(m)


def parse_basis(text: str, order: TermOrder) -> BinomialBasis:
    els = []
    for line in text.splitlines():
        if not line.strip():
            continue
        lead, tail = line.split(" - ")
        els.append(Binomial(parse_monomial(lead, order.universe), parse_monomial(tail, order.universe)))
    return BinomialBasis(tuple(els), order, reduced=True)


def basis_to_json(basis: BinomialBasis) -> str:
    return json.dumps([{"lead": list(b.lead), "tail": list(b.tail)} for b in basis.elements])
