"""Hilbert series numerators of monomial ideals.

Polynomials in ``t`` are lists of integer coefficients, lowest degree first.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

Poly = list[int]


def _trim(p: Poly) -> Poly:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_add(p: Sequence[int], q: Sequence[int]) -> Poly:
    out = [0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, a in enumerate(q):
        out[i] += a
    return _trim(out)


def poly_mul(p: Sequence[int], q: Sequence[int]) -> Poly:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_shift(p: Sequence[int], k: int) -> Poly:
    return _trim([0] * k + list(p))


def poly_eval(p: Sequence[int], x: int) -> int:
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def divide_by_one_minus_t(p: Sequence[int]) -> tuple[Poly, int]:
    """Quotient and remainder of ``p`` divided by ``1 - t``."""
    # p(t) = (1 - t) q(t) + r with r = p(1); q_k = sum_{i<=k} p_i, last partial sum is the remainder
    q = []
    acc = 0
    for a in p[:-1]:
        acc += a
        q.append(acc)
    rem = acc + (p[-1] if p else 0)
    return _trim(q or [0]), rem


def _minimalize(gens: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    gens = sorted(set(gens), key=sum)
    out: list[tuple[int, ...]] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _numerator(gens: list[tuple[int, ...]]) -> Poly:
    if not gens:
        return [1]
    if any(not any(g) for g in gens):
        return [0]
    # pairwise coprime generators: the numerator factors
    seen = set()
    coprime = True
    for g in gens:
        supp = {i for i, e in enumerate(g) if e}
        if seen & supp:
            coprime = False
            break
        seen |= supp
    if coprime:
        out = [1]
        for g in gens:
            out = poly_mul(out, [1] + [0] * (sum(g) - 1) + [-1])
        return out
    freq = Counter(i for g in gens for i, e in enumerate(g) if e)
    var = max(freq, key=lambda i: (freq[i], -i))
    e = min(g[var] for g in gens if g[var])
    pivot = tuple(e if i == var else 0 for i in range(len(gens[0])))
    plus = _minimalize(gens + [pivot])
    colon = _minimalize(tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens)
    return poly_add(_numerator(plus), poly_shift(_numerator(colon), e))


def hilbert_numerator(monomials: Iterable[Sequence[int]], num_vars: int) -> Poly:
    """Numerator ``N(t)`` of the Hilbert series ``N(t) / (1 - t)^num_vars`` of K[x]/I."""
    gens = [tuple(m) for m in monomials]
    for g in gens:
        if len(g) != num_vars:
            raise ValueError(f"monomial {g} has {len(g)} exponents, expected {num_vars}")
    return _numerator(_minimalize(gens))


def reduce_numerator(numerator: Sequence[int], times: int) -> Poly:
    """Divide ``numerator`` exactly by ``(1 - t)^times``; raises if it does not divide."""
    p = list(numerator)
    for k in range(times):
        p, rem = divide_by_one_minus_t(p)
        if rem:
            raise ArithmeticError(f"(1 - t)^{k + 1} does not divide the Hilbert numerator")
    return p


def hilbert_function_from_series(numerator: Sequence[int], num_vars: int, upto: int) -> list[int]:
    """Coefficients of ``N(t) / (1 - t)^num_vars`` up to degree ``upto``."""
    coeffs = list(numerator) + [0] * max(0, upto + 1 - len(numerator))
    coeffs = coeffs[: upto + 1]
    for _ in range(num_vars):
        acc = 0
        for i in range(len(coeffs)):
            acc += coeffs[i]
            coeffs[i] = acc
    return coeffs
