from itertools import combinations, product
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from toricgb.lattice_core import (
    ConfigError,
    Configuration,
    GroupMembership,
    Semigroup,
    add,
    degree,
    errors,
    hermite_rows,
    in_group,
    integer_kernel,
    m_alpha_d,
    require_valid,
    semigroup_level,
    sumset,
    validate,
)

from conftest import full_m


# --- m_alpha_d ---------------------------------------------------------------


def test_m_2_3():
    assert set(m_alpha_d(2, 3)) == {(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)}


def test_m_1_d_is_unit_vectors():
    for d in range(1, 6):
        assert set(m_alpha_d(1, d)) == {tuple(int(i == j) for i in range(d)) for j in range(d)}


def test_m_4_2():
    assert m_alpha_d(4, 2) == ((0, 4), (1, 3), (2, 2), (3, 1), (4, 0))


@pytest.mark.parametrize("alpha,d", list(product(range(1, 9), range(1, 9))))
def test_m_cardinality(alpha, d):
    pts = m_alpha_d(alpha, d)
    assert len(pts) == comb(alpha + d - 1, d - 1)
    assert len(set(pts)) == len(pts) and list(pts) == sorted(pts)
    assert all(sum(p) == alpha and min(p) >= 0 for p in pts)


# --- validation --------------------------------------------------------------


def test_validate_after_a3(after_a3):
    assert validate(after_a3) == []


def test_validate_vertex_and_too_few():
    v = validate(Configuration(4, 2, ((4, 0),)))
    assert any("vertex" in s for s in v)
    assert any("c=1" in s for s in v)


def test_validate_vertex_with_gcd_warning():
    v = validate(Configuration(4, 2, ((2, 2), (0, 4))))
    assert any("vertex" in s for s in v)
    assert any(s.startswith("warning:") and "2" in s for s in v)


def test_gcd_is_only_a_warning():
    cfg = Configuration(4, 2, ((2, 2), (2, 2)))
    assert any(s.startswith("warning:") for s in validate(cfg))
    assert errors(Configuration(6, 2, ((4, 2), (2, 4)))) == []


def test_validate_wrong_sum_length_duplicate():
    v = errors(Configuration(3, 2, ((1, 1), (1, 2, 0), (2, 1), (2, 1))))
    assert any("not in M" in s for s in v)
    assert any("coordinates" in s for s in v)
    assert any("duplicate" in s for s in v)


def test_require_valid_raises_with_violations():
    with pytest.raises(ConfigError) as exc:
        require_valid(Configuration(4, 2, ((4, 0),)))
    assert len(exc.value.violations) == 2


def test_json_round_trip(after_a3):
    assert Configuration.from_json(after_a3.to_json()) == after_a3
    assert after_a3.to_dict() == {"alpha": 4, "d": 2, "generators": [[3, 1], [1, 3]]}


@pytest.mark.parametrize("text", ["{bad", "[]", '{"alpha": 4, "d": 2}', '{"alpha": "4", "d": 2, "generators": []}',
                                  '{"alpha": 4, "d": 2, "generators": [[1.5, 2]]}'])
def test_from_json_rejects(text):
    with pytest.raises(ConfigError):
        Configuration.from_json(text)


def test_generator_order_is_preserved():
    cfg = Configuration(4, 2, ((1, 3), (3, 1)))
    assert cfg.generators == ((1, 3), (3, 1))
    assert cfg.column_images()[:2] == ((1, 3), (3, 1))


# --- sumsets and levels ------------------------------------------------------


def test_sumset_examples():
    e1, e2 = (1, 0), (0, 1)
    assert sumset([e1, e2], [e1, e2]) == ((0, 2), (1, 1), (2, 0))
    m2 = m_alpha_d(2, 2)
    assert sumset(m2, m2) == m_alpha_d(4, 2)
    assert set(sumset([(3, 1), (1, 3)], [(4, 0)])) == {(7, 1), (5, 3)}


def test_add_overflow():
    with pytest.raises(OverflowError):
        add((2**62, 0), (1, 0))


def test_degree():
    assert degree((3, 5), 4) == 2
    with pytest.raises(ValueError):
        degree((3, 4), 4)


point_sets = st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=1, max_size=5)


@given(point_sets, point_sets, point_sets)
def test_sumset_commutative_associative(a, b, c):
    assert sumset(a, b) == sumset(b, a)
    assert sumset(sumset(a, b), c) == sumset(a, sumset(b, c))


def test_levels_after_a3(after_a3):
    assert semigroup_level(after_a3, 0) == ((0, 0),)
    assert set(semigroup_level(after_a3, 1)) == {(4, 0), (3, 1), (1, 3), (0, 4)}
    s2 = semigroup_level(after_a3, 2)
    # all of 2*M_{4,2} except nothing: (2,6) = 2*(1,3) and (4,4) = (4,0)+(0,4)
    assert (2, 6) in s2 and (4, 4) in s2
    assert len(s2) == 9


small_configs = [
    Configuration(4, 2, ((3, 1), (1, 3))),
    Configuration(3, 3, ((2, 1, 0), (0, 1, 2), (1, 1, 1))),
    Configuration(5, 2, ((4, 1), (2, 3))),
    full_m(2, 3),
]


@pytest.mark.parametrize("cfg", small_configs)
def test_generation_property(cfg):
    for m in range(4):
        for n in range(4 - m):
            assert set(semigroup_level(cfg, m + n)) == set(sumset(semigroup_level(cfg, m), semigroup_level(cfg, n)))


@pytest.mark.parametrize("cfg", small_configs)
def test_levels_lie_in_group(cfg):
    member = GroupMembership(cfg)
    for n in range(5):
        for p in semigroup_level(cfg, n):
            assert sum(p) == n * cfg.alpha and member(p)


def test_semigroup_contains(after_a3):
    sg = Semigroup(after_a3)
    assert sg.contains((2, 6)) and not sg.contains((2, 2)) and not sg.contains((1, 2))
    assert sg.decode(sg.encode((5, 7))) == (5, 7)


def test_level_overflow_guard(after_a3):
    with pytest.raises(OverflowError):
        Semigroup(after_a3).level_codes(2**20)


# --- group membership --------------------------------------------------------


def test_in_group_examples(after_a3):
    assert in_group(after_a3, (3, 1))
    # Z(S) = {(u, v) : u + v = 0 mod 4}; (1, 1) has coordinate sum 2
    assert not in_group(after_a3, (1, 1))
    assert not in_group(after_a3, (1, 0))
    assert in_group(after_a3, (2, 2)) and in_group(after_a3, (-1, 1))


def _sympy_index(vectors):
    m = sympy.Matrix(vectors)
    d = m.shape[1]
    minors = [m.extract(list(rows), list(range(d))).det() for rows in combinations(range(m.shape[0]), d)]
    return abs(sympy.gcd_list(minors))


vectors = st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=3, max_size=6)


@settings(max_examples=60, deadline=None)
@given(vectors, st.lists(st.integers(-8, 8), min_size=3, max_size=3))
def test_hnf_against_sympy_minors(rows, p):
    index = _sympy_index(rows)
    hnf = hermite_rows(rows)
    if index == 0:
        return
    assert len(hnf) == 3
    prod = 1
    for i, row in enumerate(hnf):
        prod *= row[i]
    assert prod == index
    from toricgb.lattice_core import lattice_contains

    assert lattice_contains(hnf, p) == (_sympy_index(rows + [p]) == index)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=6))
def test_integer_kernel(cols):
    ker = integer_kernel(cols)
    for u in ker:
        assert all(sum(u[i] * cols[i][k] for i in range(len(cols))) == 0 for k in range(3))
    rank = sympy.Matrix(cols).rank()
    assert len(ker) == len(cols) - rank
    if ker:
        # a basis of the full kernel lattice, not a sublattice: maximal minors are coprime
        m = sympy.Matrix(ker)
        k = len(ker)
        minors = [m.extract(list(range(k)), list(cs)).det() for cs in combinations(range(len(cols)), k)]
        assert abs(sympy.gcd_list(minors)) == 1
