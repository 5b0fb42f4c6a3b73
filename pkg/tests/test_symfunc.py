import itertools

import pytest

from cichar.errors import StructureError
from cichar.symfunc import (
    ELEMENTARY,
    AlphaTuple,
    elementary_expansion,
    enumerate_alpha,
    monomial_symmetric,
    to_elementary,
    _eliminate,
    _elementary_ring,
)

PARTITION_COUNTS = {0: 1, 1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15, 8: 22}


def brute_force_alphas(m):
    """Independent enumeration: every bounded count tuple with the right
    weighted degree."""
    found = set()
    ranges = [range(m // j + 1) for j in range(1, m + 1)]
    for combo in itertools.product(*ranges):
        if sum(j * c for j, c in enumerate(combo, 1)) == m:
            found.add(AlphaTuple(combo))
    return found


def test_alpha_trimming_and_equality():
    assert AlphaTuple((0, 1)) == AlphaTuple((0, 1, 0))
    assert AlphaTuple((0, 1)).counts == (0, 1)
    assert AlphaTuple(()).weighted_degree == 0
    with pytest.raises(StructureError):
        AlphaTuple((-1,))


def test_alpha_derived_quantities():
    a = AlphaTuple((2, 0, 1))
    assert a.weighted_degree == 5
    assert a.parts_total == 3
    assert a.partition() == (3, 1, 1)
    assert AlphaTuple.single_row(4) == AlphaTuple((0, 0, 0, 1))
    assert AlphaTuple.single_row(4).is_single_row()
    assert not a.is_single_row()
    assert AlphaTuple.parse("0,1") == AlphaTuple((0, 1))
    assert AlphaTuple.parse("") == AlphaTuple(())
    assert str(AlphaTuple((0, 1))) == "(0,1)"


def test_enumerate_trivial_and_order():
    assert enumerate_alpha(0) == [AlphaTuple(())]
    assert enumerate_alpha(2) == [AlphaTuple((2,)), AlphaTuple((0, 1))]
    assert len(enumerate_alpha(4)) == 5


@pytest.mark.parametrize("m", range(9))
def test_enumerate_matches_brute_force(m):
    got = enumerate_alpha(m)
    assert len(got) == PARTITION_COUNTS[m]
    assert set(got) == brute_force_alphas(m)
    # descending lexicographic on padded counts
    padded = [a.counts + (0,) * (m - len(a.counts)) for a in got]
    assert padded == sorted(padded, reverse=True)


def test_monomial_symmetric_trivial_shapes():
    g = monomial_symmetric(AlphaTuple((1,)), 1)
    assert dict(g.body.items()) == {(1,): 1}
    g = monomial_symmetric(AlphaTuple((0, 1)), 2)
    assert dict(g.body.items()) == {(2, 0): 1, (0, 2): 1}
    g = monomial_symmetric(AlphaTuple((2,)), 2)
    assert dict(g.body.items()) == {(1, 1): 1}


def test_monomial_symmetric_needs_enough_roots():
    with pytest.raises(StructureError):
        monomial_symmetric(AlphaTuple((2,)), 1)


def test_monomial_symmetric_all_coefficients_one():
    for alpha in enumerate_alpha(5):
        g = monomial_symmetric(alpha, 5)
        assert all(c == 1 for _, c in g.body.items())


@pytest.mark.parametrize("m", range(1, 7))
def test_monomial_symmetric_is_symmetric(m):
    # swapping any two adjacent variables permutes the terms onto themselves
    for alpha in enumerate_alpha(m):
        body = dict(monomial_symmetric(alpha, m).body.items())
        for i in range(m - 1):
            swapped = {
                e[:i] + (e[i + 1], e[i]) + e[i + 2 :]: c for e, c in body.items()
            }
            assert swapped == body


def test_to_elementary_degree_one():
    f = to_elementary(AlphaTuple((1,)))
    assert f.basis == ELEMENTARY
    assert dict(f.body.items()) == {(1,): 1}


def test_to_elementary_power_sum_two():
    # (t1 + t2)^2 - 2 t1 t2 = t1^2 + t2^2, so the power sum is e1^2 - 2 e2
    f = to_elementary(AlphaTuple((0, 1)))
    assert dict(f.body.items()) == {(2, 0): 1, (0, 1): -2}
    expanded = elementary_expansion(f, 2)
    assert dict(expanded.items()) == {(2, 0): 1, (0, 2): 1}


def test_to_elementary_pure_elementary():
    f = to_elementary(AlphaTuple((2,)))
    assert dict(f.body.items()) == {(0, 1): 1}


def test_to_elementary_empty_tuple():
    f = to_elementary(AlphaTuple(()))
    assert f.body.constant_term() == 1
    assert len(f.body) == 1


@pytest.mark.parametrize("m", range(9))
def test_roundtrip_under_elementary_substitution(m):
    for alpha in enumerate_alpha(m):
        f = to_elementary(alpha)
        got = dict(elementary_expansion(f, m).items())
        want = dict(monomial_symmetric(alpha, m).body.items())
        assert got == want, alpha


@pytest.mark.parametrize("m", range(1, 7))
def test_expression_stable_in_root_count(m):
    for alpha in enumerate_alpha(m):
        f = to_elementary(alpha)
        for z in sorted({alpha.parts_total, m + 1}):
            got = dict(elementary_expansion(f, z).items())
            want = dict(monomial_symmetric(alpha, z).body.items())
            assert got == want, (alpha, z)


def _embed(f_body, m):
    # pad the exponent keys of a lower-degree expression into the arity-m ring
    ring = _elementary_ring(m)
    return ring.from_terms(
        {tuple(e) + (0,) * (m - len(e)): c for e, c in f_body.items()}
    )


@pytest.mark.parametrize("i", range(1, 11))
def test_newton_recurrence_identity(i):
    ring = _elementary_ring(i)
    f_i = _embed(to_elementary(AlphaTuple.single_row(i)).body.items(), i)
    acc = ring.zero()
    for j in range(1, i):
        e_j = ring.gen(j - 1)
        p_prev = _embed(to_elementary(AlphaTuple.single_row(i - j)).body.items(), i)
        term = e_j * p_prev
        acc = acc + (term if j % 2 else -term)
    top = ring.gen(i - 1) * (i if i % 2 else -i)
    assert f_i == acc + top


@pytest.mark.parametrize("i", range(1, 9))
def test_single_row_matches_elimination(i):
    # the Newton fast path and the generic elimination agree where the
    # latter is feasible
    alpha = AlphaTuple.single_row(i)
    from_newton = dict(to_elementary(alpha).body.items())
    from_elimination = {e: c for e, c in _eliminate(alpha).items()}
    assert {e: int(c) for e, c in from_newton.items()} == from_elimination


def _embed_items(items, m):
    return {tuple(e) + (0,) * (m - len(e)): c for e, c in items}


def test_elementary_weights_match_degree():
    for m in range(1, 7):
        for alpha in enumerate_alpha(m):
            body = to_elementary(alpha).body
            assert body.is_homogeneous_of(m)
