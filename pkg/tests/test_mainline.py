import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genus_spectrum import (
    INFINITY,
    InputError,
    envelope,
    gap_norm,
    hull,
    is_mainline,
    mainline_profile,
    wp_eval,
)
from helpers import naive_mainline_members

seqs = st.lists(st.integers(0, 8), min_size=1, max_size=4).map(tuple)
noninc = seqs.map(hull)
primes = st.sampled_from([2, 3, 5])


def test_wp_eval():
    assert wp_eval(3, (2, 1)) == 7
    assert wp_eval(2, (0, 0, 0)) == 0
    assert wp_eval(2, (6, 4, 2)) == 34 == (3 - 1) * 2**4 + 2
    assert wp_eval(1, (3, 1, 4)) == 8
    with pytest.raises(InputError):
        wp_eval(2, ())
    with pytest.raises(InputError):
        wp_eval(0, (1,))
    with pytest.raises(InputError):
        wp_eval(2, (1, -1))


def test_hull():
    assert hull((1, 3, 2)) == (3, 3, 2)
    assert hull((5, 2, 2)) == (5, 2, 2)
    assert hull((0, 7)) == (7, 7)


def test_envelope():
    assert envelope(3, (2, 2)) == (4, 2)
    assert envelope(3, (5, 2)) == (5, 2)
    assert envelope(1, (3, 3, 1)) == (3, 3, 1)
    with pytest.raises(InputError):
        envelope(3, (1, 2))


def test_gap_norm():
    assert gap_norm((5, 2)) == 3
    assert gap_norm((4,)) is INFINITY
    assert gap_norm((3, 3, 2)) == 0
    assert INFINITY > 10**100
    assert not INFINITY < 0
    with pytest.raises(InputError):
        gap_norm((2, 5))


def test_is_mainline_examples():
    # 7 is not reachable from (2,2) at p=2: checked against the enumerator below
    assert naive_mainline_members(2, (2, 2), 7) == {6}
    assert not is_mainline(2, (2, 2), 7)
    assert is_mainline(2, (2, 2), 6)
    # gap norm 2 >= p-1 at p=3, so everything from wp on is reachable
    for k in range(40):
        assert is_mainline(3, (4, 2), 14 + k)
    assert not is_mainline(3, (4, 2), 13)
    assert not is_mainline(2, (2, 2), -1)
    with pytest.raises(InputError):
        is_mainline(1, (2, 2), 5)


def test_profile_examples():
    assert naive_mainline_members(2, (2, 2), 10) == {6, 8, 9, 10}
    p = mainline_profile(2, (2, 2))
    assert (p.mu, p.sigma, p.gaps) == (6, 8, (7,))
    p = mainline_profile(3, (4, 2))
    assert (p.mu, p.sigma, p.gaps) == (14, 14, ())
    assert mainline_profile(2, (1, 3, 2)) == mainline_profile(2, (3, 3, 2))


@given(seqs)
def test_hull_fixed_point(a):
    t = hull(a)
    assert hull(t) == t
    assert all(x >= y for x, y in zip(t, t[1:]))
    assert all(x <= y for x, y in zip(a, t))


@given(primes, noninc)
def test_envelope_fixed_point(p, a):
    env = envelope(p, a)
    assert envelope(p, env) == env
    assert all(x <= y for x, y in zip(a, env))
    assert gap_norm(env) is INFINITY or gap_norm(env) >= p - 1
    # the envelope is a fixed point exactly on sequences of gap norm >= p-1
    assert (env == a) == (gap_norm(a) is INFINITY or gap_norm(a) >= p - 1)


@given(primes, seqs, st.integers(0, 60))
@settings(max_examples=300)
def test_membership_matches_enumerator(p, a, m):
    assert is_mainline(p, a, m) == (m in naive_mainline_members(p, a, m))


@given(primes, seqs, st.integers(0, 60))
def test_hull_invariance_of_membership(p, a, m):
    assert is_mainline(p, a, m) == is_mainline(p, hull(a), m)


@given(primes, st.lists(st.integers(0, 3), min_size=1, max_size=4))
def test_enforced_gap_profile(p, increments):
    # build a sequence with consecutive differences >= p-1 from the right
    a = []
    level = increments[-1]
    for inc in reversed(increments):
        a.append(level)
        level += (p - 1) + inc
    a = tuple(reversed(a))
    profile = mainline_profile(p, a)
    w = wp_eval(p, a)
    assert (profile.mu, profile.sigma, profile.gaps) == (w, w, ())


@given(primes, noninc, st.integers(0, 8))
def test_cofinite_beyond_envelope(p, a, extra):
    assert is_mainline(p, a, wp_eval(p, envelope(p, a)) + extra)


@given(primes, seqs)
@settings(max_examples=200)
def test_profile_consistency(p, a):
    profile = mainline_profile(p, a)
    assert profile.mu == wp_eval(p, hull(a))
    assert profile.mu <= profile.sigma <= wp_eval(p, envelope(p, hull(a)))
    assert all(profile.mu < g < profile.sigma for g in profile.gaps)
    if profile.sigma > profile.mu:
        assert not is_mainline(p, a, profile.sigma - 1)
    for g in profile.gaps:
        assert not is_mainline(p, a, g)
    assert is_mainline(p, a, profile.sigma)
