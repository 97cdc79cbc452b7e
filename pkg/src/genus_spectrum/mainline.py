"""Combinatorics of p-mainline integers.

Fix an integer p >= 1.  A sequence a = (a_1, ..., a_e) of non-negative
integers evaluates to wp(a) = sum(a_i * p^(e-i)).  Its mainline integers are
the values wp(b) over all *non-increasing* b dominating a componentwise.
This set only depends on the hull of a (the least non-increasing majorant),
it contains every integer from wp of the p-enveloping sequence on, and is
therefore co-finite in N_0.  The profile of a records the minimum mu(a),
the stabilisation point sigma(a) past which every integer is attained, and
the finitely many gaps in between.

No closed form for sigma(a) or the gap set is known in general; the profile
is computed by an exact membership scan below the proven enveloping bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


class _Infinity:
    """Distinguished infinite value for the gap norm of length-1 sequences."""

    _instance = None

    def __new__(cls) -> "_Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __gt__(self, other: object) -> bool:
        return not isinstance(other, _Infinity)

    def __ge__(self, other: object) -> bool:
        return True

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return isinstance(other, _Infinity)

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()

IntSeq = tuple[int, ...]


def _checked(entries) -> IntSeq:
    seq = tuple(int(x) for x in entries)
    if not seq:
        raise InputError("sequence must be non-empty")
    if any(x < 0 for x in seq):
        raise InputError(f"sequence entries must be non-negative, got {seq}")
    return seq


def is_nonincreasing(entries) -> bool:
    seq = tuple(entries)
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def wp_eval(p: int, entries) -> int:
    """Evaluate sum(a_i * p^(e-i)) for the length-e sequence a."""
    if p < 1:
        raise InputError(f"base must be >= 1, got {p}")
    seq = _checked(entries)
    value = 0
    for x in seq:
        value = value * p + x
    return value


def hull(entries) -> IntSeq:
    """Least non-increasing majorant: fold max from the right."""
    seq = _checked(entries)
    out = list(seq)
    for i in range(len(out) - 2, -1, -1):
        out[i] = max(out[i], out[i + 1])
    return tuple(out)


def envelope(p: int, entries) -> IntSeq:
    """Least majorant whose consecutive differences are all >= p - 1.

    Defined for non-increasing input only; for p = 1 it is the identity.
    """
    if p < 1:
        raise InputError(f"base must be >= 1, got {p}")
    seq = _checked(entries)
    if not is_nonincreasing(seq):
        raise InputError(f"envelope needs a non-increasing sequence, got {seq}")
    out = list(seq)
    for i in range(len(out) - 2, -1, -1):
        out[i] = max(out[i + 1] + (p - 1), out[i])
    return tuple(out)


def gap_norm(entries) -> "int | _Infinity":
    """Minimum consecutive difference; INFINITY for length-1 sequences."""
    seq = _checked(entries)
    if not is_nonincreasing(seq):
        raise InputError(f"gap norm needs a non-increasing sequence, got {seq}")
    if len(seq) == 1:
        return INFINITY
    return min(seq[i] - seq[i + 1] for i in range(len(seq) - 1))


def is_mainline(p: int, entries, m: int) -> bool:
    """Is m = wp(b) for some non-increasing b dominating a?

    Exact search from the rightmost position: once b_e, ..., b_{j+1} are
    fixed, the remaining weights all carry the factor p^(e-j), so the residue
    must be divisible by it; equivalently b_j is determined mod p.  Branches
    are cut when even the minimal admissible completion overshoots.
    """
    if p < 2:
        raise InputError(f"mainline membership needs p >= 2, got {p}")
    if m < 0:
        return False
    t = hull(entries)
    return _member(p, t, len(t), 0, m)


def _min_completion(p: int, t: IntSeq, j: int, floor: int) -> int:
    # wp of the cheapest non-increasing filling of positions 1..j given that
    # position j+1 already holds `floor`.
    total = 0
    for k in range(j):
        total = total * p + max(t[k], floor)
    return total


def _member(p: int, t: IntSeq, j: int, floor: int, target: int) -> bool:
    if j == 0:
        return target == 0
    lo = max(t[j - 1], floor)
    b = lo + (target - lo) % p  # smallest candidate >= lo congruent to target mod p
    while b <= target:
        rest = (target - b) // p
        if _min_completion(p, t, j - 1, b) > rest:
            return False  # raising b only raises the floor and shrinks rest
        if _member(p, t, j - 1, b, rest):
            return True
        b += p
    return False


@dataclass(frozen=True)
class MainlineProfile:
    """Minimum, stabilisation point, and gap set of the mainline integers."""

    mu: int
    sigma: int
    gaps: tuple[int, ...]


def mainline_profile(p: int, entries) -> MainlineProfile:
    """Profile of the mainline integers of a.

    mu is wp of the hull.  Every integer >= wp of the p-enveloping sequence
    of the hull is a member, so scanning up to that bound finds all
    non-members; sigma is one past the largest of them (mu itself when the
    scan finds none above mu).
    """
    if p < 2:
        raise InputError(f"mainline profile needs p >= 2, got {p}")
    t = hull(entries)
    mu = wp_eval(p, t)
    upper = wp_eval(p, envelope(p, t))
    gaps = tuple(
        m for m in range(mu + 1, upper) if not _member(p, t, len(t), 0, m)
    )
    sigma = gaps[-1] + 1 if gaps else mu
    return MainlineProfile(mu=mu, sigma=sigma, gaps=gaps)
