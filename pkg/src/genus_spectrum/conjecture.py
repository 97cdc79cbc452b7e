"""Searches for non-isomorphic abelian p-groups sharing a genus spectrum.

For groups with large invariants the spectrum is the arithmetic progression
start + step * N_0 with start = 1 + p^delta mu_0 and step = p^delta / epsilon,
so spectrum equality is a finite arithmetic condition.  Two constructions
produce equal-spectrum pairs:

* fixed exponent p^3: the defining invariants may be shifted by integer
  multiples of the kernel vector rho(p) = (p+2, -2p-1, p) of the matrix
  pairing (order, mu_0) against the invariants;

* varying exponent: an exhaustive search over invariant sequences, grouped
  by cyclic deficiency.  Sequences of exponent p^e and deficiency delta form
  a knapsack family (weights i, values p^e - p^{e-i}); per deficiency the
  achievable mu_0 values are matched across the two exponents through exact
  min/max envelopes and, where the envelopes overlap, bitset reachability
  joins.  This keeps the search exhaustive for deficiencies in the
  thousands, far beyond direct enumeration.

For p = 2 the convention of the varying-exponent search is that the group of
exponent p^e (the first one) has r_e >= 2, i.e. carries the half-integral
reduced lattice.  The partner either also has a repeated top summand
(same-lattice relation: equal deficiency and equal mu_0) or has a single one
(mixed relation: deficiency smaller by one and doubled mu_0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, OutOfFamilyError, UnsupportedError
from .group import AbelianPGroup, is_prime
from .halfint import HalfInt
from .spectrum import full_spectrum, genus_view, has_large_invariants, reduced_min_large

RELATION_SAME = "equal_spectrum_same_lattice"
RELATION_MIXED = "equal_spectrum_p2_mixed"


def rho(p: int) -> tuple[int, int, int]:
    """Kernel vector (p+2, -2p-1, p) of the (order, mu_0) pairing at e = 3."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    return (p + 2, -2 * p - 1, p)


def e3_family(G: AbelianPGroup, k: int) -> AbelianPGroup:
    """Shift the invariants of an exponent-p^3 group by k * rho(p).

    Source and image must both satisfy the large-invariant hypothesis, and
    for p = 2 they must agree on whether the top summand repeats; then the
    shifted group shares order, exponent and full spectrum with G.
    """
    if G.e != 3:
        raise UnsupportedError(f"the kernel family needs exponent p^3, got {G}")
    if not has_large_invariants(G):
        raise OutOfFamilyError(f"{G} does not satisfy the large-invariant hypothesis")
    vec = rho(G.p)
    shifted = tuple(G.r[i] + k * vec[i] for i in range(3))
    if any(x < G.p - 1 for x in shifted[:2]) or shifted[2] < max(G.p - 2, 1):
        raise OutOfFamilyError(f"shift by k={k} leaves the large-invariant family: {shifted}")
    if G.p == 2 and (G.r[2] >= 2) != (shifted[2] >= 2):
        raise OutOfFamilyError(
            f"shift by k={k} changes the top-summand parity class: {G.r} -> {shifted}"
        )
    return AbelianPGroup(G.p, shifted)


def genus_progression(G: AbelianPGroup) -> tuple[int, int]:
    """(start, step) with sp(G) = start + step * N_0, for large invariants."""
    if not has_large_invariants(G):
        raise UnsupportedError(f"{G} does not satisfy the large-invariant hypothesis")
    mu = reduced_min_large(G)
    pd = G.p**G.delta
    twice_start = 2 + pd * mu.twice
    assert twice_start % 2 == 0
    return twice_start // 2, pd // G.epsilon


def spectra_equal(g1: AbelianPGroup, g2: AbelianPGroup) -> bool:
    """Exact spectrum equality.

    Large-invariant groups compare by their genus progressions; otherwise
    the verified spectrum descriptors are compared at the genus level.
    """
    if has_large_invariants(g1) and has_large_invariants(g2):
        return genus_progression(g1) == genus_progression(g2)
    v1 = genus_view(g1, full_spectrum(g1))
    v2 = genus_view(g2, full_spectrum(g2))
    return (v1.min_genus, v1.step, v1.stable_genus, v1.gap_genera) == (
        v2.min_genus,
        v2.step,
        v2.stable_genus,
        v2.gap_genera,
    )


def varying_exponent_pair(p: int) -> tuple[AbelianPGroup, AbelianPGroup]:
    """The equal-spectrum series with exponents p^(p+2) and p^(p+1), p odd."""
    if not is_prime(p) or p == 2:
        raise UnsupportedError(f"the varying-exponent series needs an odd prime, got {p}")
    r = (p - 1,) * p + (p, p**3 + p**2 - 2)
    if p == 3:
        rt: tuple[int, ...] = (177, 3, 2, 1)
    else:
        rt = (p**4 + 3 * p**3 + 2 * p**2 - p - 1,) + (p - 1,) * (p - 4) + (p, p, p - 1, p - 2)
    return AbelianPGroup(p, r), AbelianPGroup(p, rt)


@dataclass(frozen=True)
class CounterexamplePair:
    """Two non-isomorphic groups with identical genus spectra."""

    g1: AbelianPGroup
    g2: AbelianPGroup
    delta1: int
    delta2: int
    mu1: HalfInt
    mu2: HalfInt
    relation: str

    @property
    def delta(self) -> int:
        return max(self.delta1, self.delta2)

    def to_json_dict(self) -> dict:
        return {
            "g1": self.g1.encode(),
            "g2": self.g2.encode(),
            "delta": [self.delta1, self.delta2],
            "mu0": [str(self.mu1), str(self.mu2)],
            "relation": self.relation,
        }


class _Side:
    """One exponent class of the search: floor invariants plus free coins.

    Writing r_i = floor_i + t_i, the group is determined by the free vector
    t >= 0; its deficiency is delta0 + sum(i t_i) and 2 mu_0 + 1 equals
    base_m + sum(c_i t_i) with c_i = p^e - p^{e-i}.  `scale` pre-multiplies
    the values so that doubled-mu relations become plain translations.
    """

    def __init__(self, p: int, e: int, top_floor: int, pin_top: bool, scale: int, dmax: int):
        self.p = p
        self.e = e
        self.scale = scale
        self.floors = tuple([p - 1] * (e - 1) + [top_floor])
        self.pin_top = pin_top
        pe = p**e
        self.coin_index = [i for i in range(1, e + 1) if not (pin_top and i == e)]
        self.coins = [(i, scale * (pe - p ** (e - i))) for i in self.coin_index]
        self.base_m = -pe + sum(
            (pe - p ** (e - i)) * self.floors[i - 1] for i in range(1, e + 1)
        )
        self.eff_base = scale * self.base_m - (scale - 1)
        self.delta0 = sum(i * self.floors[i - 1] for i in range(1, e + 1)) - e
        self.dmax = max(dmax, 0)

        # exact value envelopes per remaining-coin suffix; index 0 = all coins
        n = len(self.coins)
        self.smin: list[list[int | None]] = [[None] * (self.dmax + 1) for _ in range(n + 1)]
        self.smax: list[list[int | None]] = [[None] * (self.dmax + 1) for _ in range(n + 1)]
        self.smin[n][0] = self.smax[n][0] = 0
        for j in range(n - 1, -1, -1):
            w, v = self.coins[j]
            for d in range(self.dmax + 1):
                lo, hi = self.smin[j + 1][d], self.smax[j + 1][d]
                if d >= w and self.smin[j][d - w] is not None:
                    cand_lo = self.smin[j][d - w] + v
                    cand_hi = self.smax[j][d - w] + v
                    lo = cand_lo if lo is None else min(lo, cand_lo)
                    hi = cand_hi if hi is None else max(hi, cand_hi)
                self.smin[j][d] = lo
                self.smax[j][d] = hi

        self._slices: dict[int, int] = {}
        self._next = 0
        self._maxw = max((w for w, _ in self.coins), default=1)

    def interval(self, d: int) -> tuple[int, int] | None:
        if d < 0 or d > self.dmax or self.smin[0][d] is None:
            return None
        return self.eff_base + self.smin[0][d], self.eff_base + self.smax[0][d]

    def reach(self, d: int) -> int:
        """Bitset of achievable scaled values at exact weight d (rolling)."""
        if d < 0:
            return 0
        while self._next <= d:
            if self._next == 0:
                cur = 1
            else:
                cur = 0
                for w, v in self.coins:
                    j = self._next - w
                    if j >= 0:
                        cur |= self._slices[j] << v
            self._slices[self._next] = cur
            self._slices.pop(self._next - self._maxw - 1, None)
            self._next += 1
        return self._slices[d]

    def witnesses(self, d: int, value: int) -> list[tuple[int, ...]]:
        """All free vectors t with weight d and scaled value `value`."""
        out: list[tuple[int, ...]] = []
        coins = self.coins
        acc = [0] * len(coins)

        def rec(j: int, rd: int, rv: int) -> None:
            if j == len(coins):
                if rd == 0 and rv == 0:
                    out.append(tuple(acc))
                return
            w, v = coins[j]
            for k in range(rd // w + 1):
                nd, nv = rd - k * w, rv - k * v
                lo, hi = self.smin[j + 1][nd], self.smax[j + 1][nd]
                if lo is None or not lo <= nv <= hi:
                    continue
                acc[j] = k
                rec(j + 1, nd, nv)
            acc[j] = 0

        rec(0, d, value)
        return out

    def group_of(self, t: tuple[int, ...]) -> AbelianPGroup:
        r = list(self.floors)
        for i, k in zip(self.coin_index, t):
            r[i - 1] += k
        return AbelianPGroup(self.p, tuple(r))

    def mu_of(self, value: int) -> HalfInt:
        assert value % self.scale == 0
        return HalfInt(self.base_m + value // self.scale - 1)


def _search_class(
    side1: _Side, side2: _Side, delta_offset: int, delta_max: int, relation: str
) -> list[CounterexamplePair]:
    same_side = (
        side1.e == side2.e
        and side1.floors == side2.floors
        and side1.pin_top == side2.pin_top
        and side1.scale == side2.scale
    )
    diff = side1.eff_base - side2.eff_base
    pairs: list[CounterexamplePair] = []

    delta_lo = max(side1.delta0, side2.delta0 - delta_offset)
    for delta1 in range(delta_lo, delta_max + 1):
        d1 = delta1 - side1.delta0
        delta2 = delta1 + delta_offset
        d2 = delta2 - side2.delta0
        iv1 = side1.interval(d1)
        iv2 = side2.interval(d2)
        if iv1 is None or iv2 is None:
            continue
        if max(iv1[0], iv2[0]) > min(iv1[1], iv2[1]):
            continue

        # bit positions are side2-aligned when diff >= 0, side1-aligned otherwise
        matched = (
            (side1.reach(d1) << diff) & side2.reach(d2)
            if diff >= 0
            else (side2.reach(d2) << -diff) & side1.reach(d1)
        )
        while matched:
            low = matched & -matched
            matched ^= low
            pos = low.bit_length() - 1
            if diff >= 0:
                x2, x1 = pos, pos - diff
            else:
                x1, x2 = pos, pos + diff
            t1s = side1.witnesses(d1, x1)
            mu1 = side1.mu_of(x1)
            mu2 = side2.mu_of(x2)
            if same_side:
                groups = sorted((side1.group_of(t) for t in t1s), key=lambda g: g.r)
                for a in range(len(groups)):
                    for b in range(a + 1, len(groups)):
                        pairs.append(
                            CounterexamplePair(
                                groups[a], groups[b], delta1, delta2, mu1, mu2, relation
                            )
                        )
            else:
                for t1 in t1s:
                    g1 = side1.group_of(t1)
                    for t2 in side2.witnesses(d2, x2):
                        g2 = side2.group_of(t2)
                        if g1 == g2:
                            continue
                        pairs.append(
                            CounterexamplePair(g1, g2, delta1, delta2, mu1, mu2, relation)
                        )
    return pairs


def search_counterexamples(
    p: int,
    e: int,
    e_tilde: int,
    delta_max: int,
    relation: str | None = None,
) -> list[CounterexamplePair]:
    """All equal-spectrum pairs (G, G~) of exponents p^e and p^e_tilde with
    large invariants and cyclic deficiencies at most delta_max.

    `relation` restricts to one of the two p = 2 relation classes; by
    default both are searched (odd p only has the same-lattice relation).
    The result is exhaustive within the bound and sorted by deficiency.
    """
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if not 1 <= e_tilde <= e:
        raise InputError(f"need 1 <= e_tilde <= e, got e={e}, e_tilde={e_tilde}")
    if relation not in (None, RELATION_SAME, RELATION_MIXED):
        raise InputError(f"unknown relation {relation!r}")
    if relation == RELATION_MIXED and p != 2:
        raise InputError("the mixed-lattice relation exists only for p = 2")

    classes: list[tuple[_Side, _Side, int, str]] = []

    def side(ee: int, top_floor: int, pin: bool, scale: int, offset: int) -> _Side:
        dmax = delta_max + offset - (sum(i * (p - 1) for i in range(1, ee)) + ee * top_floor - ee)
        return _Side(p, ee, top_floor, pin, scale, dmax)

    if p != 2:
        if relation in (None, RELATION_SAME):
            top = max(p - 2, 1)
            classes.append((side(e, top, False, 1, 0), side(e_tilde, top, False, 1, 0), 0, RELATION_SAME))
    else:
        if relation in (None, RELATION_SAME):
            classes.append((side(e, 2, False, 1, 0), side(e_tilde, 2, False, 1, 0), 0, RELATION_SAME))
            classes.append((side(e, 1, True, 1, 0), side(e_tilde, 1, True, 1, 0), 0, RELATION_SAME))
        if relation in (None, RELATION_MIXED):
            classes.append((side(e, 2, False, 2, 0), side(e_tilde, 1, True, 1, -1), -1, RELATION_MIXED))

    pairs: list[CounterexamplePair] = []
    for side1, side2, offset, label in classes:
        pairs.extend(_search_class(side1, side2, offset, delta_max, label))

    for pair in pairs:
        assert spectra_equal(pair.g1, pair.g2), pair
    pairs.sort(key=lambda q: (q.delta, q.g1.r, q.g2.r))
    return pairs
