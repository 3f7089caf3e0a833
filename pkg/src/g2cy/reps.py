"""Representations of the parabolic subgroups: weights, duals, tensors, powers.

Irreducible representations of a parabolic P are irreducibles of its Levi,
labelled by p-dominant highest weights.  All three G2 parabolics have a Levi
of semisimple rank at most one, so the full weight multiset of an irreducible
is a single alpha-string through the highest weight; everything here reduces
to exact multiset arithmetic on integer weight tuples.

A :class:`RepSum` is a formal non-negative combination of irreducibles over a
fixed parabolic.  It models every bundle in the package: bundles on G/P
correspond to P-representations, with rank, determinant and weight multiset
matching the representation-theoretic ones.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import comb
from typing import TYPE_CHECKING, Iterable, Mapping

from .errors import NotARepresentation, NotPDominant, OutOfRange, UnsupportedLevi
from .root_system import Weight, wadd, wneg, wscale, wsub, wzero, weight_str

if TYPE_CHECKING:  # pragma: no cover
    from .parabolic import ParabolicData


class RepSum:
    """Formal sum of irreducible P-representations, keyed by highest weight."""

    __slots__ = ("parabolic", "terms")

    def __init__(self, parabolic: "ParabolicData", terms: Mapping[Weight, int] | Iterable = ()):
        clean: dict[Weight, int] = {}
        for lam, mult in dict(terms).items():
            if mult < 0:
                raise NotARepresentation(f"negative multiplicity for {weight_str(lam)}")
            if mult == 0:
                continue
            if not parabolic.is_p_dominant(lam):
                raise NotPDominant(f"{weight_str(lam)} is not p-dominant for {parabolic.label}")
            clean[tuple(lam)] = mult
        self.parabolic = parabolic
        self.terms = clean

    def sorted_terms(self) -> list[tuple[Weight, int]]:
        """Terms ordered by descending (irreducible rank, highest weight)."""
        return sorted(self.terms.items(),
                      key=lambda kv: (irrep_dim(self.parabolic, kv[0]), kv[0]),
                      reverse=True)

    @property
    def rank(self) -> int:
        return sum(m * irrep_dim(self.parabolic, lam) for lam, m in self.terms.items())

    @property
    def det(self) -> Weight:
        total = wzero(self.parabolic.rs.rank)
        for lam, m in self.terms.items():
            total = wadd(total, wscale(m, irrep_det(self.parabolic, lam)))
        return total

    def weights(self) -> Counter:
        """Full weight multiset; its cardinality equals the rank."""
        out: Counter = Counter()
        for lam, m in self.terms.items():
            for w, c in irrep_weights(self.parabolic, lam).items():
                out[w] += m * c
        return out

    def __add__(self, other: "RepSum") -> "RepSum":
        if self.parabolic != other.parabolic:
            raise ValueError("direct sum requires the same parabolic")
        merged = Counter(self.terms)
        merged.update(other.terms)
        return RepSum(self.parabolic, merged)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RepSum) and self.parabolic == other.parabolic
                and self.terms == other.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam, m in self.sorted_terms():
            parts.append(weight_str(lam) + (f"^⊕{m}" if m > 1 else ""))
        return " ⊕ ".join(parts)

    def __repr__(self) -> str:
        return f"<RepSum {self.parabolic.label}: {self}>"


def irrep(P: "ParabolicData", lam: Weight) -> RepSum:
    """The irreducible P-representation with highest weight ``lam``."""
    return RepSum(P, {tuple(lam): 1})


def trivial(P: "ParabolicData") -> RepSum:
    return irrep(P, wzero(P.rs.rank))


def _string_node(P: "ParabolicData") -> int | None:
    """The single uncrossed node, or None when the Levi is a torus."""
    nodes = sorted(P.uncrossed)
    if not nodes:
        return None
    if len(nodes) == 1:
        return nodes[0]
    raise UnsupportedLevi(
        f"Levi of {P.label} has semisimple rank {len(nodes)}; only rank <= 1 is supported")


def irrep_weights(P: "ParabolicData", lam: Weight) -> Counter:
    """Weight multiset of the irreducible with highest weight ``lam``.

    For a torus Levi this is the single character; for a rank-one Levi it is
    the alpha-string ``lam, lam - alpha, ..., lam - <lam, alpha^vee> alpha``
    through the uncrossed simple root.
    """
    lam = tuple(lam)
    if not P.is_p_dominant(lam):
        raise NotPDominant(f"{weight_str(lam)} is not p-dominant for {P.label}")
    i = _string_node(P)
    if i is None:
        return Counter({lam: 1})
    alpha = P.rs.cartan.row(i)
    return Counter({wsub(lam, wscale(j, alpha)): 1 for j in range(lam[i - 1] + 1)})


def irrep_dim(P: "ParabolicData", lam: Weight) -> int:
    if not P.is_p_dominant(lam):
        raise NotPDominant(f"{weight_str(lam)} is not p-dominant for {P.label}")
    i = _string_node(P)
    return 1 if i is None else lam[i - 1] + 1


def irrep_det(P: "ParabolicData", lam: Weight) -> Weight:
    """Sum of the weight string: n*lam - n(n-1)/2 * alpha for string length n."""
    lam = tuple(lam)
    n = irrep_dim(P, lam)
    i = _string_node(P)
    det = wscale(n, lam)
    if i is not None:
        det = wsub(det, wscale(n * (n - 1) // 2, P.rs.cartan.row(i)))
    return det


def _levi_height(P: "ParabolicData", u: Weight, v: Weight) -> int | None:
    """t >= 0 with u - v = t * alpha_uncrossed, or None if incomparable."""
    diff = wsub(u, v)
    i = _string_node(P)
    if i is None:
        return 0 if not any(diff) else None
    alpha = P.rs.cartan.row(i)
    j = next(k for k, a in enumerate(alpha) if a != 0)
    t = Fraction(diff[j], alpha[j])
    if t.denominator != 1 or t < 0:
        return None
    t = int(t)
    return t if diff == wscale(t, alpha) else None


def decompose(P: "ParabolicData", multiset: Mapping[Weight, int]) -> RepSum:
    """Invert :func:`irrep_weights` on a weight multiset.

    Repeatedly extracts the maximal weight in the Levi dominance order (ties
    broken lexicographically), subtracts its string and recurses.  Raises
    :class:`NotARepresentation` when extraction hits a non-dominant maximal
    weight or a subtraction would go negative.
    """
    work = Counter()
    for w, c in dict(multiset).items():
        if c < 0:
            raise NotARepresentation("negative multiplicity in weight multiset")
        if c:
            work[tuple(w)] = c
    terms: Counter = Counter()
    while work:
        maximal = [u for u in work
                   if not any(v != u and _levi_height(P, v, u) for v in work)]
        top = max(maximal)
        if not P.is_p_dominant(top):
            raise NotARepresentation(
                f"maximal weight {weight_str(top)} is not p-dominant for {P.label}")
        for w, c in irrep_weights(P, top).items():
            if work[w] < c:
                raise NotARepresentation(
                    f"string of {weight_str(top)} is not contained in the multiset")
            work[w] -= c
            if not work[w]:
                del work[w]
        terms[top] += 1
    return RepSum(P, terms)


def dual(P: "ParabolicData", r: RepSum) -> RepSum:
    """Dual representation: the weight multiset is negated, then re-decomposed."""
    return decompose(P, Counter({wneg(w): c for w, c in r.weights().items()}))


def tensor(P: "ParabolicData", a: RepSum, b: RepSum) -> RepSum:
    """Tensor product via convolution of weight multisets."""
    if a.parabolic != P or b.parabolic != P:
        raise ValueError("tensor factors must live over the given parabolic")
    conv: Counter = Counter()
    for u, cu in a.weights().items():
        for v, cv in b.weights().items():
            conv[wadd(u, v)] += cu * cv
    return decompose(P, conv)


def exterior_power(P: "ParabolicData", r: RepSum, k: int) -> RepSum:
    """k-th exterior power: all k-element sub-multiset sums of the weights.

    Computed by the elementary-symmetric recurrence over the weight list, not
    by enumerating subsets.
    """
    n = r.rank
    if not 0 <= k <= n:
        raise OutOfRange(f"exterior power {k} outside 0..{n}")
    elements = sorted(r.weights().elements())
    zero = wzero(P.rs.rank)
    layers: list[Counter] = [Counter({zero: 1})] + [Counter() for _ in range(k)]
    for x in elements:
        for j in range(k, 0, -1):
            for w, c in layers[j - 1].items():
                layers[j][wadd(w, x)] += c
    total = sum(layers[k].values())
    if total != comb(n, k):
        raise AssertionError("exterior power has wrong cardinality")
    return decompose(P, layers[k])
