"""Koszul-resolution computations: E1 pages, restricted cohomology, twists.

A regular section of a globally generated bundle E on F = G/P cuts out X of
dimension dim F - rank E, and the structure sheaf of X is resolved by

    0 -> Λ^r E* -> ... -> E* -> O_F -> O_X -> 0,   r = rank E.

Tensoring the resolution with a bundle W and taking cohomology termwise gives
the first page E1(k, q) = H^q(F, Λ^k E* ⊗ W) of a spectral sequence
converging to H^{q-k}(X, W|_X).

The differentials depend on the chosen section (they are contractions with
it), so they are not equivariant maps and cannot be dismissed by comparing
irreducible supports.  What the computation does know exactly:

* dimension bookkeeping: a page-r differential between two entries removes
  the same rank from both, and the ranks leaving and entering one entry fit
  inside it;
* Grothendieck vanishing: coherent cohomology of X vanishes outside
  0..dim X, so every limit entry in a forbidden total degree must die.

``restricted_cohomology`` therefore enumerates all rank assignments
consistent with both facts and reports a degree as determined only when every
consistent assignment gives the same dimension; otherwise it reports bounds.
The Euler characteristic is differential-independent and always exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import CohomologyTable, bundle_cohomology, euler_char
from .errors import (InconsistentSpectralSequence, NotGloballyGenerated,
                     NotMaximalParabolic, TrivialSummand)
from .parabolic import ParabolicData, is_g_dominant
from .reps import RepSum, dual, exterior_power, irrep, tensor, trivial
from .root_system import weight_str, wzero

_BRANCH_CAP = 500_000


class _TooManyBranches(Exception):
    pass


@dataclass(frozen=True)
class KoszulInput:
    """The data of a complete intersection: ambient parabolic, E and W."""

    P: ParabolicData
    E: RepSum
    W: RepSum

    def __post_init__(self):
        zero = wzero(self.P.rs.rank)
        for lam in self.E.terms:
            if lam == zero:
                raise TrivialSummand("E contains the trivial bundle as a summand")
            if not is_g_dominant(lam):
                raise NotGloballyGenerated(
                    f"summand {weight_str(lam)} of E is not globally generated")

    @property
    def dim_x(self) -> int:
        return self.P.dim - self.E.rank


def koszul_terms(inp: KoszulInput) -> list[RepSum]:
    """Terms Λ^k E* ⊗ W of the twisted resolution, k = 0..rank E."""
    e_dual = dual(inp.P, inp.E)
    return [tensor(inp.P, exterior_power(inp.P, e_dual, k), inp.W)
            for k in range(inp.E.rank + 1)]


class E1Page:
    """First page of the Koszul spectral sequence: a (k, q) grid of groups."""

    def __init__(self, inp: KoszulInput, columns: list[CohomologyTable]):
        self.input = inp
        self.columns = columns

    def dim(self, k: int, q: int) -> int:
        return self.columns[k].dim(q)

    def entries(self) -> dict[tuple[int, int], int]:
        """Nonzero entries as {(k, q): dim}."""
        out = {}
        for k, col in enumerate(self.columns):
            for q in col.degrees():
                d = col.dim(q)
                if d:
                    out[(k, q)] = d
        return out

    @property
    def euler(self) -> int:
        """Alternating sum over the whole page; independent of differentials."""
        return sum((-1) ** (q - k) * d for (k, q), d in self.entries().items())

    def render(self) -> str:
        entries = self.entries()
        if not entries:
            return "E1 page is zero"
        kmax = len(self.columns) - 1
        qmax = max(q for _, q in entries)
        header = "q\\k " + " ".join(f"{k:>6}" for k in range(kmax + 1))
        lines = [header]
        for q in range(qmax, -1, -1):
            row = " ".join(f"{entries.get((k, q), 0):>6}" for k in range(kmax + 1))
            lines.append(f"{q:>3} " + row)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "parabolic": self.input.P.label,
            "entries": [{"k": k, "q": q, "dim": d,
                         "irreps": [{"weight": list(mu), "mult": m}
                                    for mu, m in sorted(self.columns[k].irreps(q).items())]}
                        for (k, q), d in sorted(self.entries().items())],
        }


def e1_page(inp: KoszulInput) -> E1Page:
    return E1Page(inp, [bundle_cohomology(inp.P, term) for term in koszul_terms(inp)])


@dataclass(frozen=True)
class DimRange:
    """A cohomology dimension, possibly only known up to bounds."""

    lower: int
    upper: int

    @property
    def determined(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int:
        if not self.determined:
            raise ValueError(f"dimension only bounded: [{self.lower}, {self.upper}]")
        return self.lower

    def __str__(self) -> str:
        return str(self.lower) if self.determined else f"[{self.lower}..{self.upper}]"

    def to_json(self):
        if self.determined:
            return self.lower
        return {"lower": self.lower, "upper": self.upper}


def _differential_components(positions, max_page: int) -> list[tuple]:
    """Group positions connected by a possible differential on any page."""
    pos_set = set(positions)
    adjacency = {p: set() for p in positions}
    for (k, q) in positions:
        for r in range(1, max_page + 1):
            tgt = (k - r, q - r + 1)
            if tgt in pos_set:
                adjacency[(k, q)].add(tgt)
                adjacency[tgt].add((k, q))
    components = []
    unseen = set(positions)
    while unseen:
        stack = [min(unseen)]
        unseen.discard(stack[0])
        comp = {stack[0]}
        while stack:
            for nbr in adjacency[stack.pop()]:
                if nbr in unseen:
                    unseen.discard(nbr)
                    comp.add(nbr)
                    stack.append(nbr)
        components.append(tuple(sorted(comp)))
    return components


def _component_outcomes(dims: dict, positions: tuple, max_page: int,
                        budget: int = _BRANCH_CAP) -> set[tuple]:
    """Reachable limit dimension tables for one differential component.

    Explores every consistent rank assignment page by page; a page-r
    differential removes equal rank from source and target, and the ranks
    leaving and entering one position fit inside it (the incoming image lies
    in the outgoing kernel).  Returns tuples aligned with ``positions``.
    """
    order = {p: i for i, p in enumerate(positions)}
    memo: set = set()
    results: set[tuple] = set()
    steps = [budget]

    def spend() -> None:
        steps[0] -= 1
        if steps[0] < 0:
            raise _TooManyBranches

    def explore(r: int, cur: tuple) -> None:
        if (r, cur) in memo:
            return
        memo.add((r, cur))
        spend()
        if r > max_page:
            results.add(cur)
            return
        diffs = []
        for p in positions:
            tgt = (p[0] - r, p[1] - r + 1)
            if cur[order[p]] > 0 and tgt in order and cur[order[tgt]] > 0:
                diffs.append((order[p], order[tgt]))
        if not diffs:
            explore(r + 1, cur)
            return

        def assign(idx: int, drops: list[int]) -> None:
            if idx == len(diffs):
                explore(r + 1, tuple(c - d for c, d in zip(cur, drops)))
                return
            s, t = diffs[idx]
            top = min(cur[s] - drops[s], cur[t] - drops[t])
            for rank in range(top + 1):
                spend()
                drops[s] += rank
                drops[t] += rank
                assign(idx + 1, drops)
                drops[s] -= rank
                drops[t] -= rank

        assign(0, [0] * len(positions))

    explore(1, tuple(dims[p] for p in positions))
    return results



class RestrictedCohomology:
    """Cohomology of W restricted to the zero locus X, degree by degree.

    ``h(n)`` gives a :class:`DimRange` per total degree; ``euler`` is always
    the exact alternating sum.
    """

    def __init__(self, inp: KoszulInput, page: E1Page,
                 by_degree: dict[int, DimRange], euler: int):
        self.input = inp
        self.page = page
        self.by_degree = by_degree
        self.euler = euler
        self.dim_x = inp.dim_x

    def h(self, n: int) -> DimRange:
        return self.by_degree.get(n, DimRange(0, 0))

    @property
    def determined(self) -> bool:
        return all(r.determined for r in self.by_degree.values())

    def hodge_vector(self) -> tuple[DimRange, ...]:
        return tuple(self.h(n) for n in range(self.dim_x + 1))

    def to_json(self) -> dict:
        return {
            "parabolic": self.input.P.label,
            "dim_X": self.dim_x,
            "h": {str(n): self.by_degree[n].to_json() for n in sorted(self.by_degree)},
            "euler": self.euler,
        }


def restricted_cohomology(inp: KoszulInput, enforce_vanishing: bool = True) -> RestrictedCohomology:
    """Resolve the Koszul spectral sequence as far as dimensions force it.

    With ``enforce_vanishing`` (the default), limit entries in total degrees
    outside 0..dim X are required to vanish; disabling it gives the purely
    formal analysis, which can only be less determined (useful as an audit).
    """
    page = e1_page(inp)
    dims = page.entries()
    rank = inp.E.rank
    dim_x = inp.dim_x
    euler = page.euler

    def allowed(n: int) -> bool:
        return 0 <= n <= dim_x

    # limit totals add up across components, and every contribution is
    # non-negative, so the vanishing constraint decomposes component-wise
    lower: dict[int, int] = {}
    upper: dict[int, int] = {}
    for positions in _differential_components(sorted(dims), rank):
        degrees = sorted({q - k for k, q in positions})
        try:
            outcomes = _component_outcomes(dims, positions, rank)
        except _TooManyBranches:
            # sound per-component fallback: no cancellation resolved; degrees
            # outside 0..dim X still vanish in the limit by Grothendieck
            for (k, q) in positions:
                n = q - k
                top = 0 if (enforce_vanishing and not allowed(n)) else dims[(k, q)]
                lower[n] = lower.get(n, 0)
                upper[n] = upper.get(n, 0) + top
            continue
        if enforce_vanishing:
            outcomes = {
                table for table in outcomes
                if all(allowed(n) or
                       sum(d for (k, q), d in zip(positions, table) if q - k == n) == 0
                       for n in degrees)}
            if not outcomes:
                raise InconsistentSpectralSequence(
                    "no differential ranks satisfy the vanishing constraints; the "
                    "input does not define a complete intersection of expected dimension")
        for n in degrees:
            values = {sum(d for (k, q), d in zip(positions, table) if q - k == n)
                      for table in outcomes}
            lower[n] = lower.get(n, 0) + min(values)
            upper[n] = upper.get(n, 0) + max(values)

    by_degree = {n: DimRange(lower[n], upper[n]) for n in lower
                 if upper[n] > 0 or allowed(n)}
    for n in range(0, max(dim_x, -1) + 1):
        by_degree.setdefault(n, DimRange(0, 0))
    return RestrictedCohomology(inp, page, by_degree, euler)


def hilbert_value(P: ParabolicData, E: RepSum, i: int) -> int:
    """Exact Euler characteristic of the i-th twist of O_X.

    Needs a maximal parabolic so that Pic F is generated by one line bundle
    L = E_omega, with omega the fundamental weight of the crossed node;
    negative twists are allowed.  Computed as the alternating sum of Euler
    characteristics of the twisted Koszul terms, with no spectral sequence
    involved.
    """
    if len(P.crossed) != 1:
        raise NotMaximalParabolic(
            f"{P.label} has Picard rank {len(P.crossed)}; a single twist is undefined")
    node = next(iter(P.crossed))
    omega_i = tuple(i if j == node - 1 else 0 for j in range(P.rs.rank))
    line = irrep(P, omega_i)
    e_dual = dual(P, E)
    total = 0
    for k in range(E.rank + 1):
        term = tensor(P, exterior_power(P, e_dual, k), line)
        total += (-1) ** k * euler_char(P, term)
    return total


def structure_sheaf_cohomology(P: ParabolicData, E: RepSum,
                               enforce_vanishing: bool = True) -> RestrictedCohomology:
    """Restricted cohomology of the trivial bundle: the h^{0,q} of X."""
    return restricted_cohomology(KoszulInput(P, E, trivial(P)), enforce_vanishing)
