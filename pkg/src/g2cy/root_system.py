"""Finite root systems from Cartan matrices, with exact integer arithmetic.

Weights are integer tuples in the basis of fundamental weights, so coordinate
i of a weight ``lam`` equals the pairing ``<lam, alpha_i^vee>`` with the i-th
simple coroot.  Simple roots are then the rows of the Cartan matrix read in
these coordinates.  Coroot expansions are carried through the reflection
closure using the symmetrizer, which keeps every pairing an exact integer;
Python integers never overflow, so no checked arithmetic is needed.

Node indices are 1-based throughout the public interface, matching the usual
Dynkin-diagram numbering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import InvalidCartan, NonFiniteType

Weight = tuple[int, ...]


def wadd(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def wsub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def wneg(u: Weight) -> Weight:
    return tuple(-a for a in u)


def wscale(c: int, u: Weight) -> Weight:
    return tuple(c * a for a in u)


def wzero(rank: int) -> Weight:
    return (0,) * rank


def weight_str(u: Weight) -> str:
    return "(" + ",".join(str(a) for a in u) + ")"


@dataclass(frozen=True)
class CartanMatrix:
    """Integer Cartan matrix; entry (i, j) is ``<alpha_i, alpha_j^vee>``."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0 or any(len(row) != n for row in self.entries):
            raise InvalidCartan("Cartan matrix must be square and non-empty")
        for i, row in enumerate(self.entries):
            for j, c in enumerate(row):
                if not isinstance(c, int):
                    raise InvalidCartan("Cartan entries must be integers")
                if i == j and c != 2:
                    raise InvalidCartan("diagonal Cartan entries must equal 2")
                if i != j and c > 0:
                    raise InvalidCartan("off-diagonal Cartan entries must be <= 0")
                if i != j and (c == 0) != (self.entries[j][i] == 0):
                    raise InvalidCartan("zero pattern must be symmetric")

    @classmethod
    def from_rows(cls, rows) -> "CartanMatrix":
        return cls(tuple(tuple(int(c) for c in row) for row in rows))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def row(self, i: int) -> Weight:
        """Simple root alpha_i in fundamental-weight coordinates (i is 1-based)."""
        return self.entries[i - 1]


#: The G2 Cartan matrix; node 1 carries the long simple root, so the
#: triple edge reads <alpha_1, alpha_2^vee> = -3, <alpha_2, alpha_1^vee> = -1.
G2_CARTAN = CartanMatrix.from_rows([[2, -3], [-1, 2]])


@dataclass(frozen=True)
class Root:
    """A root, stored in every coordinate system the package needs.

    ``weight`` is the root in fundamental-weight coordinates, ``simple_coords``
    its expansion over the simple roots, and ``coroot_coords`` the expansion of
    the coroot ``2*alpha/(alpha,alpha)`` over simple coroots.  ``norm_half`` is
    ``(alpha, alpha)/2`` with short roots normalised to 1 by the symmetrizer;
    ``long`` marks roots of maximal length.
    """

    weight: Weight
    simple_coords: tuple[int, ...]
    coroot_coords: tuple[int, ...]
    norm_half: int
    long: bool

    @property
    def height(self) -> int:
        return sum(self.simple_coords)

    @property
    def positive(self) -> bool:
        return all(c >= 0 for c in self.simple_coords)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element as a reduced word of simple reflection indices."""

    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)


def _symmetrizer(cartan: CartanMatrix) -> tuple[int, ...]:
    """Positive integers d with C[i][j]*d[j] symmetric, normalised coprime."""
    n = cartan.rank
    C = cartan.entries
    vals: list[Fraction | None] = [None] * n
    for start in range(n):
        if vals[start] is not None:
            continue
        vals[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or C[i][j] == 0:
                    continue
                # C[i][j]*d[j] = C[j][i]*d[i] fixes the ratio along each edge.
                expected = vals[i] * Fraction(C[j][i], C[i][j])
                if vals[j] is None:
                    vals[j] = expected
                    stack.append(j)
                elif vals[j] != expected:
                    raise InvalidCartan("Cartan matrix is not symmetrizable")
    denom = lcm(*(v.denominator for v in vals))
    ints = [int(v * denom) for v in vals]
    g = gcd(*ints)
    d = tuple(x // g for x in ints)
    for i in range(n):
        for j in range(n):
            if C[i][j] * d[j] != C[j][i] * d[i]:
                raise InvalidCartan("Cartan matrix is not symmetrizable")
    return d


class RootSystem:
    """A finite root system with its Weyl combinatorics.

    Immutable after construction; all operations are pure functions of their
    arguments, so instances can be shared freely across threads.
    """

    def __init__(self, cartan: CartanMatrix, symmetrizer: tuple[int, ...],
                 positive_roots: tuple[Root, ...]):
        self.cartan = cartan
        self.symmetrizer = symmetrizer
        self.positive_roots = positive_roots
        self.weyl_vector: Weight = (1,) * cartan.rank
        self._simple = {i: next(r for r in positive_roots
                                if r.simple_coords == tuple(int(k == i - 1)
                                                            for k in range(cartan.rank)))
                        for i in range(1, cartan.rank + 1)}
        self._weyl_cache: tuple[WeylElement, ...] | None = None
        self._dim_cache: dict[Weight, int] = {}

    @property
    def rank(self) -> int:
        return self.cartan.rank

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystem) and self.cartan == other.cartan

    def __hash__(self) -> int:
        return hash(self.cartan)

    def __repr__(self) -> str:
        return f"RootSystem(rank={self.rank}, positive_roots={len(self.positive_roots)})"

    def simple_root(self, i: int) -> Root:
        return self._simple[i]

    def reflect(self, i: int, lam: Weight) -> Weight:
        """Simple reflection s_i(lam) = lam - <lam, alpha_i^vee> alpha_i."""
        c = lam[i - 1]
        if c == 0:
            return lam
        return wsub(lam, wscale(c, self.cartan.row(i)))

    def act(self, word: tuple[int, ...], lam: Weight) -> Weight:
        """Apply a word of simple reflections, rightmost letter first."""
        for i in reversed(word):
            lam = self.reflect(i, lam)
        return lam

    def pairing(self, lam: Weight, alpha: Root) -> int:
        """Exact integer pairing ``<lam, alpha^vee>``."""
        return sum(c * x for c, x in zip(alpha.coroot_coords, lam, strict=True))

    def dominant_conjugate(self, mu: Weight) -> tuple[int, Weight] | None:
        """Bring mu into the dominant chamber by simple reflections.

        Returns ``None`` when mu is singular (its orbit meets a wall),
        otherwise ``(length, dom)`` where ``dom`` is the unique strictly
        dominant conjugate and ``length`` the length of the unique Weyl
        element achieving it.  Each step reflects at the first negative
        coordinate, which strictly shrinks the set of positive roots pairing
        negatively, so at most ``len(positive_roots)`` steps occur.
        """
        cur = mu
        length = 0
        limit = len(self.positive_roots)
        while True:
            neg = next((i for i, c in enumerate(cur) if c < 0), None)
            if neg is None:
                break
            if length >= limit:
                raise AssertionError("dominant_conjugate failed to terminate")
            cur = self.reflect(neg + 1, cur)
            length += 1
        if any(c == 0 for c in cur):
            return None
        return length, cur

    def weyl_elements(self, bound: int = 1_000_000) -> tuple[WeylElement, ...]:
        """Enumerate the whole Weyl group as reduced words (breadth first)."""
        if self._weyl_cache is not None:
            return self._weyl_cache
        n = self.rank
        identity = tuple(tuple(int(k == j) for k in range(n)) for j in range(n))
        seen: dict[tuple[Weight, ...], tuple[int, ...]] = {identity: ()}
        frontier = [identity]
        while frontier:
            nxt = []
            for cols in frontier:
                word = seen[cols]
                for i in range(1, n + 1):
                    ncols = tuple(self.reflect(i, c) for c in cols)
                    if ncols not in seen:
                        seen[ncols] = (i,) + word
                        nxt.append(ncols)
                        if len(seen) > bound:
                            raise NonFiniteType("Weyl group enumeration exceeded bound")
            frontier = nxt
        elements = tuple(WeylElement(w) for w in
                         sorted(seen.values(), key=lambda w: (len(w), w)))
        self._weyl_cache = elements
        return elements

    def weyl_order(self) -> int:
        return len(self.weyl_elements())


def build_root_system(cartan: CartanMatrix, max_positive_roots: int = 512) -> RootSystem:
    """Close the simple roots under reflection and assemble the root system.

    Raises :class:`NonFiniteType` when the closure exceeds
    ``max_positive_roots``, which is how non-finite Cartan matrices (affine or
    indefinite) are rejected.
    """
    d = _symmetrizer(cartan)
    n = cartan.rank
    C = cartan.entries

    # (alpha_i, alpha_j) in the normalisation where short roots have norm 2.
    bilinear = [[C[i][j] * d[j] for j in range(n)] for i in range(n)]

    def unit(i: int) -> tuple[int, ...]:
        return tuple(int(k == i) for k in range(n))

    def to_weight(sc: tuple[int, ...]) -> Weight:
        return tuple(sum(sc[i] * C[i][j] for i in range(n)) for j in range(n))

    known: dict[tuple[int, ...], Weight] = {unit(i): cartan.row(i + 1) for i in range(n)}
    frontier = list(known)
    while frontier:
        nxt = []
        for sc in frontier:
            w = known[sc]
            for i in range(n):
                c = w[i]
                if c == 0:
                    continue
                nsc = tuple(sc[k] - (c if k == i else 0) for k in range(n))
                if any(x < 0 for x in nsc):
                    continue  # reflection left the positive cone
                if nsc not in known:
                    known[nsc] = to_weight(nsc)
                    nxt.append(nsc)
                    if len(known) > max_positive_roots:
                        raise NonFiniteType(
                            f"root closure exceeded {max_positive_roots} roots; "
                            "Cartan matrix is not of finite type")
        frontier = nxt

    roots = []
    norms = {}
    for sc, w in known.items():
        q = sum(sc[i] * sc[j] * bilinear[i][j] for i in range(n) for j in range(n))
        if q <= 0 or q % 2:
            raise InvalidCartan("root closure produced a vector of invalid norm")
        norms[sc] = q // 2
    max_norm = max(norms.values())
    for sc, w in known.items():
        nh = norms[sc]
        cv = []
        for i in range(n):
            num = sc[i] * d[i]
            if num % nh:
                raise InvalidCartan("coroot expansion is not integral")
            cv.append(num // nh)
        roots.append(Root(weight=w, simple_coords=sc, coroot_coords=tuple(cv),
                          norm_half=nh, long=(nh == max_norm)))
    roots.sort(key=lambda r: (r.height, r.simple_coords))

    rs = RootSystem(cartan, d, tuple(roots))
    two_rho = tuple(sum(r.weight[j] for r in roots) for j in range(n))
    if two_rho != wscale(2, rs.weyl_vector):
        raise AssertionError("half-sum of positive roots is not the Weyl vector")
    return rs


@lru_cache(maxsize=None)
def g2_root_system() -> RootSystem:
    """The shipped G2 instance: 6 positive roots, Weyl group of order 12."""
    return build_root_system(G2_CARTAN)
