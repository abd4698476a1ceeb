"""Generators and binomial relations of the semigroup of lattice points in the cone over ``P``.

A point of the cone is written ``(x, k)`` with ``x`` in ``kP``; ``k`` is its
degree.  A point is irreducible when it is not the sum of two nonzero cone
points.  Relations are found fibre by fibre: the factorizations of a cone
point into generators form a graph, two factorizations being adjacent when
they share a generator, and each extra connected component needs one new
minimal binomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from gorpoly.ehrhart import h_star
from gorpoly.gorenstein import gorenstein_index
from gorpoly.polytope import LatticePolytope, PolytopeError

Point = tuple[int, ...]
Exponents = tuple[int, ...]

FIBRE_CAP = 100_000


class SaturationError(PolytopeError):
    """Raised when irreducible points exist beyond the requested degree bound."""

    def __init__(self, point: Point):
        super().__init__(f"irreducible point {point} above the degree bound; raise k_max")
        self.point = point


class FibreOverflowError(PolytopeError):
    """Raised when a fibre has more factorizations than the configured cap."""


class IncompletePresentationError(PolytopeError):
    """Raised when new minimal relations appear one degree above ``deg_max``."""


@dataclass(frozen=True)
class GradedGenerators:
    """Irreducible cone points, each stored as ``x + (k,)``."""

    generators: tuple[Point, ...]
    I_poly: tuple[int, ...]
    saturation_checked_to: int

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g[-1] for g in self.generators)


@dataclass(frozen=True)
class BinomialPresentation:
    """Minimal binomial relations as pairs of exponent vectors over the generators."""

    variables: tuple[Point, ...]
    relations: tuple[tuple[Exponents, Exponents], ...]

    @property
    def variable_degrees(self) -> tuple[int, ...]:
        return tuple(g[-1] for g in self.variables)

    def degree(self, rel: tuple[Exponents, Exponents]) -> int:
        return sum(e * d for e, d in zip(rel[0], self.variable_degrees))

    def support(self, rel: tuple[Exponents, Exponents]) -> frozenset[int]:
        return frozenset(i for i in range(len(self.variables)) if rel[0][i] or rel[1][i])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(r) for r in self.relations))

    def signature(self) -> tuple[tuple[int, int], ...]:
        """Sorted ``(degree, support size)`` pairs."""
        return tuple(sorted((self.degree(r), len(self.support(r))) for r in self.relations))

    def image(self, exps: Exponents) -> Point:
        n = len(self.variables[0])
        return tuple(sum(e * g[c] for e, g in zip(exps, self.variables)) for c in range(n))


@dataclass(frozen=True)
class ArtinianProfile:
    g_vector: tuple[int, ...]
    case: str | None


def _cone_points(P: LatticePolytope, k: int) -> list[Point]:
    return [x + (k,) for x in P.dilate_points(k)]


def _irreducible_at(k: int, layers: dict[int, set[Point]]) -> list[Point]:
    out = []
    for p in sorted(layers[k]):
        reducible = False
        for i in range(1, k // 2 + 1):
            other = layers[k - i]
            if any(tuple(a - b for a, b in zip(p, q)) in other for q in layers[i]):
                reducible = True
                break
        if not reducible:
            out.append(p)
    return out


def irreducible_generators(P: LatticePolytope, k_max: int | None = None) -> GradedGenerators:
    """Irreducible points of the cone over ``P`` up to degree ``k_max``.

    Args:
        P: A full-dimensional lattice polytope.
        k_max: Degree bound, at least 2.  Defaults to ``max(2, deg P)``,
            which always suffices because irreducible points lie in the
            fundamental parallelepiped of a lattice simplex inside ``P``.

    Returns:
        The generators sorted by degree, and ``I_poly`` with ``I_poly[k]``
        the number of generators of degree ``k``.

    Raises:
        SaturationError: If an irreducible point of degree ``k_max + 1`` exists.
    """
    P._require_full()
    if k_max is None:
        k_max = max(2, h_star(P).degree)
    if k_max < 2:
        raise PolytopeError("k_max must be at least 2")
    layers = {k: set(_cone_points(P, k)) for k in range(1, k_max + 2)}
    gens: list[Point] = []
    counts = [0] * (k_max + 1)
    for k in range(1, k_max + 1):
        irr = _irreducible_at(k, layers)
        gens.extend(irr)
        counts[k] = len(irr)
    beyond = _irreducible_at(k_max + 1, layers)
    if beyond:
        raise SaturationError(beyond[0])
    while len(counts) > 2 and counts[-1] == 0:
        counts.pop()
    return GradedGenerators(tuple(gens), tuple(counts), k_max)


def _factorizations(gens: tuple[Point, ...], b: int, cap: int) -> dict[Point, list[Exponents]]:
    """All exponent vectors of total degree ``b``, grouped by image.

    Raises:
        FibreOverflowError: If one image has more than ``cap`` factorizations.
    """
    m = len(gens)
    n = len(gens[0])
    out: dict[Point, list[Exponents]] = {}
    exps = [0] * m

    def rec(i: int, remaining: int, acc: list[int]):
        if remaining == 0:
            fibre = out.setdefault(tuple(acc), [])
            fibre.append(tuple(exps))
            if len(fibre) > cap:
                raise FibreOverflowError(f"more than {cap} factorizations of {tuple(acc)}")
            return
        if i == m:
            return
        g = gens[i]
        d = g[-1]
        for e in range(remaining // d, -1, -1):
            exps[i] = e
            rec(i + 1, remaining - e * d, [a + e * c for a, c in zip(acc, g)])
        exps[i] = 0

    rec(0, b, [0] * n)
    return out


def _components(facts: list[Exponents]) -> list[list[Exponents]]:
    supports = [frozenset(i for i, e in enumerate(f) if e) for f in facts]
    parent = list(range(len(facts)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(len(facts)):
        for j in range(i + 1, len(facts)):
            if supports[i] & supports[j]:
                parent[find(i)] = find(j)
    groups: dict[int, list[Exponents]] = {}
    for i, f in enumerate(facts):
        groups.setdefault(find(i), []).append(f)
    return list(groups.values())


def _representative(comp: list[Exponents]) -> Exponents:
    # fewest distinct generators, then the lexicographically largest exponent vector
    return min(comp, key=lambda f: (sum(1 for e in f if e), tuple(-e for e in f)))


def _fibre_relations(facts: list[Exponents]) -> list[tuple[Exponents, Exponents]]:
    comps = _components(facts)
    if len(comps) < 2:
        return []
    reps = sorted((_representative(c) for c in comps),
                  key=lambda f: (sum(1 for e in f if e), tuple(-e for e in f)))
    hub = reps[0]
    return [(hub, other) for other in reps[1:]]


def _relations_in_degree(gens, b, cap):
    rels = []
    for _, facts in sorted(_factorizations(gens, b, cap).items()):
        if len(facts) > 1:
            rels.extend(_fibre_relations(facts))
    return rels


def minimal_relations(P: LatticePolytope, gens: GradedGenerators | None = None,
                      deg_max: int | None = None, cap: int = FIBRE_CAP,
                      check_completeness: bool = True) -> BinomialPresentation:
    """Minimal binomial generators of the toric ideal of the cone over ``P``.

    Args:
        P: A full-dimensional lattice polytope.
        gens: Generators from :func:`irreducible_generators`; computed if omitted.
        deg_max: Largest relation degree searched.  Defaults to
            ``2 * index + 2`` for Gorenstein ``P`` and ``2 * (n + 1)`` otherwise.
        cap: Maximum number of factorizations of a single cone point.
        check_completeness: Also scan degree ``deg_max + 1`` and fail if it
            contributes new relations.

    Returns:
        The presentation, one binomial per missing fibre connection.
    """
    if gens is None:
        gens = irreducible_generators(P)
    if deg_max is None:
        r = gorenstein_index(P)
        deg_max = 2 * (r if r is not None else P.dim + 1) + 2
    rels = []
    for b in range(2, deg_max + 1):
        rels.extend(_relations_in_degree(gens.generators, b, cap))
    if check_completeness and _relations_in_degree(gens.generators, deg_max + 1, cap):
        raise IncompletePresentationError(f"relations beyond degree {deg_max}")
    return BinomialPresentation(gens.generators, tuple(rels))


def artinian_profile(P: LatticePolytope, gens: GradedGenerators | None = None,
                     presentation: BinomialPresentation | None = None) -> ArtinianProfile:
    """g-vector ``I_P(t) - (n + 1) t`` and, for ``h*_1 <= 2``, the quotient shape.

    The case is ``"i"`` (one generator of degree 2, one quartic relation),
    ``"ii"`` (one cubic relation) or ``"iii"`` (two quadratic relations),
    matched against the relation degrees of the presentation.
    """
    if gens is None:
        gens = irreducible_generators(P)
    g = list(gens.I_poly)
    g[1] -= P.dim + 1
    while len(g) > 2 and g[-1] == 0:
        g.pop()
    hs = h_star(P)
    case = None
    if hs.degree == 2 and gorenstein_index(P) is not None and hs.hstar[1] <= 2:
        if presentation is None:
            presentation = minimal_relations(P, gens)
        expected = {0: ("i", (4,)), 1: ("ii", (3,)), 2: ("iii", (2, 2))}[hs.hstar[1]]
        if presentation.degrees == expected[1]:
            case = expected[0]
    return ArtinianProfile(tuple(g), case)


def pyramid_by_relations(P: LatticePolytope, presentation: BinomialPresentation) -> bool:
    """True iff some generator appears in no minimal relation."""
    used: set[int] = set()
    for rel in presentation.relations:
        used |= presentation.support(rel)
    return len(used) < len(presentation.variables)


__all__ = [
    "ArtinianProfile", "BinomialPresentation", "FibreOverflowError", "GradedGenerators",
    "IncompletePresentationError", "SaturationError", "artinian_profile",
    "irreducible_generators", "minimal_relations", "pyramid_by_relations",
]
