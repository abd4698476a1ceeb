"""Classification of Gorenstein polytopes of degree two.

Non-pyramids are found by two independent routes:

* **cayley**: Cayley polytopes of Minkowski decompositions of reflexive
  polygons, plus twice the unit 3-simplex;
* **deletion**: duals of the minimal polytopes are maximal, and every
  non-pyramid is reached from a maximal one by deleting deletable vertices.

Pyramids over lower-dimensional entries complete each dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from gorpoly.constructions import (
    cayley, minkowski_decompositions, pyramid, two_s3,
)
from gorpoly.ehrhart import h_star
from gorpoly.gorenstein import (
    deletable_vertices, delete_vertex, dual, dual_gorenstein, is_gorenstein_degree2,
    is_minimal, is_pyramid, reflexive_center,
)
from gorpoly.normal_form import NormalFormKey, are_isomorphic, canonical_vertices, normal_form
from gorpoly.polytope import LatticePolytope, PolytopeError, convex_hull

MAX_POLYGONS = 100
MAX_DIM = 8
ADDITION_BOX = 3

# Invariants used to name the non-pyramids of dimensions 3 to 5:
# name -> (normalized volume, f-vector, dual name).
REFERENCE_NAMES: dict[str, tuple[int, tuple[int, ...], str]] = {
    "P_1": (2, (1, 4, 6, 4, 1), "P_15"),
    "P_2": (3, (1, 5, 9, 6, 1), "P_14"),
    "P_3": (4, (1, 4, 6, 4, 1), "P_3"),
    "P_4": (4, (1, 5, 8, 5, 1), "P_13"),
    "P_5": (4, (1, 5, 9, 6, 1), "P_10"),
    "P_6": (4, (1, 6, 11, 7, 1), "P_11"),
    "P_7": (4, (1, 6, 12, 8, 1), "P_12"),
    "P_8": (5, (1, 7, 12, 7, 1), "P_8"),
    "P_9": (5, (1, 6, 10, 6, 1), "P_9"),
    "P_10": (6, (1, 6, 9, 5, 1), "P_5"),
    "P_11": (6, (1, 7, 11, 6, 1), "P_6"),
    "P_12": (6, (1, 8, 12, 6, 1), "P_7"),
    "P_13": (6, (1, 5, 8, 5, 1), "P_4"),
    "P_14": (7, (1, 6, 9, 5, 1), "P_2"),
    "P_15": (8, (1, 4, 6, 4, 1), "P_1"),
    "Q_1": (3, (1, 6, 15, 18, 9, 1), "Q_4"),
    "Q_2": (4, (1, 7, 17, 18, 8, 1), "Q_5"),
    "Q_3": (4, (1, 6, 13, 13, 6, 1), "Q_3"),
    "Q_4": (6, (1, 9, 18, 15, 6, 1), "Q_1"),
    "Q_5": (5, (1, 8, 18, 17, 7, 1), "Q_2"),
    "R_1": (4, (1, 8, 24, 34, 24, 8, 1), "R_1"),
}


def _reference_signature(name: str) -> tuple:
    nv, f, d = REFERENCE_NAMES[name]
    return nv, f, REFERENCE_NAMES[d][0], d == name


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    dim: int
    key: NormalFormKey
    vertices: tuple[tuple[int, ...], ...]
    nv: int
    hstar: tuple[int, ...]
    f_vector: tuple[int, ...]
    dual_id: str
    pyramid_folds: int
    pyramid_base_id: str | None
    cayley: tuple = ()
    minimal: bool = False
    maximal: bool = False
    picard_rank: int | None = None
    polytope: LatticePolytope | None = field(default=None, compare=False, repr=False)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "dim": self.dim,
            "normal_form": self.key.digest,
            "vertices": [list(v) for v in self.vertices],
            "nv": self.nv,
            "hstar": list(self.hstar),
            "f_vector": list(self.f_vector),
            "dual": self.dual_id,
            "pyramid_folds": self.pyramid_folds,
            "pyramid_base": self.pyramid_base_id,
            "cayley": [{"polygon": p, "summands": [[list(v) for v in s] for s in ss]}
                       for p, ss in self.cayley],
            "minimal": self.minimal,
            "maximal": self.maximal,
            "picard_rank": self.picard_rank,
        }


@dataclass(frozen=True)
class ClassificationResult:
    dim: int
    entries: tuple[CatalogEntry, ...]
    counts: dict[int, tuple[int, int]]
    provenance: dict[str, str]

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def non_pyramids(self) -> tuple[CatalogEntry, ...]:
        return tuple(e for e in self.entries if e.pyramid_folds == 0)


# -- reflexive polygons ---------------------------------------------------

def _centered(P: LatticePolytope) -> LatticePolytope | None:
    m = reflexive_center(P)
    if m is None:
        return None
    return P.translate(tuple(-x for x in m))


def _centered_reflexive(points) -> LatticePolytope | None:
    P = convex_hull(points, 2)
    if not P.is_full_dimensional or reflexive_center(P) != (0, 0):
        return None
    return P


def _polygon_neighbours(P: LatticePolytope):
    yield _centered(dual(P))
    pts = P.lattice_points
    for v in P.vertices:
        try:
            yield _centered_reflexive([p for p in pts if p != v])
        except PolytopeError:
            pass
    box = range(-ADDITION_BOX, ADDITION_BOX + 1)
    for p in product(box, box):
        if p not in pts:
            yield _centered_reflexive(list(P.vertices) + [p])


@lru_cache(maxsize=1)
def _polygon_classes() -> tuple[LatticePolytope, ...]:
    seeds = [convex_hull([(-1, -1), (-1, 1), (1, -1), (1, 1)], 2),
             convex_hull([(1, 0), (0, 1), (-1, -1)], 2)]
    found: dict[NormalFormKey, LatticePolytope] = {}
    work = []
    for s in seeds:
        found[normal_form(s)] = s
        work.append(s)
    while work:
        P = work.pop()
        for Q in _polygon_neighbours(P):
            if Q is None:
                continue
            k = normal_form(Q)
            if k not in found:
                found[k] = Q
                work.append(Q)
                if len(found) > MAX_POLYGONS:
                    raise RuntimeError("polygon closure exceeded its size bound")
    return tuple(found.values())


def _polygon_order(polys) -> list[LatticePolytope]:
    """Fixed order: the four of normalized volume at most 4 first, then by size."""
    diamond = convex_hull([(1, 0), (0, 1), (-1, 0), (0, -1)], 2)

    def rank(P):
        nv = P.normalized_volume
        if nv == 3:
            special = 0
        elif nv == 4 and are_isomorphic(P, diamond):
            special = 1
        elif nv == 4 and len(P.vertices) == 4:
            special = 2
        elif nv == 4:
            special = 3
        else:
            special = 4
        return special, nv, len(P.vertices), normal_form(P)

    return sorted(polys, key=rank)


def classify_reflexive_polygons() -> list[LatticePolytope]:
    """All reflexive polygons up to isomorphism, centred at the origin.

    Found by closing two seeds under duality, vertex deletion and vertex
    addition inside a small box.  The order fixes the names ``Delta_1`` ...
    """
    return _polygon_order(_polygon_classes())


# -- the two routes ---------------------------------------------------------

def _check_dim(n: int):
    if not 2 <= n <= MAX_DIM:
        raise PolytopeError(f"dimension must lie in 2..{MAX_DIM}")


@lru_cache(maxsize=None)
def _polygon_ids() -> tuple[tuple[str, LatticePolytope], ...]:
    return tuple((f"Delta_{i + 1}", P) for i, P in enumerate(classify_reflexive_polygons()))


@lru_cache(maxsize=None)
def route_cayley(n: int) -> dict[NormalFormKey, tuple[LatticePolytope, tuple]]:
    """Non-pyramids of dimension ``n`` from Cayley polytopes.

    Returns:
        Map from normal form to a representative and its Cayley descriptions
        ``(polygon id, summand vertex lists)``.
    """
    _check_dim(n)
    out: dict[NormalFormKey, tuple[LatticePolytope, list]] = {}
    if n == 2:
        for pid, P in _polygon_ids():
            out[normal_form(P)] = (P, [])
        return {k: (P, tuple(d)) for k, (P, d) in out.items()}
    for pid, base in _polygon_ids():
        for dec in minkowski_decompositions(base):
            if dec.r + 1 != n:
                continue
            C = cayley(dec.summands)
            if is_pyramid(C):
                continue
            k = normal_form(C)
            desc = (pid, tuple(S.vertices for S in dec.summands))
            out.setdefault(k, (C, []))[1].append(desc)
    if n == 3:
        S = two_s3()
        out.setdefault(normal_form(S), (S, []))
    return {k: (P, tuple(d)) for k, (P, d) in out.items()}


@lru_cache(maxsize=None)
def route_deletion(n: int) -> dict[NormalFormKey, LatticePolytope]:
    """Non-pyramids of dimension ``n`` reached by deletion from maximal polytopes.

    The maximal polytopes are the duals of the minimal Cayley-route entries of
    normalized volume at most 4.
    """
    _check_dim(n)
    seeds = [P for P, _ in route_cayley(n).values()
             if P.normalized_volume <= 4 and is_minimal(P)]
    found: dict[NormalFormKey, LatticePolytope] = {}
    work = []
    for P in seeds:
        D = dual(P)
        k = normal_form(D)
        if k not in found:
            found[k] = D
            work.append(D)
    while work:
        P = work.pop()
        for j in deletable_vertices(P, check_duality=False):
            Q = delete_vertex(P, j)
            if is_pyramid(Q):
                continue
            k = normal_form(Q)
            if k not in found:
                found[k] = Q
                work.append(Q)
    return found


class RouteDisagreement(RuntimeError):
    pass


def _pyramid_id(base_id: str, folds: int) -> str:
    return f"Pi({base_id})" if folds == 1 else f"Pi^{folds}({base_id})"


def _make_entry(name: str, P: LatticePolytope, dual_id: str, folds: int,
                base_id: str | None, descs: tuple, picard: bool) -> CatalogEntry:
    hs = h_star(P)
    minimal = is_minimal(P)
    maximal = is_minimal(dual(P))
    return CatalogEntry(
        id=name, dim=P.dim, key=normal_form(P), vertices=P.vertices,
        nv=hs.normalized_volume, hstar=hs.hstar, f_vector=P.f_vector, dual_id=dual_id,
        pyramid_folds=folds, pyramid_base_id=base_id, cayley=descs,
        minimal=minimal, maximal=maximal,
        picard_rank=dual(P).normalized_volume - 1 if picard else None, polytope=P)


def _canonical(P: LatticePolytope) -> LatticePolytope:
    return convex_hull(canonical_vertices(P), P.dim)


@lru_cache(maxsize=None)
def _non_pyramid_entries(n: int, route: str = "both") -> tuple[tuple[CatalogEntry, ...], dict]:
    a = route_cayley(n) if route in ("cayley", "both") else None
    b = route_deletion(n) if route in ("deletion", "both") and n > 2 else None
    if n == 2:
        b = {k: P for k, (P, _) in route_cayley(2).items()} if route != "cayley" else None
    if a is not None and b is not None and set(a) != set(b):
        diff = sorted(k.digest for k in set(a) ^ set(b))
        raise RouteDisagreement(f"routes disagree in dimension {n}: {diff}")
    keys = list(a) if a is not None else list(b)
    provenance = {}
    reps = {}
    for k in keys:
        P = a[k][0] if a is not None else b[k]
        reps[k] = _canonical(P)
        provenance[k] = route
    if n == 2:
        names = {normal_form(P): pid for pid, P in _polygon_ids()}
    else:
        names = _assign_names(reps)
    duals = {k: normal_form(dual(P)) for k, P in reps.items()}
    entries = []
    for k in keys:
        descs = a[k][1] if a is not None else ()
        entries.append(_make_entry(names[k], reps[k], names[duals[k]], 0, None, descs, True))
    entries.sort(key=_entry_order)
    prov = {names[k]: v for k, v in provenance.items()}
    return tuple(entries), prov


def _entry_order(e: CatalogEntry):
    head, _, num = e.id.partition("_")
    return (e.pyramid_folds, head, int(num) if num.isdigit() else 0, e.id)


def _assign_names(reps: dict[NormalFormKey, LatticePolytope]) -> dict[NormalFormKey, str]:
    by_sig = {}
    for name in REFERENCE_NAMES:
        sig = _reference_signature(name)
        if sig in by_sig:
            raise RuntimeError(f"reference signatures collide: {name}, {by_sig[sig]}")
        by_sig[sig] = name
    names = {}
    for k, P in reps.items():
        D = dual(P)
        sig = (P.normalized_volume, P.f_vector, D.normalized_volume, normal_form(D) == k)
        name = by_sig.get(sig)
        if name is None:
            name = f"X{P.dim}_{len(names) + 1}"
        if name in names.values():
            raise RuntimeError(f"two classes share the signature of {name}")
        names[k] = name
    return names


@lru_cache(maxsize=None)
def _all_entries(n: int, route: str = "both") -> tuple[tuple[CatalogEntry, ...], dict[int, tuple[int, int]], dict]:
    _check_dim(n)
    own, prov = _non_pyramid_entries(n, route)
    if n == 2:
        return own, {2: (len(own), len(own))}, prov
    lower, counts, lower_prov = _all_entries(n - 1, route)
    pyr = []
    for e in lower:
        folds = e.pyramid_folds + 1
        base = e.pyramid_base_id or e.id
        pyr.append(_pyramid_entry(e, base, folds))
    entries = own + tuple(sorted(pyr, key=_entry_order))
    counts = dict(counts)
    counts[n] = (len(entries), len(own))
    return entries, counts, prov


def _pyramid_entry(e: CatalogEntry, base: str, folds: int) -> CatalogEntry:
    # h*, volume and (non)deletability of vertices carry over from the base;
    # the dual of a pyramid is the pyramid over the dual
    P = pyramid(e.polytope)
    f = (1,) + tuple(a + b for a, b in zip(e.f_vector[1:], e.f_vector)) + (1,)
    return CatalogEntry(
        id=_pyramid_id(base, folds), dim=P.dim, key=normal_form(P), vertices=P.vertices,
        nv=e.nv, hstar=e.hstar + (0,), f_vector=f,
        dual_id=_pyramid_id(_dual_base_id(e), folds), pyramid_folds=folds,
        pyramid_base_id=base, cayley=(), minimal=e.minimal, maximal=e.maximal,
        picard_rank=None, polytope=P)


def _dual_base_id(e: CatalogEntry) -> str:
    if e.pyramid_folds == 0:
        return e.dual_id
    inner = e.dual_id
    return inner[inner.index("(") + 1:-1]


def classify_degree2(n: int, route: str = "both") -> ClassificationResult:
    """Gorenstein polytopes of degree 2 and dimension ``n`` up to isomorphism.

    Args:
        n: Dimension, between 2 and 8.
        route: ``"cayley"``, ``"deletion"`` or ``"both"``.  With ``"both"``
            the two non-pyramid sets must agree.

    Raises:
        RouteDisagreement: If the routes produce different sets.
    """
    if route not in ("cayley", "deletion", "both"):
        raise PolytopeError(f"unknown route {route!r}")
    entries, counts, prov = _all_entries(n, route)
    return ClassificationResult(n, entries, counts, prov)


# -- catalog ----------------------------------------------------------------

@lru_cache(maxsize=1)
def catalog() -> dict[str, CatalogEntry]:
    """Every non-pyramid entry in dimensions 2 to 5, by id."""
    out = {}
    for n in range(2, 6):
        for e in _non_pyramid_entries(n)[0]:
            out[e.id] = e
    return out


def catalog_entry(name: str) -> CatalogEntry:
    """Look up an entry by id, including pyramid ids such as ``Pi^2(P_3)``."""
    cat = catalog()
    if name in cat:
        return cat[name]
    if name.startswith("Pi"):
        inner = name[name.index("(") + 1:-1] if "(" in name else ""
        if inner in cat:
            head = name[: name.index("(")]
            folds = int(head[3:]) if head.startswith("Pi^") else 1
            n = cat[inner].dim + folds
            if n <= MAX_DIM:
                for e in _all_entries(n)[0]:
                    if e.id == name:
                        return e
    raise KeyError(name)


# -- identities -------------------------------------------------------------

def _require_degree2_dim3(P: LatticePolytope):
    if P.dim != 3 or not is_gorenstein_degree2(P):
        raise PolytopeError("needs a 3-dimensional Gorenstein polytope of degree 2")


def verify_twelve(P: LatticePolytope) -> int:
    """Sum over edges ``E`` of ``nv(E) * nv(E*)``."""
    _require_degree2_dim3(P)
    cert = dual_gorenstein(P)
    D = cert.dual
    return sum(P.face_volume(E) * D.face_volume(cert.face_duality[E]) for E in P.faces(1))


def verify_fourteen(P: LatticePolytope) -> int:
    """``|P ∩ M| + |P* ∩ N| + sum over edges of Int(E) * Int(E*)``.

    Raises:
        PolytopeError: If ``P`` is a pyramid.
    """
    _require_degree2_dim3(P)
    if is_pyramid(P):
        raise PolytopeError("the lattice-point identity needs a non-pyramid")
    cert = dual_gorenstein(P)
    D = cert.dual
    edges = sum(P.face_interior_count(E) * D.face_interior_count(cert.face_duality[E])
                for E in P.faces(1))
    return len(P.lattice_points) + len(D.lattice_points) + edges


def picard_rank(P: LatticePolytope) -> int:
    """``nv(P*) - 1`` for a non-pyramid Gorenstein polytope of degree 2.

    Raises:
        PolytopeError: For pyramids or polytopes that are not Gorenstein of degree 2.
    """
    if not is_gorenstein_degree2(P):
        raise PolytopeError("needs a Gorenstein polytope of degree 2")
    if is_pyramid(P):
        raise PolytopeError("rank formula does not apply to pyramids")
    return dual(P).normalized_volume - 1


__all__ = [
    "CatalogEntry", "ClassificationResult", "REFERENCE_NAMES", "RouteDisagreement",
    "catalog", "catalog_entry", "classify_degree2", "classify_reflexive_polygons",
    "picard_rank", "route_cayley", "route_deletion", "verify_fourteen", "verify_twelve",
]
