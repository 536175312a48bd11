"""Detectors for vertices essential to near-optimal solutions.

Each detector answers the same two-sided contract for a problem with
coefficient c, given (G, k):

  G1  if opt <= k, the returned set lies inside some optimal solution;
  G2  if opt == k, the returned set contains every vertex that belongs
      to all solutions of size at most c * opt.

Detection reduces to per-vertex thresholds:

  FVS / DFVS / OCT   flower number at v (vertex-disjoint-but-for-v
                     packing of forbidden cycles) exceeds k;
  DOCT               a minimum separator between the two parity copies
                     of v in the label-extended digraph has size 2k+1;
  VC                 v takes value 1 in an optimal half-integral
                     covering relaxation;
  CVD                the avoiding LP pinning x_v = 0 costs more than k.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .flows import SeparatorResult, min_vertex_separator
from .graphs import Digraph, Graph, delete_vertices
from .lp import solve_v_avoiding_lp
from .matching import min_vertex_cover_bipartite
from .problems import PROBLEMS
from .tpaths import max_T_path_packing, max_odd_T_path_packing


@dataclass(frozen=True)
class FlowerCertificate:
    """Forbidden cycles pairwise intersecting exactly in the center."""

    center: int
    petals: tuple[tuple[int, ...], ...]  # each starts at the center


@dataclass(frozen=True)
class DoctCertificate:
    """Separator evidence between the parity copies of a vertex; labels
    are (vertex, parity) pairs of the label-extended digraph."""

    vertex: int
    separator: frozenset[tuple[int, int]]
    paths: tuple[tuple[tuple[int, int], ...], ...]


@dataclass(frozen=True)
class DetectionResult:
    problem: str
    k: int
    vertices: frozenset[int]
    certificates: dict[int, object] = field(default_factory=dict)
    extra: dict | None = None

    @property
    def c(self) -> int:
        return PROBLEMS[self.problem].c


def _shorten_cycle(g: Graph, cycle: list[int], odd: bool) -> tuple[int, ...]:
    """Shorten a cycle through cycle[0] along chords, keeping the start
    vertex and, when odd is set, odd length.  Without the parity
    constraint the result is chordless; with it a chord may survive when
    the start-side part of every split is even."""
    improved = True
    while improved:
        improved = False
        size = len(cycle)
        for i in range(size):
            for j in range(i + 2, size):
                if i == 0 and j == size - 1:
                    continue
                if g.has_edge(cycle[i], cycle[j]):
                    cand = cycle[:i + 1] + cycle[j:]
                    if not odd or len(cand) % 2 == 1:
                        cycle = cand
                        improved = True
                        break
            if improved:
                break
    return tuple(cycle)


def _shorten_dicycle(d: Digraph, cycle: list[int]) -> tuple[int, ...]:
    """Shorten a directed cycle through cycle[0] along forward arcs."""
    improved = True
    while improved:
        improved = False
        size = len(cycle)
        for i in range(size):
            for j in range(i + 2, size):
                if i == 0 and j == size - 1:
                    continue
                if d.has_arc(cycle[i], cycle[j]):
                    cycle = cycle[:i + 1] + cycle[j:]
                    improved = True
                    break
            if improved:
                break
    return tuple(cycle)


def flower_number_fvs(g: Graph, v: int) -> tuple[int, FlowerCertificate]:
    """Maximum number of cycles pairwise meeting only at v: T-path packing
    in G - v with the neighbors of v as terminals."""
    g2, remap = delete_vertices(g, [v])
    inv = {new: old for old, new in remap.items()}
    terminals = {remap[w] for w in g.neighbors(v)}
    packing = max_T_path_packing(g2, terminals)
    petals = tuple(
        _shorten_cycle(g, [v] + [inv[x] for x in p], odd=False)
        for p in packing.paths
    )
    return len(packing), FlowerCertificate(v, petals)


def flower_number_oct(g: Graph, v: int) -> tuple[int, FlowerCertificate]:
    """Maximum number of odd cycles pairwise meeting only at v: odd T-path
    packing in G - v closed through v."""
    g2, remap = delete_vertices(g, [v])
    inv = {new: old for old, new in remap.items()}
    terminals = {remap[w] for w in g.neighbors(v)}
    count, packing = max_odd_T_path_packing(g2, terminals)
    petals = tuple(
        _shorten_cycle(g, [v] + [inv[x] for x in p], odd=True)
        for p in packing.paths
    )
    return count, FlowerCertificate(v, petals)


def flower_number_dfvs(d: Digraph, v: int) -> tuple[int, FlowerCertificate]:
    """Maximum number of directed cycles pairwise meeting only at v:
    split v into an out-part (fresh vertex) and an in-part and take the
    Menger system between them."""
    out_part = d.n  # v keeps its id and plays the in-part
    arcs = []
    for u, w in d.arcs():
        if u == v:
            arcs.append((out_part, w))
        elif w == v:
            arcs.append((u, v))
        else:
            arcs.append((u, w))
    split = Digraph(d.n + 1, arcs)
    res = min_vertex_separator(split, out_part, v)
    petals = tuple(
        _shorten_dicycle(d, [v] + list(p[1:-1])) for p in res.paths
    )
    return len(res.paths), FlowerCertificate(v, petals)


_FLOWER_FNS: dict[str, Callable] = {
    "fvs": flower_number_fvs,
    "oct": flower_number_oct,
    "dfvs": flower_number_dfvs,
}


def vc_lp_halfintegral(g: Graph) -> list[Fraction]:
    """An optimal half-integral solution of the edge-covering relaxation,
    via a minimum vertex cover of the bipartite double cover."""
    edges = []
    for u, w in g.edges():
        edges.append((u, g.n + w))
        edges.append((w, g.n + u))
    double = Graph(2 * g.n, edges)
    coloring = [0] * g.n + [1] * g.n
    cover = min_vertex_cover_bipartite(double, coloring)
    half = Fraction(1, 2)
    return [
        half * ((v in cover) + (g.n + v in cover)) for v in range(g.n)
    ]


def label_extended(d: Digraph) -> Digraph:
    """Parity-split double cover: v maps to 2v (even copy) and 2v+1 (odd
    copy); an arc (u, w) induces (2u, 2w+1) and (2u+1, 2w)."""
    arcs = []
    for u, w in d.arcs():
        arcs.append((2 * u, 2 * w + 1))
        arcs.append((2 * u + 1, 2 * w))
    return Digraph(2 * d.n, arcs)


def doct_separator(d: Digraph, v: int, ext: Digraph | None = None) -> SeparatorResult:
    """Minimum separator between the copies of v in the label-extended
    digraph; its size bounds packings of odd closed walks through v."""
    if ext is None:
        ext = label_extended(d)
    return min_vertex_separator(ext, 2 * v, 2 * v + 1)


def _doct_certificate(v: int, res: SeparatorResult) -> DoctCertificate:
    def lab(x: int) -> tuple[int, int]:
        return (x // 2, x % 2)

    return DoctCertificate(
        v,
        frozenset(lab(x) for x in res.separator),
        tuple(tuple(lab(x) for x in p) for p in res.paths),
    )


def detector_factory(problem: str, g: Graph | Digraph) -> Callable[[int], DetectionResult]:
    """Precompute the per-vertex thresholds once; the returned closure
    evaluates the detector for any budget k in O(n)."""
    prob = PROBLEMS[problem]
    if isinstance(g, Digraph) != prob.directed:
        kind = "directed" if prob.directed else "undirected"
        raise TypeError(f"{problem} expects a {kind} graph")
    if problem in _FLOWER_FNS:
        fn = _FLOWER_FNS[problem]
        flowers = [fn(g, v) for v in range(g.n)]

        def detect_flower(k: int) -> DetectionResult:
            chosen = {v for v in range(g.n) if flowers[v][0] > k}
            certs = {v: flowers[v][1] for v in chosen}
            return DetectionResult(problem, k, frozenset(chosen), certs)

        return detect_flower
    if problem == "doct":
        ext = label_extended(g)
        seps = [doct_separator(g, v, ext) for v in range(g.n)]

        def detect_doct_k(k: int) -> DetectionResult:
            chosen = {v for v in range(g.n) if seps[v].size >= 2 * k + 1}
            certs = {v: _doct_certificate(v, seps[v]) for v in chosen}
            return DetectionResult(problem, k, frozenset(chosen), certs)

        return detect_doct_k
    if problem == "vc":
        x = vc_lp_halfintegral(g)
        fixed = frozenset(v for v in range(g.n) if x[v] == 1)

        def detect_vc_k(k: int) -> DetectionResult:
            certs = {v: Fraction(1) for v in fixed}
            return DetectionResult(
                problem, k, fixed, certs, extra={"assignment": tuple(x)}
            )

        return detect_vc_k
    if problem == "cvd":
        states = []
        pool: list[tuple[int, ...]] = []
        for v in range(g.n):
            state = solve_v_avoiding_lp(g, v, pool)
            # Carry discovered holes forward; they are valid cuts for
            # every pinned vertex and save oracle rounds.
            pool = list(state.pool)
            states.append(state)

        def detect_cvd_k(k: int) -> DetectionResult:
            chosen = {v for v in range(g.n) if states[v].cost > k}
            certs: dict[int, object] = {v: states[v] for v in chosen}
            return DetectionResult(problem, k, frozenset(chosen), certs)

        return detect_cvd_k
    raise KeyError(problem)


def detect(problem: str, g: Graph | Digraph, k: int) -> DetectionResult:
    """Run the problem's detector on (g, k)."""
    if k < 0:
        raise ValueError("budget must be non-negative")
    if k >= g.n:
        # Thresholds cannot exceed the vertex count, so the answer is
        # empty; skip the kernel work.
        return DetectionResult(problem, k, frozenset())
    return detector_factory(problem, g)(k)


def detect_by_flower(problem: str, g: Graph | Digraph, k: int) -> DetectionResult:
    """Flower-threshold detection; problem must be fvs, dfvs, or oct."""
    if problem not in _FLOWER_FNS:
        raise ValueError(f"{problem!r} has no flower detector")
    return detect(problem, g, k)


def detect_vc(g: Graph, k: int) -> DetectionResult:
    return detect("vc", g, k)


def detect_doct(d: Digraph, k: int) -> DetectionResult:
    return detect("doct", d, k)


def detect_cvd(g: Graph, k: int) -> DetectionResult:
    return detect("cvd", g, k)


def verify_flower_certificate(
    problem: str, g: Graph | Digraph, cert: FlowerCertificate
) -> None:
    """Structural check: every petal is a forbidden cycle through the
    center and petals pairwise share exactly the center."""
    directed = PROBLEMS[problem].directed
    for petal in cert.petals:
        if petal[0] != cert.center or len(set(petal)) != len(petal):
            raise AssertionError(f"bad petal {petal}")
        size = len(petal)
        if directed:
            if size < 2:
                raise AssertionError(f"petal too short: {petal}")
            for i in range(size):
                if not g.has_arc(petal[i], petal[(i + 1) % size]):
                    raise AssertionError(f"petal {petal} misses an arc")
        else:
            if size < 3:
                raise AssertionError(f"petal too short: {petal}")
            for i in range(size):
                if not g.has_edge(petal[i], petal[(i + 1) % size]):
                    raise AssertionError(f"petal {petal} misses an edge")
        if problem == "oct" and size % 2 == 0:
            raise AssertionError(f"even petal in an odd-cycle flower: {petal}")
    for i in range(len(cert.petals)):
        for j in range(i + 1, len(cert.petals)):
            common = set(cert.petals[i]) & set(cert.petals[j])
            if common != {cert.center}:
                raise AssertionError("petals overlap outside the center")
