"""Theorem checks over graph sources, invariant records, and counterexample hunts."""

from __future__ import annotations

import operator
import random
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from . import families
from .canon import DEFAULT_CANON_CAP, canonical_key
from .forcing import is_zero_forcing_set, zero_forcing_number, zero_forcing_unicyclic_fast
from .genpos import gp_block_fast, gp_number, gp_tree_fast, is_general_position_set
from .graph import (
    CapExceeded,
    Graph,
    build_graph,
    classify,
    components,
    induced_mask,
    leaves,
    simplicial_vertices,
)
from .graph6 import decode_graph6, encode_graph6
from .pathcover import check_path_partition, is_partial_sun, path_cover_number, path_cover_via_trim, trimmed_form


def graph_id(G: Graph) -> str:
    if G.n <= DEFAULT_CANON_CAP:
        return canonical_key(G).hex()
    return "g6:" + encode_graph6(G)


# ---------------------------------------------------------------------------
# invariant records


@dataclass
class InvariantRecord:
    id: str
    graph6: str
    n: int
    m: int
    leaves: int
    flags: dict
    Z: int | None = None
    Z_witness: list | None = None
    gp: int | None = None
    gp_witness: list | None = None
    P: int | None = None
    P_partition: list | None = None
    trim: dict | None = None
    seconds: dict = field(default_factory=dict)
    refused: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def trim_summary(G: Graph) -> dict:
    tr = trimmed_form(G)
    out = {"n1": tr.n1, "n2": tr.n2, "n3": tr.n3, "empty": tr.empty, "U": None, "segments": None}
    if not tr.empty:
        sun = is_partial_sun(tr.graph)
        if sun is not None:
            out["U"] = len(sun.U)
            out["segments"] = sun.segment_sizes
    return out


@lru_cache(maxsize=1)
def fast_paths_verified() -> bool:
    """Cross-check every closed-form shortcut against the exact solvers on small classes.

    Shortcuts are only used by :func:`invariant_record` when this passes.
    """
    for n in range(2, 9):
        for T in families.enumerate_trees(n):
            if gp_tree_fast(T) != gp_number(T).number:
                return False
    for n in range(3, 8):
        for G in families.enumerate_unicyclic(n):
            if zero_forcing_unicyclic_fast(G) != zero_forcing_number(G).number:
                return False
    for n in range(1, 7):
        for G in families.enumerate_block_graphs(n):
            if gp_block_fast(G) != gp_number(G).number:
                return False
    return True


def invariant_record(G: Graph, cap: int | None = None, fast: bool = False) -> InvariantRecord:
    """Exact ``Z``, ``gp`` and ``P`` with witnesses under ``G.labels``.

    With ``fast`` (and only after :func:`fast_paths_verified`), trees and block
    graphs get ``gp`` from the leaf / simplicial count and unicyclic graphs get
    ``Z`` from trimming; those fields then carry no witness.  ``gp`` of a
    disconnected graph is the sum over its components.
    """
    flags = classify(G)
    rec = InvariantRecord(
        id=graph_id(G),
        graph6=encode_graph6(G),
        n=G.n,
        m=G.m,
        leaves=len(leaves(G)),
        flags=flags.as_dict(),
    )
    use_fast = fast and fast_paths_verified()

    t = time.perf_counter()
    try:
        if use_fast and flags.unicyclic:
            rec.Z = zero_forcing_unicyclic_fast(G)
        else:
            z = zero_forcing_number(G, cap)
            rec.Z, rec.Z_witness = z.number, G.label_of(z.witness)
    except CapExceeded:
        rec.refused.append("Z")
    rec.seconds["Z"] = time.perf_counter() - t

    t = time.perf_counter()
    try:
        if use_fast and flags.tree and G.n >= 2:
            rec.gp = gp_tree_fast(G)
        elif use_fast and flags.block_graph:
            rec.gp = gp_block_fast(G)
        else:
            g = gp_number(G, cap, allow_disconnected=True)
            rec.gp, rec.gp_witness = g.number, G.label_of(g.witness)
    except CapExceeded:
        rec.refused.append("gp")
    rec.seconds["gp"] = time.perf_counter() - t

    t = time.perf_counter()
    try:
        p = path_cover_number(G, cap)
        rec.P = p.number
        rec.P_partition = [[G.labels[v] for v in part] for part in p.partition]
    except CapExceeded:
        rec.refused.append("P")
    rec.seconds["P"] = time.perf_counter() - t

    if flags.unicyclic:
        rec.trim = trim_summary(G)
    return rec


# ---------------------------------------------------------------------------
# graph sources


@dataclass
class Source:
    name: str
    description: str
    factory: Callable[[], Iterable[Graph]]

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.factory())


def tree_source(n_min: int = 2, n_max: int = 10) -> Source:
    return Source(
        "trees",
        f"all trees {n_min}<=n<={n_max} up to isomorphism",
        lambda: (g for n in range(n_min, n_max + 1) for g in families.enumerate_trees(n)),
    )


def unicyclic_source(n_min: int = 3, n_max: int = 9) -> Source:
    return Source(
        "unicyclic",
        f"all connected unicyclic graphs {n_min}<=n<={n_max} up to isomorphism",
        lambda: (g for n in range(n_min, n_max + 1) for g in families.enumerate_unicyclic(n)),
    )


def connected_source(n_min: int = 1, n_max: int = 7) -> Source:
    return Source(
        "connected",
        f"all connected graphs {n_min}<=n<={n_max} up to isomorphism",
        lambda: (g for n in range(n_min, n_max + 1) for g in families.enumerate_connected(n)),
    )


def bicyclic_source(n_min: int = 4, n_max: int = 8) -> Source:
    return Source(
        "bicyclic",
        f"all connected bicyclic graphs {n_min}<=n<={n_max} up to isomorphism",
        lambda: (g for n in range(n_min, n_max + 1) for g in families.enumerate_bicyclic(n)),
    )


def block_source(n_min: int = 2, n_max: int = 8) -> Source:
    return Source(
        "block",
        f"all connected block graphs {n_min}<=n<={n_max}, filtered from the connected enumeration",
        lambda: (g for n in range(n_min, n_max + 1) for g in families.enumerate_block_graphs(n)),
    )


def random_block_source(count: int = 500, max_n: int = 15, seed: int = 0) -> Source:
    def make():
        rng = random.Random(seed)
        for _ in range(count):
            yield families.random_block_graph(rng.randint(1, 10), rng.randint(2, 5), rng, max_n=max_n)

    return Source("random_block", f"{count} random block graphs n<={max_n}, seed {seed}", make)


def random_quasi_tree_source(mode: str, count: int = 500, max_n: int = 14, seed: int = 0) -> Source:
    def make():
        rng = random.Random(seed)
        min_n = 3 if mode == families.NO_PENDANTS else 4
        for _ in range(count):
            yield families.random_quasi_tree(rng.randint(min_n, max_n), mode, rng)

    return Source(f"random_quasi_tree:{mode}", f"{count} random quasi-trees ({mode}) n<={max_n}, seed {seed}", make)


def random_forest_source(count: int = 500, max_n: int = 14, max_components: int = 4, seed: int = 0) -> Source:
    def make():
        rng = random.Random(seed)
        for _ in range(count):
            yield families.random_forest(rng, max_n, max_components)

    return Source(
        "random_forest",
        f"{count} random forests with <= {max_components} non-trivial components, n<={max_n}, seed {seed}",
        make,
    )


def chain(name: str, *sources: Source) -> Source:
    return Source(
        name,
        " + ".join(s.description for s in sources),
        lambda: (g for s in sources for g in s),
    )


def graph6_source(path: str) -> Source:
    def make():
        with open(path) as fh:
            for line in fh:
                if line.strip():
                    yield decode_graph6(line)

    return Source("graph6", f"graph6 file {path}", make)


def list_source(name: str, graphs: Iterable[Graph]) -> Source:
    graphs = list(graphs)
    return Source(name, f"{len(graphs)} given graphs", lambda: graphs)


# ---------------------------------------------------------------------------
# theorem checks
#
# A check returns None when the theorem does not apply to the graph, and
# otherwise (holds, values).


def _check_t1(G, cap=None):
    if not (G.n >= 2 and classify(G).tree):
        return None
    Z, gp = zero_forcing_number(G, cap).number, gp_number(G, cap).number
    return gp >= Z + 1, {"Z": Z, "gp": gp}


def _check_t2(G, cap=None):
    if not classify(G).unicyclic:
        return None
    Z, gp = zero_forcing_number(G, cap).number, gp_number(G, cap).number
    return gp >= Z, {"Z": Z, "gp": gp}


def _check_t3(G, cap=None):
    if not (G.n >= 2 and classify(G).block_graph):
        return None
    Z, gp = zero_forcing_number(G, cap).number, gp_number(G, cap).number
    return gp >= Z + 1, {"Z": Z, "gp": gp}


def _check_t4(G, cap=None):
    flags = classify(G)
    if not flags.quasi_tree:
        return None
    no_pendants = not leaves(G)
    x = families.quasi_vertex_without_deg2_neighbor(G)
    if not no_pendants and x is None:
        return None
    Z, gp = zero_forcing_number(G, cap).number, gp_number(G, cap).number
    return gp >= Z, {"Z": Z, "gp": gp, "no_pendants": no_pendants, "quasi_vertex": x}


def _check_t5(G, cap=None):
    flags = classify(G)
    if not flags.forest:
        return None
    comps = components(G)
    trees = [c for c in comps if c.bit_count() >= 2]
    k = len(trees)
    if k == 0:
        return None
    s = len(comps) - k
    Z = zero_forcing_number(G, cap).number
    gp = gp_number(G, cap, allow_disconnected=True).number
    parts = [induced_mask(G, c) for c in trees]
    z_sum = sum(zero_forcing_number(T, cap).number for T in parts) + s
    gp_sum = sum(gp_number(T, cap).number for T in parts) + s
    ok = gp >= Z + k and Z == z_sum and gp == gp_sum
    return ok, {"Z": Z, "gp": gp, "k": k, "isolated": s, "Z_component_sum": z_sum, "gp_component_sum": gp_sum}


def _check_t6(G, cap=None):
    if not classify(G).unicyclic:
        return None
    Z = zero_forcing_number(G, cap).number
    P = path_cover_number(G, cap).number
    P_trim = path_cover_via_trim(G)
    return Z == P == P_trim, {"Z": Z, "P": P, "P_trim": P_trim}


def _check_t7(G, cap=None):
    if not (G.n >= 2 and classify(G).tree):
        return None
    gp, ell = gp_number(G, cap).number, len(leaves(G))
    return gp == ell, {"gp": gp, "leaves": ell}


def _check_t8(G, cap=None):
    if not (G.n >= 2 and classify(G).tree):
        return None
    Z, ell = zero_forcing_number(G, cap).number, len(leaves(G))
    return Z <= ell - 1, {"Z": Z, "leaves": ell}


def _check_t9(G, cap=None):
    if not classify(G).block_graph:
        return None
    gp, S = gp_number(G, cap).number, len(simplicial_vertices(G))
    return gp == S, {"gp": gp, "simplicial": S}


def _check_t10a(G, cap=None):
    if not classify(G).unicyclic:
        return None
    tr = trimmed_form(G)
    sun = None if tr.empty else is_partial_sun(tr.graph)
    if sun is None:
        return None
    gp = gp_number(G, cap).number
    bound = max(2, len(sun.U)) + tr.n2 - tr.n1
    return gp >= bound, {"gp": gp, "bound": bound, "U": len(sun.U), "n1": tr.n1, "n2": tr.n2}


def _check_t10b(G, cap=None):
    if not classify(G).unicyclic:
        return None
    tr = trimmed_form(G)
    if not tr.empty:
        return None
    ell = len(leaves(G))
    return tr.n2 - tr.n1 <= ell, {"n1": tr.n1, "n2": tr.n2, "leaves": ell}


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    check: Callable[..., tuple | None]
    default_source: Callable[[], Source]


THEOREMS: dict[str, Theorem] = {
    t.id: t
    for t in [
        Theorem("T1", "trees n>=2: gp >= Z + 1", _check_t1, tree_source),
        Theorem("T2", "connected unicyclic: gp >= Z", _check_t2, unicyclic_source),
        Theorem(
            "T3",
            "block graphs n>=2: gp >= Z + 1",
            _check_t3,
            lambda: chain("block+random_block", block_source(), random_block_source()),
        ),
        Theorem(
            "T4",
            "quasi-trees without pendent vertices, or with a quasi-vertex having no degree-2 neighbour: gp >= Z",
            _check_t4,
            lambda: chain(
                "random_quasi_tree",
                random_quasi_tree_source(families.NO_PENDANTS),
                random_quasi_tree_source(families.NO_DEG2_NEIGHBORS, seed=1),
            ),
        ),
        Theorem(
            "T5",
            "forests with k>=1 non-trivial components: gp >= Z + k, with component-sum identities",
            _check_t5,
            random_forest_source,
        ),
        Theorem("T6", "connected unicyclic: Z = P = P via trimming", _check_t6, unicyclic_source),
        Theorem("T7", "trees n>=2: gp = number of leaves", _check_t7, tree_source),
        Theorem("T8", "trees n>=2: Z <= leaves - 1", _check_t8, tree_source),
        Theorem(
            "T9",
            "block graphs: gp = number of simplicial vertices",
            _check_t9,
            lambda: chain("block+random_block", block_source(1, 8), random_block_source()),
        ),
        Theorem(
            "T10a",
            "unicyclic with partial-sun trim: gp >= max(2, |U|) + n2 - n1",
            _check_t10a,
            unicyclic_source,
        ),
        Theorem("T10b", "unicyclic with empty trim: n2 - n1 <= leaves", _check_t10b, unicyclic_source),
    ]
}


@dataclass
class TheoremReport:
    theorem: str
    statement: str
    source: str
    checked: int = 0
    not_applicable: int = 0
    unchecked: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if self.violations:
            return "fail"
        return "pass" if not self.unchecked else "incomplete"

    def to_dict(self) -> dict:
        out = asdict(self)
        out["verdict"] = self.verdict
        return out


def _run_check(args):
    theorem_id, g6, cap = args
    G = decode_graph6(g6)
    try:
        return g6, THEOREMS[theorem_id].check(G, cap), None
    except CapExceeded as exc:
        return g6, None, str(exc)


def _map(fn, items, workers: int):
    if workers <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, items, chunksize=16)


def verify_theorem(theorem_id: str, source: Source | None = None, workers: int = 1, cap: int | None = None) -> TheoremReport:
    """Check one theorem on every graph of ``source`` (its default source if omitted).

    Graphs travel to workers as graph6, and every violation is recomputed
    from its graph6 string before it is reported.
    """
    theorem = THEOREMS[theorem_id]
    source = source if source is not None else theorem.default_source()
    report = TheoremReport(theorem.id, theorem.statement, source.description)
    jobs = ((theorem_id, encode_graph6(G), cap) for G in source)
    for g6, outcome, refused in _map(_run_check, jobs, workers):
        if refused is not None:
            report.unchecked.append({"graph6": g6, "reason": refused})
            continue
        if outcome is None:
            report.not_applicable += 1
            continue
        report.checked += 1
        holds, values = outcome
        if not holds:
            again = theorem.check(decode_graph6(g6), cap)
            if again is not None and not again[0]:
                record = invariant_record(decode_graph6(g6), cap).to_dict()
                report.violations.append({"graph6": g6, "values": values, "record": record})
    return report


# ---------------------------------------------------------------------------
# hunting


_TERM = r"(Z|gp|P|l|n|m)\s*(?:([+-])\s*(\d+))?"
_RELATION = re.compile(rf"^\s*{_TERM}\s*(>=|<=|==|!=|>|<)\s*{_TERM}\s*$")
_OPS = {">": operator.gt, ">=": operator.ge, "<": operator.lt, "<=": operator.le, "==": operator.eq, "!=": operator.ne}


@dataclass(frozen=True)
class Relation:
    text: str
    left: tuple[str, int]
    op: str
    right: tuple[str, int]

    @classmethod
    def parse(cls, text: str) -> "Relation":
        match = _RELATION.match(text)
        if not match:
            raise ValueError(f"cannot parse relation {text!r}; use e.g. 'Z>gp' or 'gp>=Z+1'")
        a, sa, ka, op, b, sb, kb = match.groups()
        off = lambda s, k: 0 if k is None else (int(k) if s == "+" else -int(k))  # noqa: E731
        return cls(text, (a, off(sa, ka)), op, (b, off(sb, kb)))

    @property
    def terms(self) -> set[str]:
        return {self.left[0], self.right[0]}

    def holds(self, values: dict) -> bool:
        lhs = values[self.left[0]] + self.left[1]
        rhs = values[self.right[0]] + self.right[1]
        return _OPS[self.op](lhs, rhs)


HUNT_CLASSES = ("bicyclic", "quasi_tree", "bipartite", "unicyclic", "tree", "any")


def _in_class(G: Graph, cls: str) -> bool:
    flags = classify(G)
    return {
        "bicyclic": flags.bicyclic,
        "quasi_tree": flags.quasi_tree,
        "bipartite": flags.bipartite and flags.connected,
        "unicyclic": flags.unicyclic,
        "tree": flags.tree,
        "any": flags.connected,
    }[cls]


def _exhaustive(cls: str, n: int) -> Iterator[Graph]:
    if cls == "tree":
        return families.enumerate_trees(n)
    if cls == "unicyclic":
        return families.enumerate_unicyclic(n)
    if cls == "bicyclic":
        return families.enumerate_bicyclic(n) if n >= 4 else iter(())
    return (g for g in families.enumerate_connected(n) if _in_class(g, cls))


def random_in_class(cls: str, n: int, rng: random.Random) -> Graph:
    """One random connected graph on ``n`` vertices from ``cls``."""
    if cls == "tree":
        return families.random_tree(n, rng)
    if cls == "unicyclic":
        return families.random_unicyclic(n, rng)
    if cls == "bicyclic":
        return families._add_random_non_edges(families.random_tree(n, rng), 2, rng)
    if cls == "quasi_tree":
        T = families.random_tree(n - 1, rng)
        nbrs = [v for v in range(n - 1) if rng.random() < 0.4] or [rng.randrange(n - 1)]
        return build_graph(n, T.edges() + [(n - 1, v) for v in nbrs])
    if cls == "bipartite":
        T = families.random_tree(n, rng)
        side = [0] * n
        for layer, comp in enumerate(_bfs_order(T)):
            for v in comp:
                side[v] = layer % 2
        extra = [(u, v) for u in range(n) for v in range(u + 1, n) if side[u] != side[v] and not T.has_edge(u, v)]
        chosen = [e for e in extra if rng.random() < 0.2]
        return build_graph(n, T.edges() + chosen)
    return families.random_connected(n, rng, rng.randint(0, n))


def _bfs_order(T: Graph) -> list[list[int]]:
    from .metric import bfs_layers
    from .graph import bits

    return [list(bits(layer)) for layer in bfs_layers(T, 0)]


@dataclass
class HuntHit:
    graph6: str
    n: int
    m: int
    values: dict
    Z_witness: list
    gp_witness: list


@dataclass
class HuntReport:
    cls: str
    relation: str
    n_range: tuple[int, int]
    mode: str
    seed: int | None = None
    budget: int | None = None
    examined: int = 0
    hits: list = field(default_factory=list)
    unchecked: list = field(default_factory=list)

    @property
    def smallest_hit(self) -> HuntHit | None:
        return min(self.hits, key=lambda h: (h.n, h.m, h.graph6), default=None)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["hit_count"] = len(self.hits)
        return out


def _hunt_one(args):
    relation_text, g6, cap = args
    relation = Relation.parse(relation_text)
    G = decode_graph6(g6)
    values = {"n": G.n, "m": G.m, "l": len(leaves(G))}
    try:
        z = zero_forcing_number(G, cap)
        g = gp_number(G, cap)
        values["Z"], values["gp"] = z.number, g.number
        if "P" in relation.terms:
            values["P"] = path_cover_number(G, cap).number
    except CapExceeded as exc:
        return g6, None, str(exc)
    if not relation.holds(values):
        return g6, None, None
    return g6, (values, sorted(z.witness), sorted(g.witness)), None


def hunt(
    cls: str,
    relation: str,
    n_range: tuple[int, int],
    mode: str = "exhaustive",
    seed: int = 0,
    budget: int = 1000,
    workers: int = 1,
    cap: int | None = None,
) -> HuntReport:
    """Collect graphs of ``cls`` with orders in ``n_range`` satisfying ``relation``.

    Every hit is certified: its ``Z`` witness is re-checked as forcing, its
    ``gp`` witness as being in general position, and the relation re-evaluated
    from the stored graph6.  Hits are sorted by order, size and canonical key,
    so results do not depend on worker count.
    """
    if cls not in HUNT_CLASSES:
        raise ValueError(f"unknown class {cls!r}; choose from {HUNT_CLASSES}")
    Relation.parse(relation)
    lo, hi = n_range
    report = HuntReport(cls, relation, (lo, hi), mode, seed if mode == "random" else None, budget if mode == "random" else None)
    if mode == "exhaustive":
        graphs = (g for n in range(lo, hi + 1) for g in _exhaustive(cls, n))
    elif mode == "random":
        rng = random.Random(seed)
        graphs = (random_in_class(cls, rng.randint(lo, hi), rng) for _ in range(budget))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    hits = []
    for g6, found, refused in _map(_hunt_one, ((relation, encode_graph6(g), cap) for g in graphs), workers):
        report.examined += 1
        if refused:
            report.unchecked.append({"graph6": g6, "reason": refused})
        elif found is not None:
            values, zw, gw = found
            G = decode_graph6(g6)
            if not (is_zero_forcing_set(G, zw) and is_general_position_set(G, gw)):
                raise AssertionError(f"uncertified hunt hit {g6}")
            again = _hunt_one((relation, g6, cap))[1]
            if again is None or again[0] != values:
                raise AssertionError(f"hunt hit {g6} did not reproduce")
            hits.append(HuntHit(g6, G.n, G.m, values, zw, gw))
    seen = set()
    unique = []
    for h in sorted(hits, key=lambda h: (h.n, h.m, graph_id(decode_graph6(h.graph6)))):
        key = graph_id(decode_graph6(h.graph6))
        if key not in seen:
            seen.add(key)
            unique.append(h)
    report.hits = unique
    return report
