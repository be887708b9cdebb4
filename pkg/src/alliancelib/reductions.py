"""Deterministic compilers for four hardness reductions into defensive alliance.

Each compiler turns a source instance (multidimensional relaxed subset sum,
red-blue dominating set, degree-3 vertex cover, or forbidden-vertex alliance)
into an alliance instance plus a GadgetMap recording which constructed vertex
plays which role.  The gadget map powers the two certificate directions: a
forward map translating a source solution into a target alliance, and an
extraction map reading a source solution back out of a target alliance.

Every "arbitrary" adjacency choice is made lowest-index-first so a compiler is
a pure function of its input; tests rely on byte-identical reruns.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .alliances import DAFInstance, DAInstance
from .errors import DegreeTooHigh, InvalidInstance, ParseError, TooLarge
from .graph import Graph, RoleKind, RoleTag, parse_graph, write_graph

_ORACLE_LIMIT = 20


@dataclass(frozen=True)
class GadgetMap:
    """Provenance of a compiled graph: vertex roles plus named gadget families.

    `families` maps family names (as used by the construction, e.g. "H",
    "x_center", "cycles") to id lists / nested id lists keyed the same way
    the source instance is indexed.
    """

    kind: str
    roles: dict[int, RoleTag]
    families: dict[str, object]

    def to_json(self) -> str:
        def encode(obj: object) -> object:
            if isinstance(obj, RoleTag):
                return {"kind": obj.kind.value, "payload": encode(obj.payload)}
            if isinstance(obj, (list, tuple)):
                return [encode(x) for x in obj]
            if isinstance(obj, (set, frozenset)):
                return sorted(encode(x) for x in obj)
            if isinstance(obj, dict):
                return {str(k): encode(v) for k, v in obj.items()}
            return obj

        payload = {
            "kind": self.kind,
            "roles": {str(v): encode(tag) for v, tag in sorted(self.roles.items())},
            "families": encode(self.families),
        }
        return json.dumps(payload, sort_keys=True, indent=1) + "\n"


def _roles_of(g: Graph) -> dict[int, RoleTag]:
    return {v: g.tag(v) for v in g.vertices()}


# ---------------------------------------------------------------------------
# MRSS: multidimensional relaxed subset sum
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MRSSInstance:
    """Choose at most kprime of the vectors so the coordinatewise sum covers target."""

    k: int
    vectors: tuple[tuple[int, ...], ...]
    target: tuple[int, ...]
    kprime: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidInstance("dimension must be >= 1")
        if not self.vectors:
            raise InvalidInstance("at least one vector required")
        if self.kprime < 0:
            raise InvalidInstance("kprime must be >= 0")
        if len(self.target) != self.k:
            raise InvalidInstance("target dimension mismatch")
        for s in self.vectors:
            if len(s) != self.k:
                raise InvalidInstance("vector dimension mismatch")
            if any(x < 0 for x in s):
                raise InvalidInstance("vector entries must be non-negative")
        if any(x < 0 for x in self.target):
            raise InvalidInstance("target entries must be non-negative")


def solve_mrss_bruteforce(inst: MRSSInstance) -> tuple[int, ...] | None:
    """Lexicographically first subset of size <= kprime with sum >= target."""
    n = len(inst.vectors)
    if n > _ORACLE_LIMIT:
        raise TooLarge(f"MRSS brute force guarded at n <= {_ORACLE_LIMIT}")
    for size in range(0, min(inst.kprime, n) + 1):
        for subset in combinations(range(n), size):
            total = [0] * inst.k
            for i in subset:
                for d in range(inst.k):
                    total[d] += inst.vectors[i][d]
            if all(total[d] >= inst.target[d] for d in range(inst.k)):
                return subset
    return None


def mrss_to_da(inst: MRSSInstance) -> tuple[DAInstance, GadgetMap]:
    """Compile an MRSS instance into a defensive-alliance instance.

    Layout: one hub u_i per dimension weighted by a square-vertex set whose
    size encodes the target's slack in that dimension; three helper hubs F;
    a cyclic chain of N-vertex connector sets H_xy (one per consecutive hub
    pair) that welds all hubs into one rigid block; per-vector twin stars
    (centers x_s / y_s with max(s)+1 leaves each) whose A-side leaves wire
    into the dimension hubs; guard squares throughout, each carrying a
    pendant set of 2r+2 fresh vertices so no small alliance can touch it.
    Vector s is "selected" exactly when the A_s star joins the alliance.
    """
    k, vecs, target, kprime = inst.k, inst.vectors, inst.target, inst.kprime
    if any(max(s) < 1 for s in vecs):
        # The star gadget needs max(s)+1 >= 2 leaves; a zero vector is
        # pointless for the source problem anyway.
        raise InvalidInstance("zero vector not supported by the star gadget")
    n = len(vecs)
    big_n = sum(2 * max(s) + 2 for s in vecs)
    budget = (
        (k + 3) * big_n
        + 2 * k
        + 6
        + sum(max(s) + 1 for s in vecs)
        + kprime
    )

    g = Graph()
    u = [g.add_vertex(RoleTag(RoleKind.OTHER, ("u", i))) for i in range(k)]
    squares_u: list[list[int]] = []
    for i in range(k):
        col = sum(s[i] for s in vecs)
        size = col + 2 * big_n - 2 * (col - target[i])
        sq = [
            g.add_vertex(RoleTag(RoleKind.SQUARE, ("u", i, j))) for j in range(size)
        ]
        for x in sq:
            g.add_edge(u[i], x)
        squares_u.append(sq)

    f = [g.add_vertex(RoleTag(RoleKind.F_VERTEX, i)) for i in range(3)]
    squares_f: list[list[int]] = []
    for i in range(3):
        sq = [
            g.add_vertex(RoleTag(RoleKind.SQUARE, ("f", i, j)))
            for j in range(2 * big_n)
        ]
        for x in sq:
            g.add_edge(f[i], x)
        squares_f.append(sq)

    # Consecutive pairs in the cyclic order u_1..u_k, f_1, f_2, f_3, u_1.
    ring = u + f
    pairs = [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
    hub_h: list[list[int]] = []
    hub_h0: list[int] = []
    squares_h0: list[list[int]] = []
    for p, (x, y) in enumerate(pairs):
        hs = [g.add_vertex(RoleTag(RoleKind.HUB_H, (p, j))) for j in range(big_n)]
        for h in hs:
            g.add_edge(h, x)
            g.add_edge(h, y)
        h0 = g.add_vertex(RoleTag(RoleKind.HUB_H0, p))
        for h in hs:
            g.add_edge(h0, h)
        sq = [
            g.add_vertex(RoleTag(RoleKind.SQUARE, ("h0", p, j)))
            for j in range(big_n)
        ]
        for xsq in sq:
            g.add_edge(h0, xsq)
        hub_h.append(hs)
        hub_h0.append(h0)
        squares_h0.append(sq)

    h_square = [g.add_vertex(RoleTag(RoleKind.SQUARE, ("H", j))) for j in range(3)]
    for hs in hub_h:
        for h in hs:
            for xsq in h_square:
                g.add_edge(h, xsq)

    x_center: list[int] = []
    a_leaves: list[list[int]] = []
    y_center: list[int] = []
    b_leaves: list[list[int]] = []
    for si, s in enumerate(vecs):
        width = max(s) + 1
        xc = g.add_vertex(RoleTag(RoleKind.STAR_CENTER, ("x", si)))
        al = [
            g.add_vertex(RoleTag(RoleKind.STAR_LEAF_A, (si, j))) for j in range(width)
        ]
        yc = g.add_vertex(RoleTag(RoleKind.STAR_CENTER, ("y", si)))
        bl = [
            g.add_vertex(RoleTag(RoleKind.STAR_LEAF_B, (si, j))) for j in range(width)
        ]
        for leaf in al:
            g.add_edge(xc, leaf)
        for leaf in bl:
            g.add_edge(yc, leaf)
        for i in range(k):
            for j in range(s[i]):  # the s(i) lowest-index leaves
                g.add_edge(u[i], al[j])
        for fv in f:
            for leaf in al + bl:
                g.add_edge(fv, leaf)
        x_center.append(xc)
        a_leaves.append(al)
        y_center.append(yc)
        b_leaves.append(bl)

    a_square = [
        g.add_vertex(RoleTag(RoleKind.SQUARE, ("a", j))) for j in range(k + 5)
    ]
    for si, s in enumerate(vecs):
        for j, leaf in enumerate(a_leaves[si]):
            picks = sum(1 for i in range(k) if s[i] > j) + 5
            for xsq in a_square[:picks]:
                g.add_edge(leaf, xsq)

    all_squares = (
        [x for sq in squares_u for x in sq]
        + [x for sq in squares_f for x in sq]
        + [x for sq in squares_h0 for x in sq]
        + h_square
        + a_square
    )
    t_side = set(
        [x for sq in squares_u for x in sq]
        + [x for sq in squares_f for x in sq]
        + [x for sq in squares_h0 for x in sq]
    )
    pendants: dict[int, list[int]] = {}
    for xsq in sorted(all_squares):
        pend = [
            g.add_vertex(RoleTag(RoleKind.PENDANT, (xsq, j)))
            for j in range(2 * budget + 2)
        ]
        for p in pend:
            g.add_edge(xsq, p)
        pendants[xsq] = pend

    t = g.add_vertex(RoleTag(RoleKind.T_VERTEX, 0))
    t_prime = g.add_vertex(RoleTag(RoleKind.T_VERTEX, 1))
    for xsq in sorted(all_squares):
        sink = t if xsq in t_side else t_prime
        for p in pendants[xsq]:
            g.add_edge(sink, p)

    g.freeze()
    gm = GadgetMap(
        kind="mrss",
        roles=_roles_of(g),
        families={
            "u": u,
            "squares_u": squares_u,
            "F": f,
            "squares_f": squares_f,
            "pairs": pairs,
            "H": hub_h,
            "h0": hub_h0,
            "squares_h0": squares_h0,
            "H_square": h_square,
            "a_square": a_square,
            "x_center": x_center,
            "A": a_leaves,
            "y_center": y_center,
            "B": b_leaves,
            "pendants": pendants,
            "t": t,
            "t_prime": t_prime,
            "N": big_n,
        },
    )
    return DAInstance(g, budget), gm


def mrss_forward_certificate(gm: GadgetMap, subset: Iterable[int]) -> frozenset[int]:
    """Alliance asserted by a yes-certificate: the rigid hub block, the A-star
    of every selected vector, and the B-leaves of every unselected one."""
    fam = gm.families
    chosen = set(subset)
    members: set[int] = set(fam["u"]) | set(fam["F"]) | set(fam["h0"])
    for hs in fam["H"]:
        members.update(hs)
    for si in range(len(fam["A"])):
        if si in chosen:
            members.update(fam["A"][si])
            members.add(fam["x_center"][si])
        else:
            members.update(fam["B"][si])
    return frozenset(members)


def mrss_extract_certificate(gm: GadgetMap, r_set: Iterable[int]) -> frozenset[int]:
    rs = set(r_set)
    return frozenset(
        si for si, xc in enumerate(gm.families["x_center"]) if xc in rs
    )


# ---------------------------------------------------------------------------
# RBDS: red-blue dominating set
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RBDSInstance:
    """Pick at most k sources so every terminal has a picked neighbour."""

    n_terminals: int
    n_sources: int
    edges: tuple[tuple[int, int], ...]  # (terminal, source) pairs
    k: int

    def __post_init__(self) -> None:
        if self.n_terminals < 0 or self.n_sources < 0:
            raise InvalidInstance("negative part sizes")
        if self.k < 1:
            raise InvalidInstance("budget must be >= 1")
        seen = set()
        for t, s in self.edges:
            if not (0 <= t < self.n_terminals and 0 <= s < self.n_sources):
                raise InvalidInstance(f"edge ({t},{s}) out of range")
            if (t, s) in seen:
                raise InvalidInstance(f"duplicate edge ({t},{s})")
            seen.add((t, s))


def solve_rbds_bruteforce(inst: RBDSInstance) -> tuple[int, ...] | None:
    """Lexicographically first source subset of size <= k dominating all terminals."""
    if inst.n_sources > _ORACLE_LIMIT:
        raise TooLarge(f"RBDS brute force guarded at |S| <= {_ORACLE_LIMIT}")
    nbrs = [set() for _ in range(inst.n_terminals)]
    for t, s in inst.edges:
        nbrs[t].add(s)
    for size in range(0, min(inst.k, inst.n_sources) + 1):
        for subset in combinations(range(inst.n_sources), size):
            chosen = set(subset)
            if all(nb & chosen for nb in nbrs):
                return subset
    return None


def rbds_to_da(inst: RBDSInstance) -> tuple[DAInstance, GadgetMap]:
    """Compile RBDS into defensive alliance (the polynomial parameter transform).

    Three terminal copies and two source copies; every T1/T2 copy gets a 4l
    pendant blanket (l = 4k') watched by helpers a, b, c that price those
    copies out of any small alliance; source edges fan out into the four-copy
    pattern; the apex x* ties the S1 layer together.  Budget |T|+|S|+k+1.
    """
    nt, ns = inst.n_terminals, inst.n_sources
    budget = nt + ns + inst.k + 1
    ell = 4 * budget

    g = Graph()
    t0 = [g.add_vertex(RoleTag(RoleKind.COPY_T0, t)) for t in range(nt)]
    t1 = [g.add_vertex(RoleTag(RoleKind.COPY_T1, t)) for t in range(nt)]
    t2 = [g.add_vertex(RoleTag(RoleKind.COPY_T2, t)) for t in range(nt)]
    s0 = [g.add_vertex(RoleTag(RoleKind.COPY_S0, s)) for s in range(ns)]
    s1 = [g.add_vertex(RoleTag(RoleKind.COPY_S1, s)) for s in range(ns)]

    blanket: dict[int, list[int]] = {}
    for host in t1 + t2:
        pend = [
            g.add_vertex(RoleTag(RoleKind.PENDANT, (host, j))) for j in range(4 * ell)
        ]
        for p in pend:
            g.add_edge(host, p)
        blanket[host] = pend

    a = g.add_vertex(RoleTag(RoleKind.APEX, "a"))
    b = g.add_vertex(RoleTag(RoleKind.APEX, "b"))
    c = g.add_vertex(RoleTag(RoleKind.APEX, "c"))
    for host in t1 + t2:
        for p in blanket[host]:
            g.add_edge(a, p)
            g.add_edge(b, p)
            g.add_edge(c, p)
    for t in t0:
        g.add_edge(a, t)
        g.add_edge(b, t)
    for s in s1:
        g.add_edge(a, s)

    for t, s in sorted(inst.edges):
        g.add_edge(t0[t], s0[s])
        g.add_edge(t0[t], s1[s])
        g.add_edge(t1[t], s1[s])
        g.add_edge(t2[t], s0[s])

    xstar = g.add_vertex(RoleTag(RoleKind.OTHER, "xstar"))
    for s in s1:
        g.add_edge(xstar, s)
    if t1:
        for p in blanket[t1[0]][:ns]:  # |S| lowest-index blanket vertices
            g.add_edge(xstar, p)

    g.freeze()
    gm = GadgetMap(
        kind="rbds",
        roles=_roles_of(g),
        families={
            "T0": t0,
            "T1": t1,
            "T2": t2,
            "S0": s0,
            "S1": s1,
            "blanket": blanket,
            "a": a,
            "b": b,
            "c": c,
            "xstar": xstar,
            "ell": ell,
        },
    )
    return DAInstance(g, budget), gm


def rbds_forward_certificate(gm: GadgetMap, x_set: Iterable[int]) -> frozenset[int]:
    fam = gm.families
    members = set(fam["S1"]) | set(fam["T0"]) | {fam["xstar"]}
    members.update(fam["S0"][s] for s in x_set)
    return frozenset(members)


def rbds_extract_certificate(gm: GadgetMap, r_set: Iterable[int]) -> frozenset[int]:
    rs = set(r_set)
    return frozenset(s for s, v in enumerate(gm.families["S0"]) if v in rs)


def rbds_cover_set(gm: GadgetMap) -> frozenset[int]:
    """The vertex set T0 u T1 u T2 u {a,b,c,x*} of size 3|T|+4 that covers G'."""
    fam = gm.families
    return frozenset(
        fam["T0"] + fam["T1"] + fam["T2"] + [fam["a"], fam["b"], fam["c"], fam["xstar"]]
    )


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    cs = set(cover)
    return all(u in cs or v in cs for u, v in g.edges())


# ---------------------------------------------------------------------------
# Vertex cover in graphs of maximum degree 3
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VC3Instance:
    graph: Graph
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise InvalidInstance("budget must be >= 0")
        for v in self.graph.vertices():
            if self.graph.degree(v) > 3:
                raise DegreeTooHigh(f"vertex {v} has degree {self.graph.degree(v)} > 3")


def solve_vc_bruteforce(inst: VC3Instance) -> tuple[int, ...] | None:
    """Lexicographically first vertex cover of size <= k (the empty cover is
    legitimate on an edgeless graph)."""
    g = inst.graph
    if g.n > _ORACLE_LIMIT:
        raise TooLarge(f"VC brute force guarded at n <= {_ORACLE_LIMIT}")
    edges = list(g.edges())
    for size in range(0, min(inst.k, g.n) + 1):
        for subset in combinations(range(g.n), size):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                return subset
    return None


def vc_to_da(inst: VC3Instance) -> tuple[DAInstance, GadgetMap]:
    """Compile degree-3 vertex cover into defensive alliance (linear blowup).

    X mirrors the source vertices, Y the source edges (with incidence edges);
    a 4-cycle rides between each pair of consecutive edge vertices; eight
    helpers F with 4k' pendants each press Y into the alliance; an apex over
    X and the pendants keeps X optional.  Budget 5m+k.

    For m = 1 the flanking rule degenerates: the single cycle attaches to e_1
    once only (simple graphs have no parallel edges).  The compiled graph is
    well-formed but the forward certificate needs the two-cycle flank, so
    certificate validity is only promised for m >= 2.
    """
    src = inst.graph
    k = inst.k
    if k < 1:
        raise InvalidInstance("compilation needs budget >= 1")
    edges = list(src.edges())
    m = len(edges)
    budget = 5 * m + k

    g = Graph()
    xs = [g.add_vertex(RoleTag(RoleKind.X_SET, v)) for v in src.vertices()]
    ys = [g.add_vertex(RoleTag(RoleKind.Y_SET, i)) for i in range(m)]
    for i, (uv, vv) in enumerate(edges):
        g.add_edge(xs[uv], ys[i])
        g.add_edge(xs[vv], ys[i])

    cycles: list[list[int]] = []
    for i in range(m):
        cyc = [g.add_vertex(RoleTag(RoleKind.CYCLE_C, (i, j))) for j in range(4)]
        for j in range(4):
            g.add_edge(cyc[j], cyc[(j + 1) % 4])
        flanks = {i, (i + 1) % m}
        for j in flanks:
            for v in cyc:
                g.add_edge(v, ys[j])
        cycles.append(cyc)

    fs = [g.add_vertex(RoleTag(RoleKind.F_VERTEX, i)) for i in range(8)]
    vf: list[list[int]] = []
    for i, fv in enumerate(fs):
        pend = [
            g.add_vertex(RoleTag(RoleKind.PENDANT, (fv, j)))
            for j in range(4 * budget)
        ]
        for p in pend:
            g.add_edge(fv, p)
        vf.append(pend)
    for fv in fs[:5]:
        for cyc in cycles:
            for v in cyc:
                g.add_edge(fv, v)
    for fv in fs:
        for y in ys:
            g.add_edge(fv, y)

    apex = g.add_vertex(RoleTag(RoleKind.APEX, "a"))
    for x in xs:
        g.add_edge(apex, x)
    for pend in vf:
        for p in pend:
            g.add_edge(apex, p)

    g.freeze()
    gm = GadgetMap(
        kind="vc",
        roles=_roles_of(g),
        families={
            "X": xs,
            "Y": ys,
            "cycles": cycles,
            "F": fs,
            "Vf": vf,
            "apex": apex,
            "source_edges": edges,
        },
    )
    return DAInstance(g, budget), gm


def vc_forward_certificate(gm: GadgetMap, cover: Iterable[int]) -> frozenset[int]:
    fam = gm.families
    members = set(fam["Y"])
    for cyc in fam["cycles"]:
        members.update(cyc)
    members.update(fam["X"][v] for v in cover)
    return frozenset(members)


def vc_extract_certificate(gm: GadgetMap, d_set: Iterable[int]) -> frozenset[int]:
    ds = set(d_set)
    return frozenset(v for v, x in enumerate(gm.families["X"]) if x in ds)


# ---------------------------------------------------------------------------
# Forbidden-vertex alliance -> plain alliance
# ---------------------------------------------------------------------------


def daf_to_da(inst: DAFInstance) -> tuple[DAInstance, GadgetMap]:
    """Eliminate forbidden vertices: each gets a mirror twin plus 2k shared
    guard vertices, raising its degree past what a size-<=k alliance can
    protect.  Budget unchanged."""
    g = inst.graph.clone()
    mirrors: dict[int, int] = {}
    guards: dict[int, list[int]] = {}
    for x in sorted(inst.forbidden):
        mirror = g.add_vertex(RoleTag(RoleKind.OTHER, ("mirror", x)))
        pack = [
            g.add_vertex(RoleTag(RoleKind.SQUARE, ("guard", x, j)))
            for j in range(2 * inst.r)
        ]
        for w in pack:
            g.add_edge(x, w)
            g.add_edge(mirror, w)
        mirrors[x] = mirror
        guards[x] = pack
    g.freeze()
    gm = GadgetMap(
        kind="daf",
        roles=_roles_of(g),
        families={"mirror": mirrors, "guards": guards, "forbidden": sorted(inst.forbidden)},
    )
    return DAInstance(g, inst.r), gm


# ---------------------------------------------------------------------------
# Instance text formats
# ---------------------------------------------------------------------------
#
#   MRSS:  "mrss <k> <n> <k'>", target line of k ints, n vector lines.
#   RBDS:  "rbds <|T|> <|S|> <k>", then "e <t> <s>" lines (0-based).
#   VC:    the graph text format followed by one "k <int>" line.
#   DAF:   the graph format, "k <int>", optional "f <v> <v> ..." line.


def write_mrss(inst: MRSSInstance) -> str:
    lines = [f"mrss {inst.k} {len(inst.vectors)} {inst.kprime}"]
    lines.append(" ".join(str(x) for x in inst.target))
    for s in inst.vectors:
        lines.append(" ".join(str(x) for x in s))
    return "\n".join(lines) + "\n"


def parse_mrss(text: str) -> MRSSInstance:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or rows[0][:1] != ["mrss"] or len(rows[0]) != 4:
        raise ParseError("expected 'mrss <k> <n> <k\\'>' header")
    try:
        k, n, kprime = (int(x) for x in rows[0][1:])
        numbers = [tuple(int(x) for x in row) for row in rows[1:]]
    except ValueError as exc:
        raise ParseError("non-integer field in MRSS file") from exc
    if len(numbers) != n + 1:
        raise ParseError(f"expected target plus {n} vectors, got {len(numbers)} rows")
    try:
        return MRSSInstance(k=k, vectors=tuple(numbers[1:]), target=numbers[0], kprime=kprime)
    except InvalidInstance as exc:
        raise ParseError(str(exc)) from exc


def write_rbds(inst: RBDSInstance) -> str:
    lines = [f"rbds {inst.n_terminals} {inst.n_sources} {inst.k}"]
    for t, s in sorted(inst.edges):
        lines.append(f"e {t} {s}")
    return "\n".join(lines) + "\n"


def parse_rbds(text: str) -> RBDSInstance:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or rows[0][:1] != ["rbds"] or len(rows[0]) != 4:
        raise ParseError("expected 'rbds <|T|> <|S|> <k>' header")
    try:
        nt, ns, k = (int(x) for x in rows[0][1:])
    except ValueError as exc:
        raise ParseError("non-integer field in RBDS header") from exc
    edges = []
    for row in rows[1:]:
        if row[0] != "e" or len(row) != 3:
            raise ParseError(f"expected 'e <t> <s>', got {' '.join(row)}")
        try:
            edges.append((int(row[1]), int(row[2])))
        except ValueError as exc:
            raise ParseError("non-integer edge endpoint") from exc
    try:
        return RBDSInstance(nt, ns, tuple(edges), k)
    except InvalidInstance as exc:
        raise ParseError(str(exc)) from exc


def _split_budget_lines(text: str) -> tuple[str, int, list[int] | None]:
    """Separate graph lines from the trailing 'k' and optional 'f' records."""
    graph_lines: list[str] = []
    k: int | None = None
    forb: list[int] | None = None
    for raw in text.splitlines():
        fields = raw.split()
        if fields and fields[0] == "k":
            if len(fields) != 2:
                raise ParseError("expected 'k <int>'")
            try:
                k = int(fields[1])
            except ValueError as exc:
                raise ParseError("bad budget") from exc
        elif fields and fields[0] == "f":
            try:
                forb = [int(x) for x in fields[1:]]
            except ValueError as exc:
                raise ParseError("bad forbidden list") from exc
        else:
            graph_lines.append(raw)
    if k is None:
        raise ParseError("missing 'k <int>' line")
    return "\n".join(graph_lines) + "\n", k, forb


def write_vc(inst: VC3Instance) -> str:
    return write_graph(inst.graph) + f"k {inst.k}\n"


def parse_vc(text: str) -> VC3Instance:
    graph_text, k, forb = _split_budget_lines(text)
    if forb is not None:
        raise ParseError("VC instances carry no forbidden list")
    try:
        return VC3Instance(parse_graph(graph_text), k)
    except (InvalidInstance, DegreeTooHigh) as exc:
        raise ParseError(str(exc)) from exc


def write_daf(inst: DAFInstance) -> str:
    out = write_graph(inst.graph) + f"k {inst.r}\n"
    if inst.forbidden:
        out += "f " + " ".join(str(v) for v in sorted(inst.forbidden)) + "\n"
    return out


def parse_daf(text: str) -> DAFInstance:
    graph_text, k, forb = _split_budget_lines(text)
    try:
        return DAFInstance(parse_graph(graph_text), k, frozenset(forb or ()))
    except InvalidInstance as exc:
        raise ParseError(str(exc)) from exc
