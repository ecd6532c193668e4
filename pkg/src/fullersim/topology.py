"""Fullerene coupling graphs, their symmetries, and configuration orbits.

A coupling graph is a cubic (3-regular) graph with a sign J in {-1, +1} and a
class label on every edge. Spin configurations are bit patterns: bit i set
means spin i points up (+1). The automorphism group collects every vertex
permutation that maps edges to edges while preserving both the coupling sign
and the class label; acting on bit patterns (optionally together with global
spin inversion) it partitions configurations into symmetry orbits.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import _polyhedra
from .errors import GraphFormatError

BUILTIN_GRAPHS = ("dodecahedron_afm", "c24_afm", "c60_afm", "c60_mixed")


@dataclass(frozen=True)
class FullereneGraph:
    """Cubic coupling graph with signed, classed edges.

    Attributes:
        n: Number of vertices.
        edges: Tuple of (i, j) vertex pairs with i < j.
        coupling: Per-edge sign, +1 (antiferromagnetic) or -1 (ferromagnetic).
        edge_class: Per-edge symmetry-class label, e.g. "pentagon".
        name: Optional label for provenance.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    coupling: tuple[int, ...]
    edge_class: tuple[str, ...]
    name: str = ""

    def __post_init__(self):
        validate_graph(self)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def neighbor_table(self) -> np.ndarray:
        """(n, 3) array: the three neighbors of each vertex, ascending."""
        nbrs = [[] for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return np.array([sorted(row) for row in nbrs], dtype=np.int64)

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Edge endpoints and signs as parallel int64 arrays (ei, ej, sign)."""
        e = np.array(self.edges, dtype=np.int64)
        return e[:, 0], e[:, 1], np.array(self.coupling, dtype=np.int64)

    def digest(self) -> str:
        """Content hash covering vertex count, edges, signs, and classes."""
        h = hashlib.sha256()
        h.update(b"fullersim-graph-v1\n")
        h.update(str(self.n).encode())
        for (i, j), s, c in zip(self.edges, self.coupling, self.edge_class):
            h.update(f"\n{i} {j} {s:+d} {c}".encode())
        return h.hexdigest()


@dataclass(frozen=True)
class AutomorphismGroup:
    """All vertex permutations preserving adjacency, coupling, and class.

    Attributes:
        perms: (order, n) int64 array, rows sorted lexicographically;
            row g maps vertex v to perms[g, v].
    """

    perms: np.ndarray

    @property
    def order(self) -> int:
        return self.perms.shape[0]

    @property
    def n(self) -> int:
        return self.perms.shape[1]


@dataclass(frozen=True)
class OrbitPartition:
    """Orbit labels for a fixed sequence of spin configurations.

    Attributes:
        states: The input configurations, as given (uint64 bit patterns).
        labels: Orbit label per input configuration; labels are assigned
            0, 1, ... in ascending order of the orbit representative.
        representatives: Per-label canonical pattern (lexicographically
            smallest image over the group action).
        includes_global_flip: Whether global spin inversion was composed
            with the vertex permutations.
    """

    states: np.ndarray
    labels: np.ndarray
    representatives: np.ndarray
    includes_global_flip: bool

    @property
    def n_orbits(self) -> int:
        return len(self.representatives)

    @property
    def orbit_sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.n_orbits)


def validate_graph(g: FullereneGraph) -> None:
    """Raise GraphFormatError unless g satisfies every graph invariant."""
    if g.n <= 0:
        raise GraphFormatError("graph must have at least one vertex")
    if len(g.coupling) != len(g.edges) or len(g.edge_class) != len(g.edges):
        raise GraphFormatError("edges, coupling, and edge_class lengths differ")
    if len(g.edges) != 3 * g.n // 2 or (3 * g.n) % 2 != 0:
        raise GraphFormatError(
            f"cubic graph on {g.n} vertices needs {3 * g.n / 2:g} edges, "
            f"got {len(g.edges)}"
        )
    degree = [0] * g.n
    seen = set()
    for i, j in g.edges:
        if not (0 <= i < g.n and 0 <= j < g.n):
            raise GraphFormatError(f"edge ({i}, {j}) references a missing vertex")
        if i >= j:
            raise GraphFormatError(f"edge ({i}, {j}) must be ordered i < j")
        if (i, j) in seen:
            raise GraphFormatError(f"duplicate edge ({i}, {j})")
        seen.add((i, j))
        degree[i] += 1
        degree[j] += 1
    for v, d in enumerate(degree):
        if d != 3:
            raise GraphFormatError(f"vertex {v} has degree {d}")
    for s in g.coupling:
        if s not in (-1, 1):
            raise GraphFormatError("coupling must be ±1")
    # connectivity
    adj = [[] for _ in range(g.n)]
    for i, j in g.edges:
        adj[i].append(j)
        adj[j].append(i)
    reached = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in reached:
                reached.add(u)
                queue.append(u)
    if len(reached) != g.n:
        raise GraphFormatError("graph is not connected")


def build_graph(name: str) -> FullereneGraph:
    """Return one of the built-in fullerene coupling graphs.

    Args:
        name: One of "dodecahedron_afm", "c24_afm", "c60_afm", "c60_mixed".
            The AFM variants couple every edge with +1; c60_mixed couples
            the 60 pentagon edges with +1 and the 30 inter-pentagon edges
            with -1.

    Raises:
        GraphFormatError: Unknown name.
    """
    if name == "dodecahedron_afm":
        edges = _polyhedra.DODECAHEDRON_EDGES
        return FullereneGraph(
            n=20,
            edges=edges,
            coupling=(1,) * len(edges),
            edge_class=("pentagon",) * len(edges),
            name=name,
        )
    if name == "c24_afm":
        edges = _polyhedra.C24_EDGES
        return FullereneGraph(
            n=24,
            edges=edges,
            coupling=(1,) * len(edges),
            edge_class=("pentagon",) * len(edges),
            name=name,
        )
    if name in ("c60_afm", "c60_mixed"):
        pent = _polyhedra.C60_PENTAGON_EDGES
        inter = _polyhedra.C60_INTER_PENTAGON_EDGES
        order = sorted(range(len(pent) + len(inter)),
                       key=lambda k: (pent + inter)[k])
        all_edges = pent + inter
        inter_sign = -1 if name == "c60_mixed" else 1
        sign = (1,) * len(pent) + (inter_sign,) * len(inter)
        cls = ("pentagon",) * len(pent) + ("inter-pentagon",) * len(inter)
        return FullereneGraph(
            n=60,
            edges=tuple(all_edges[k] for k in order),
            coupling=tuple(sign[k] for k in order),
            edge_class=tuple(cls[k] for k in order),
            name=name,
        )
    raise GraphFormatError(
        f"unknown graph {name!r}; expected one of {', '.join(BUILTIN_GRAPHS)}"
    )


def load_graph(text: str, name: str = "") -> FullereneGraph:
    """Parse the edge-list text format into a validated graph.

    Format: a header line ``n <N>``, then one line per edge
    ``<i> <j> <+1|-1> <class-name>`` with 0-based vertex indices.
    Blank lines and ``#`` comments are ignored.

    Raises:
        GraphFormatError: Malformed line, bad sign token, or any graph
            invariant violation; the message names the offending line.
    """
    n = None
    edges: list[tuple[int, int]] = []
    coupling: list[int] = []
    classes: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise GraphFormatError(f"line {lineno}: expected header 'n <N>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {fields[1]!r}")
            continue
        if len(fields) != 4:
            raise GraphFormatError(
                f"line {lineno}: expected '<i> <j> <sign> <class>', got {line!r}"
            )
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad vertex index in {line!r}")
        if fields[2] in ("+1", "1"):
            s = 1
        elif fields[2] == "-1":
            s = -1
        else:
            raise GraphFormatError(f"line {lineno}: coupling must be ±1")
        if i == j:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {i}")
        edges.append((min(i, j), max(i, j)))
        coupling.append(s)
        classes.append(fields[3])
    if n is None:
        raise GraphFormatError("missing header line 'n <N>'")
    return FullereneGraph(
        n=n,
        edges=tuple(edges),
        coupling=tuple(coupling),
        edge_class=tuple(classes),
        name=name,
    )


def format_edge_list(g: FullereneGraph) -> str:
    """Render a graph in the edge-list text format accepted by load_graph."""
    lines = [f"# fullersim edge list{': ' + g.name if g.name else ''}", f"n {g.n}"]
    for (i, j), s, c in zip(g.edges, g.coupling, g.edge_class):
        lines.append(f"{i} {j} {s:+d} {c}")
    return "\n".join(lines) + "\n"


def automorphisms(g: FullereneGraph) -> AutomorphismGroup:
    """Compute the full automorphism group preserving couplings and classes.

    Plain backtracking over candidate vertex maps: vertices are assigned in
    breadth-first order from vertex 0, so each newly mapped vertex is
    adjacent to an already-mapped one, and partial maps are pruned by the
    requirement that every placed vertex pair carries identical edge
    attributes (including non-adjacency) before and after the map.

    Returns:
        The group with rows sorted lexicographically; always contains the
        identity.
    """
    n = g.n
    class_codes = {c: k for k, c in enumerate(sorted(set(g.edge_class)))}
    # attribute matrix: 0 = no edge, else 1 + 2*class + (sign>0)
    attr = np.zeros((n, n), dtype=np.int16)
    for (i, j), s, c in zip(g.edges, g.coupling, g.edge_class):
        code = 1 + 2 * class_codes[c] + (1 if s > 0 else 0)
        attr[i, j] = code
        attr[j, i] = code
    # vertex signature: sorted incident attribute codes
    signature = [tuple(sorted(attr[v][attr[v] > 0])) for v in range(n)]

    order: list[int] = [0]
    seen = {0}
    queue = deque([0])
    adj = [np.flatnonzero(attr[v]).tolist() for v in range(n)]
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                order.append(u)
                queue.append(u)

    # for each position k, the already-placed vertices adjacent checks reduce
    # to comparing full attribute rows over placed vertices
    placed_before = [order[:k] for k in range(n)]
    image = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    found: list[tuple[int, ...]] = []

    def extend(k: int) -> None:
        if k == n:
            found.append(tuple(int(x) for x in image))
            return
        v = order[k]
        sig_v = signature[v]
        for w in range(n):
            if used[w] or signature[w] != sig_v:
                continue
            ok = True
            for u in placed_before[k]:
                if attr[v, u] != attr[w, image[u]]:
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                extend(k + 1)
                used[w] = False
                image[v] = -1

    extend(0)
    perms = np.array(sorted(found), dtype=np.int64)
    return AutomorphismGroup(perms=perms)


def apply_permutation(perm: np.ndarray, states: np.ndarray, n: int) -> np.ndarray:
    """Relabel the spins of bit-pattern states by a vertex permutation.

    Bit v of the input lands on bit perm[v] of the output.
    """
    states = np.asarray(states, dtype=np.uint64)
    out = np.zeros_like(states)
    for v in range(n):
        bit = (states >> np.uint64(v)) & np.uint64(1)
        out |= bit << np.uint64(perm[v])
    return out


def canonical_forms(
    group: AutomorphismGroup,
    states: np.ndarray,
    include_global_flip: bool = True,
) -> np.ndarray:
    """Lexicographically smallest image of each state under the group action."""
    states = np.asarray(states, dtype=np.uint64)
    n = group.n
    full_mask = np.uint64((1 << n) - 1)
    best = np.full_like(states, np.iinfo(np.uint64).max)
    for perm in group.perms:
        img = apply_permutation(perm, states, n)
        np.minimum(best, img, out=best)
        if include_global_flip:
            np.minimum(best, img ^ full_mask, out=best)
    return best


def orbit_partition(
    group: AutomorphismGroup,
    states: np.ndarray,
    include_global_flip: bool = True,
) -> OrbitPartition:
    """Partition spin configurations into orbits of the symmetry action.

    Args:
        group: Automorphism group of the underlying coupling graph.
        states: Bit-pattern configurations (any integer array); each must
            fit in the group's vertex count.
        include_global_flip: Compose the action with global spin inversion
            (a symmetry of both Hamiltonian terms); on by default.

    Raises:
        ValueError: A state uses bits outside the vertex range.
    """
    states = np.asarray(states, dtype=np.uint64)
    n = group.n
    if states.size and int(states.max()) >> n:
        raise ValueError(f"state exceeds {n} bits")
    canon = canonical_forms(group, states, include_global_flip)
    representatives, labels = np.unique(canon, return_inverse=True)
    return OrbitPartition(
        states=states,
        labels=labels.astype(np.int64),
        representatives=representatives,
        includes_global_flip=include_global_flip,
    )


def vertex_orbit_count(group: AutomorphismGroup) -> int:
    """Number of vertex orbits (1 means vertex-transitive)."""
    n = group.n
    label = np.arange(n)
    for perm in group.perms:
        for v in range(n):
            a, b = label[v], label[perm[v]]
            if a != b:
                label[label == b] = a
    return len(np.unique(label))


def edge_orbit_count(g: FullereneGraph, group: AutomorphismGroup) -> int:
    """Number of edge orbits under the automorphism group."""
    index = {e: k for k, e in enumerate(g.edges)}
    label = np.arange(len(g.edges))
    for perm in group.perms:
        for (i, j), k in index.items():
            m = index[(min(perm[i], perm[j]), max(perm[i], perm[j]))]
            a, b = label[k], label[m]
            if a != b:
                label[label == b] = a
    return len(np.unique(label))
