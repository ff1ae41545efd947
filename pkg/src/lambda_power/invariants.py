"""Exact graph invariants: cliques, Hamilton paths, minimum path covers.

Everything here is deterministic: vertex scans ascend, branch orders are
fixed, and witnesses come out canonical for a given graph. Exact routines
refuse instances above their configured limits instead of silently guessing;
the rotation heuristic is only ever used to produce positive Hamilton-path
certificates, never to conclude absence.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import CapacityExceeded, InternalError
from .powergraph import Graph, bits, complement, connected_components, delete_vertex

DEFAULT_CLIQUE_LIMIT = 128
DEFAULT_DP_LIMIT = 24

__all__ = [
    "DEFAULT_CLIQUE_LIMIT",
    "DEFAULT_DP_LIMIT",
    "PathCover",
    "WitnessedValue",
    "clique_number",
    "cut_vertex_component_profile",
    "find_complement_p4",
    "hamilton_path",
    "independence_number",
    "path_cover_number",
]


@dataclass(frozen=True)
class WitnessedValue:
    """An exact invariant plus a witness certifying it."""

    value: int
    witness: tuple[int, ...]
    kind: str  # clique | independent-set | hamilton-path | path-cover | p4


@dataclass(frozen=True)
class PathCover:
    """Vertex-disjoint paths covering every vertex of the target graph."""

    paths: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.paths)


def clique_number(graph: Graph, limit: int = DEFAULT_CLIQUE_LIMIT) -> WitnessedValue:
    """Maximum clique via branch and bound with greedy-coloring upper bounds."""
    n = graph.n
    if n > limit:
        raise CapacityExceeded(f"exact clique search limited to {limit} vertices, got {n}")
    if n == 0:
        return WitnessedValue(0, (), "clique")
    adj = graph.adj
    best_size = 0
    best_mask = 0

    def expand(size: int, mask: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if size > best_size:
            best_size, best_mask = size, mask
        if not cand:
            return
        # Greedy coloring of the candidate set; the color index bounds the
        # largest clique extending into the remaining candidates.
        order: list[tuple[int, int]] = []
        color = 0
        rest = cand
        while rest:
            color += 1
            q = rest
            while q:
                low = q & -q
                v = low.bit_length() - 1
                order.append((v, color))
                rest ^= low
                q = (q ^ low) & ~adj[v]
        for v, bound in reversed(order):
            if size + bound <= best_size:
                return
            self_bit = 1 << v
            expand(size + 1, mask | self_bit, cand & adj[v])
            cand &= ~self_bit

    expand(0, 0, graph.full_mask)
    return WitnessedValue(best_size, tuple(bits(best_mask)), "clique")


def independence_number(graph: Graph, limit: int = DEFAULT_CLIQUE_LIMIT) -> WitnessedValue:
    """Maximum independent set, computed as a clique of the complement."""
    found = clique_number(complement(graph), limit=limit)
    return WitnessedValue(found.value, found.witness, "independent-set")


def _induced_adjacency(graph: Graph, vertices: list[int]) -> list[int]:
    position = {v: i for i, v in enumerate(vertices)}
    rows = []
    for v in vertices:
        row = 0
        for u in bits(graph.adj[v]):
            i = position.get(u)
            if i is not None:
                row |= 1 << i
        rows.append(row)
    return rows


def _rotation_heuristic(adj: list[int] | tuple[int, ...], m: int) -> list[int] | None:
    """Greedy path growth with rotation extension; positive answers only."""
    if m == 1:
        return [0]
    budget = 4 * m * m + 16
    for start in range(m):
        path = [start]
        inset = 1 << start
        steps = 0
        while len(path) < m and steps < budget:
            steps += 1
            tail = path[-1]
            free = adj[tail] & ~inset
            if free:
                low = free & -free
                path.append(low.bit_length() - 1)
                inset |= low
                continue
            if adj[path[0]] & ~inset:
                path.reverse()
                continue
            # Rotate: tail adjacent to path[i] makes path[i+1] the new tail.
            rotated = False
            for i in range(len(path) - 2):
                if (adj[tail] >> path[i]) & 1 and adj[path[i + 1]] & ~inset:
                    path[i + 1:] = reversed(path[i + 1:])
                    rotated = True
                    break
            if not rotated:
                for i in range(len(path) - 2):
                    if (adj[tail] >> path[i]) & 1:
                        path[i + 1:] = reversed(path[i + 1:])
                        rotated = True
                        break
            if not rotated:
                break
        if len(path) == m:
            return path
    return None


def _path_subset_table(adj: list[int] | tuple[int, ...], m: int,
                       deadline: float | None = None) -> tuple[dict[int, int], int]:
    """Reachable-subset table: mask -> bitmask of feasible path endpoints.

    A mask appears as a key exactly when its induced subgraph admits a
    Hamilton path. Stops early once the full vertex set is reached.
    """
    full = (1 << m) - 1
    table: dict[int, int] = {}
    layer: dict[int, int] = {}
    for v in range(m):
        table[1 << v] = 1 << v
        layer[1 << v] = 1 << v
    if m == 1:
        return table, 1
    ticks = 0
    while layer:
        nxt: dict[int, int] = {}
        for mask, ends in layer.items():
            ticks += 1
            if deadline is not None and (ticks & 4095) == 0 \
                    and time.monotonic() > deadline:
                raise CapacityExceeded("time budget exhausted during path table build")
            e = ends
            while e:
                low = e & -e
                e ^= low
                v = low.bit_length() - 1
                out = adj[v] & ~mask
                while out:
                    wlow = out & -out
                    out ^= wlow
                    key = mask | wlow
                    nxt[key] = nxt.get(key, 0) | wlow
        for mask, ends in nxt.items():
            table[mask] = table.get(mask, 0) | ends
        if full in table:
            return table, table[full]
        layer = nxt
    return table, 0


def _reconstruct_path(table: dict[int, int], adj, mask: int, end_bit: int) -> list[int]:
    seq = []
    cur_bit = end_bit
    while True:
        cur = cur_bit.bit_length() - 1
        seq.append(cur)
        rest = mask ^ cur_bit
        if not rest:
            break
        cands = table[rest] & adj[cur]
        cur_bit = cands & -cands
        mask = rest
    seq.reverse()
    return seq


def _verify_path(adj, path: list[int] | tuple[int, ...]) -> bool:
    return all((adj[path[i]] >> path[i + 1]) & 1 for i in range(len(path) - 1))


def hamilton_path(graph: Graph, dp_limit: int = DEFAULT_DP_LIMIT,
                  use_heuristic: bool = True,
                  deadline: float | None = None) -> tuple[int, ...] | None:
    """A Hamilton path of the graph, or None when provably absent.

    Raises CapacityExceeded (inconclusive) when the graph is larger than the
    subset-DP limit and the heuristic finds nothing.
    """
    n = graph.n
    if n == 0:
        return ()
    if n == 1:
        return (0,)
    if len(connected_components(graph)) > 1:
        return None
    if use_heuristic:
        found = _rotation_heuristic(graph.adj, n)
        if found is not None:
            if not _verify_path(graph.adj, found):
                raise InternalError("heuristic produced an invalid path")
            return tuple(found)
    if n > dp_limit:
        raise CapacityExceeded(
            f"hamilton search needs {n} <= {dp_limit} vertices and the heuristic found no path"
        )
    table, full_ends = _path_subset_table(graph.adj, n, deadline)
    if full_ends:
        end = full_ends & -full_ends
        return tuple(_reconstruct_path(table, graph.adj, graph.full_mask, end))
    return None


def _min_partition(table: dict[int, int], m: int,
                   deadline: float | None = None) -> list[int]:
    """Fewest path-feasible masks partitioning {0..m-1}; table keys are the masks."""
    full = (1 << m) - 1
    by_low: dict[int, list[int]] = {}
    for mask in table:
        by_low.setdefault(mask & -mask, []).append(mask)
    for masks in by_low.values():
        masks.sort(key=lambda s: (-s.bit_count(), s))
    failed: dict[int, int] = {}  # mask -> largest part budget known infeasible

    def attempt(mask: int, k: int) -> list[int] | None:
        if not mask:
            return []
        if deadline is not None and time.monotonic() > deadline:
            raise CapacityExceeded("time budget exhausted during partition search")
        if k == 0 or failed.get(mask, 0) >= k:
            return None
        for cand in by_low[mask & -mask]:
            if cand & ~mask:
                continue
            rest = attempt(mask ^ cand, k - 1)
            if rest is not None:
                return [cand, *rest]
        failed[mask] = k
        return None

    for k in range(2, m + 1):  # k = 1 was already ruled out by the caller
        parts = attempt(full, k)
        if parts is not None:
            return parts
    raise InternalError("path partition search failed to terminate")


def _canonical_path(seq: list[int]) -> tuple[int, ...]:
    forward = tuple(seq)
    backward = tuple(reversed(seq))
    return min(forward, backward)


def path_cover_number(graph: Graph, dp_limit: int = DEFAULT_DP_LIMIT,
                      use_heuristic: bool = True,
                      deadline: float | None = None) -> PathCover:
    """A minimum path cover of the graph, exact.

    Isolated vertices each contribute a trivial path. On every remaining
    component, a heuristic Hamilton path (a valid certificate) is tried
    first; otherwise the reachable-subset table plus a minimum-partition
    search settles the component exactly, provided it fits the DP limit.
    """
    paths: list[tuple[int, ...]] = []
    components = connected_components(graph)
    for comp in components:
        m = len(comp)
        if m == 1:
            paths.append((comp[0],))
            continue
        local = _induced_adjacency(graph, comp)
        if use_heuristic:
            found = _rotation_heuristic(local, m)
            if found is not None and _verify_path(local, found):
                paths.append(_canonical_path([comp[i] for i in found]))
                continue
        if m > dp_limit:
            greedy_upper = sum(1 if len(c) <= dp_limit else len(c) for c in components)
            raise CapacityExceeded(
                f"component of {m} vertices exceeds the DP limit {dp_limit}",
                lower_bound=len(components),
                upper_bound=greedy_upper,
            )
        table, full_ends = _path_subset_table(local, m, deadline)
        if full_ends:
            seq = _reconstruct_path(table, local, (1 << m) - 1, full_ends & -full_ends)
            paths.append(_canonical_path([comp[i] for i in seq]))
            continue
        for part in _min_partition(table, m, deadline):
            ends = table[part]
            seq = _reconstruct_path(table, local, part, ends & -ends)
            paths.append(_canonical_path([comp[i] for i in seq]))
    paths.sort()
    return PathCover(tuple(paths))


def find_complement_p4(graph: Graph) -> tuple[int, int, int, int] | None:
    """Four distinct vertices with the three consecutive pairs nonadjacent.

    Equivalently a 3-edge walk on distinct vertices in the complement (not
    necessarily induced). Returns None when the complement has no such path.
    """
    n = graph.n
    if n < 4:
        return None
    full = graph.full_mask
    comp = [full & ~graph.adj[v] & ~(1 << v) for v in range(n)]
    for a in range(n):
        for b in bits(comp[a]):
            for c in bits(comp[b] & ~(1 << a)):
                tail = comp[c] & ~(1 << a) & ~(1 << b)
                if tail:
                    d = (tail & -tail).bit_length() - 1
                    return (a, b, c, d)
    return None


def cut_vertex_component_profile(graph: Graph, v: int) -> list[int]:
    """Sizes of the components of graph - v, descending."""
    reduced, _ = delete_vertex(graph, v)
    return [len(c) for c in connected_components(reduced)]
