"""Independent brute-force references used to pin expected test values.

Nothing here shares code with the solvers: cliques come from subset
enumeration, Hamilton paths from pruned sequence enumeration, path covers
from explicit set-partition enumeration and spans from exhaustive label
assignment over breadth-first distances.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

from lambda_power.powergraph import Graph, bits


def adjacency_sets(graph: Graph) -> list[set[int]]:
    return [set(bits(row)) for row in graph.adj]


def bfs_distances(graph: Graph, start: int) -> list[int]:
    dist = [-1] * graph.n
    dist[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in bits(graph.adj[v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def brute_max_clique(graph: Graph) -> int:
    n = graph.n
    best = 0
    adj = adjacency_sets(graph)
    for size in range(n, 0, -1):
        if size <= best:
            break
        for subset in combinations(range(n), size):
            if all(v in adj[u] for u, v in combinations(subset, 2)):
                best = size
                break
    return best


def brute_hamilton_exists(graph: Graph) -> bool:
    n = graph.n
    if n <= 1:
        return True
    adj = adjacency_sets(graph)

    def extend(seq: list[int], remaining: set[int]) -> bool:
        if not remaining:
            return True
        for v in sorted(remaining & adj[seq[-1]]):
            seq.append(v)
            remaining.remove(v)
            if extend(seq, remaining):
                return True
            seq.pop()
            remaining.add(v)
        return False

    for start in range(n):
        if extend([start], set(range(n)) - {start}):
            return True
    return False


def brute_path_cover_count(graph: Graph) -> int:
    """Minimum block count over all set partitions with path-orderable blocks."""
    n = graph.n
    if n == 0:
        return 0
    adj = adjacency_sets(graph)
    orderable: dict[frozenset[int], bool] = {}

    def block_ok(block: frozenset[int]) -> bool:
        cached = orderable.get(block)
        if cached is not None:
            return cached

        def order(seq: list[int], remaining: set[int]) -> bool:
            if not remaining:
                return True
            for v in sorted(remaining & adj[seq[-1]]):
                seq.append(v)
                remaining.remove(v)
                if order(seq, remaining):
                    return True
                seq.pop()
                remaining.add(v)
            return False

        ok = len(block) == 1 or any(
            order([start], set(block) - {start}) for start in block)
        orderable[block] = ok
        return ok

    best = n  # singletons always work

    def assign(v: int, blocks: list[set[int]]) -> None:
        nonlocal best
        if len(blocks) >= best and v < n:
            return
        if v == n:
            if all(block_ok(frozenset(b)) for b in blocks):
                best = min(best, len(blocks))
            return
        for block in blocks:
            block.add(v)
            assign(v + 1, blocks)
            block.remove(v)
        blocks.append({v})
        assign(v + 1, blocks)
        blocks.pop()

    assign(0, [])
    return best


def check_l21(graph: Graph, labels: tuple[int, ...] | list[int]) -> bool:
    """Constraint check against breadth-first distances, not adjacency masks."""
    for u in range(graph.n):
        dist = bfs_distances(graph, u)
        for v in range(u + 1, graph.n):
            if dist[v] == 1 and abs(labels[u] - labels[v]) < 2:
                return False
            if dist[v] == 2 and labels[u] == labels[v]:
                return False
    return True


def brute_lambda(graph: Graph, max_span: int | None = None) -> int:
    """Smallest feasible span by exhaustive label assignment; tiny graphs only."""
    n = graph.n
    if n == 0:
        return 0
    pair_kind: dict[tuple[int, int], int] = {}
    for u in range(n):
        dist = bfs_distances(graph, u)
        for v in range(u + 1, n):
            if dist[v] in (1, 2):
                pair_kind[(u, v)] = dist[v]
    top = max_span if max_span is not None else 2 * n - 2

    def assign(v: int, labels: list[int], k: int) -> bool:
        if v == n:
            return True
        for lab in range(k + 1):
            ok = True
            for u in range(v):
                kind = pair_kind.get((u, v))
                if kind == 1 and abs(labels[u] - lab) < 2:
                    ok = False
                    break
                if kind == 2 and labels[u] == lab:
                    ok = False
                    break
            if ok:
                labels.append(lab)
                if assign(v + 1, labels, k):
                    return True
                labels.pop()
        return False

    for k in range(top + 1):
        if assign(0, [], k):
            return k
    raise AssertionError("no labeling found within the trivial upper bound")
