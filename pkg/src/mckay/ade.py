"""Affine ADE templates and exact graph matching against them."""
from __future__ import annotations

import re
from functools import lru_cache
from pathlib import Path
from typing import Sequence

from .errors import SemanticError
from .exact import RationalMatrix

__all__ = ["affine_adjacency", "affine_cartan", "load_template", "candidate_labels",
           "find_isomorphism", "classify_graph"]

_LABEL = re.compile(r"^([ADE])(\d+)$")


def _edges(label: str) -> tuple[int, list[tuple[int, int]]]:
    match = _LABEL.match(label)
    if not match:
        raise ValueError(f"unknown diagram {label!r}")
    kind, rank = match.group(1), int(match.group(2))
    if kind == "A":
        if rank < 1:
            raise ValueError("A_n needs n >= 1")
        if rank == 1:
            return 2, [(0, 1), (0, 1)]
        return rank + 1, [(i, (i + 1) % (rank + 1)) for i in range(rank + 1)]
    if kind == "D":
        if rank < 4:
            raise ValueError("D_n needs n >= 4")
        edges = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, rank - 1)] + [(rank - 2, rank)]
        return rank + 1, edges
    # branch vertex with arms of lengths (p, q, s); vertex 0 is the affine node
    arms = {6: (2, 2, 2), 7: (3, 3, 1), 8: (5, 2, 1)}.get(rank)
    if arms is None:
        raise ValueError(f"no affine diagram E{rank}")
    long_arm, mid_arm, short_arm = arms
    chain = list(range(long_arm + 1 + mid_arm))  # 0 .. branch .. end of second arm
    edges = [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    branch = long_arm
    nxt = len(chain)
    prev = branch
    for _ in range(short_arm):
        edges.append((prev, nxt))
        prev, nxt = nxt, nxt + 1
    return nxt, edges


def affine_adjacency(label: str) -> list[list[int]]:
    size, edges = _edges(label)
    adj = [[0] * size for _ in range(size)]
    for i, j in edges:
        adj[i][j] += 1
        adj[j][i] += 1
    return adj


def affine_cartan(label: str) -> RationalMatrix:
    adj = affine_adjacency(label)
    n = len(adj)
    return RationalMatrix.from_rows([[2 * (i == j) - adj[i][j] for j in range(n)] for i in range(n)])


@lru_cache(maxsize=None)
def _template_cached(label: str, directory: str) -> RationalMatrix:
    path = Path(directory) / f"{label}.mat"
    if path.is_file():
        return RationalMatrix.from_text(path.read_text())
    return affine_cartan(label)


def load_template(label: str, directory: Path | None = None) -> RationalMatrix:
    """The shipped template for ``label``; family members beyond the files are generated."""
    if directory is None:
        from .groups import data_dir

        directory = data_dir() / "affine"
    return _template_cached(label, str(directory))


def candidate_labels(num_vertices: int) -> list[str]:
    labels = []
    if num_vertices >= 2:
        labels.append(f"A{num_vertices - 1}")
    if num_vertices >= 5:
        labels.append(f"D{num_vertices - 1}")
    labels += {7: ["E6"], 8: ["E7"], 9: ["E8"]}.get(num_vertices, [])
    return labels


def find_isomorphism(adj: Sequence[Sequence[int]], ref: Sequence[Sequence[int]]) -> list[int] | None:
    """Vertex bijection p with adj[i][j] == ref[p[i]][p[j]] for all i, j, or None.

    Weighted degree sequences are compared first; the search then extends a
    partial map along a breadth-first order of ``adj`` so every new vertex is
    constrained by an already-placed neighbour.
    """
    n = len(adj)
    if len(ref) != n:
        return None
    deg = [sum(row) for row in adj]
    rdeg = [sum(row) for row in ref]
    if sorted(deg) != sorted(rdeg):
        return None
    order: list[int] = []
    seen = set()
    for start in sorted(range(n), key=lambda v: -deg[v]):
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in range(n):
                if adj[v][w] and w not in seen:
                    seen.add(w)
                    queue.append(w)
    mapping = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for cand in range(n):
            if used[cand] or rdeg[cand] != deg[v] or ref[cand][cand] != adj[v][v]:
                continue
            if all(adj[v][order[q]] == ref[cand][mapping[order[q]]] for q in range(pos)):
                mapping[v] = cand
                used[cand] = True
                if extend(pos + 1):
                    return True
                used[cand] = False
                mapping[v] = -1
        return False

    return list(mapping) if extend(0) else None


def classify_graph(adj: Sequence[Sequence[int]]) -> tuple[str, list[int]]:
    """Match an undirected multigraph (loops ignored) against the affine ADE templates."""
    n = len(adj)
    clean = [[0 if i == j else adj[i][j] for j in range(n)] for i in range(n)]
    if any(clean[i][j] != clean[j][i] for i in range(n) for j in range(n)):
        raise SemanticError("not ADE")
    for label in candidate_labels(n):
        tmpl = load_template(label)
        ref = [[(2 if i == j else 0) - int(tmpl[i, j]) for j in range(n)] for i in range(n)]
        perm = find_isomorphism(clean, ref)
        if perm is not None:
            return label, perm
    raise SemanticError("not ADE")
