"""Maximal-clique enumeration and clique-based sentence selection."""

from __future__ import annotations

from .errors import CliqueBudgetExceeded
from .graph import SentenceGraph

DEFAULT_CLIQUE_CAP = 100_000


def maximal_cliques(g: SentenceGraph, cap: int = DEFAULT_CLIQUE_CAP) -> list[frozenset[int]]:
    """All maximal cliques of the graph, Bron-Kerbosch with pivoting.

    Isolated nodes come back as singleton cliques. The result is ordered
    by size (largest first), then by the sorted member tuple. Raises
    CliqueBudgetExceeded past `cap` cliques, since clique counts can grow
    exponentially.
    """
    neighbors = [frozenset(u for u, _ in g.adjacency[v]) for v in range(g.n)]
    found: list[frozenset[int]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            found.append(frozenset(r))
            if len(found) > cap:
                raise CliqueBudgetExceeded(
                    f"more than {cap} maximal cliques; raise the cap to continue"
                )
            return
        pivot = max(p | x, key=lambda u: len(p & neighbors[u]))
        for v in sorted(p - neighbors[pivot]):
            expand(r | {v}, p & neighbors[v], x & neighbors[v])
            p.remove(v)
            x.add(v)

    if g.n > 0:
        expand(set(), set(range(g.n)), set())
    found.sort(key=lambda c: (-len(c), sorted(c)))
    return found


def elect_representatives(
    cliques: list[frozenset[int]],
    closeness_scores: list[float],
    n_select: int,
) -> list[int]:
    """One representative sentence per clique, padded to the requested length.

    Singleton cliques are dropped first. Cliques are processed largest
    first (ties to the one with the smallest member); each contributes its
    highest-closeness member not already taken (ties to the lower index),
    or nothing if all members are taken. Representatives are then ranked
    by (clique size, closeness, lower index) and the list is padded with
    the highest-closeness unselected sentences. Output is in ascending
    (document) order.
    """
    if n_select < 1:
        raise ValueError("summary length must be at least 1")
    candidates = [c for c in cliques if len(c) > 1]
    candidates.sort(key=lambda c: (-len(c), min(c)))

    taken: set[int] = set()
    reps: list[tuple[int, float, int]] = []  # (clique size, closeness, index)
    for clique in candidates:
        free = [v for v in clique if v not in taken]
        if not free:
            continue
        rep = min(free, key=lambda v: (-closeness_scores[v], v))
        taken.add(rep)
        reps.append((len(clique), closeness_scores[rep], rep))

    reps.sort(key=lambda item: (-item[0], -item[1], item[2]))
    chosen = [idx for _, _, idx in reps[:n_select]]

    if len(chosen) < n_select:
        rest = [v for v in range(len(closeness_scores)) if v not in chosen]
        rest.sort(key=lambda v: (-closeness_scores[v], v))
        chosen.extend(rest[: n_select - len(chosen)])
    return sorted(chosen)
