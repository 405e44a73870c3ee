"""Independent brute-force oracles used only by the test suite.

Everything here works from the edge list alone and avoids the package's
search-tree machinery, so agreement is meaningful.
"""

from itertools import combinations


def adjacency_masks(g) -> list[int]:
    nbr = [0] * g.n
    for u, v in g.edges():
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    return nbr


def brute_census(g) -> list[int]:
    """Per-size clique counts via a subset DP over all 2^n masks.

    A set with lowest vertex v is a clique iff the rest is a clique lying
    inside N(v). Counts include the empty clique; trailing zeros trimmed.
    """
    nbr = adjacency_masks(g)
    is_clique = bytearray(1 << g.n)
    is_clique[0] = 1
    counts = [0] * (g.n + 1)
    counts[0] = 1
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        rest = mask ^ low
        if is_clique[rest] and rest & nbr[low.bit_length() - 1] == rest:
            is_clique[mask] = 1
            counts[mask.bit_count()] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def brute_count(g) -> int:
    return sum(brute_census(g))


def brute_cliques(g) -> set[frozenset]:
    """Every clique as a frozenset, by filtering all subsets."""
    nbr = adjacency_masks(g)
    out = {frozenset()}
    for mask in range(1, 1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if all(nbr[u] >> v & 1 for u, v in combinations(vs, 2)):
            out.add(frozenset(vs))
    return out


def _all_simple_paths(nbr, a, b, banned):
    """Simple a-b paths avoiding `banned` internally, shortest first."""
    queue = [(a,)]
    found = []
    while queue:
        path = queue.pop(0)
        last = path[-1]
        if last == b:
            found.append(path)
            continue
        for w in range(len(nbr)):
            if not nbr[last] >> w & 1 or w in path:
                continue
            if w != b and banned >> w & 1:
                continue
            queue.append(path + (w,))
    return found


def find_subdivision_alt(g, t) -> bool:
    """Second opinion on K_t-subdivision existence, organized differently.

    Branch sets are scanned in reverse lexicographic order with no degree
    pruning, and every pair (adjacent or not) is routed by trying all
    simple connecting paths shortest-first. Exponential; keep n tiny.
    """
    n = g.n
    if t <= 0:
        return True
    if t == 1:
        return n >= 1
    nbr = adjacency_masks(g)
    if t == 2:
        return any(nbr[v] for v in range(n))

    def route(pairs, used, idx):
        if idx == len(pairs):
            return True
        a, b = pairs[idx]
        for path in _all_simple_paths(nbr, a, b, used):
            internal = path[1:-1]
            if any(used >> w & 1 for w in internal):
                continue
            add = 0
            for w in internal:
                add |= 1 << w
            if route(pairs, used | add, idx + 1):
                return True
        return False

    for branch in sorted(combinations(range(n), t), reverse=True):
        used = 0
        for v in branch:
            used |= 1 << v
        if route(list(combinations(branch, 2)), used, 0):
            return True
    return False
