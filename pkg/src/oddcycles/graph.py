"""Undirected simple graphs: representation, pair counting, generators, file I/O.

Vertices are dense 0-based integers.  Every graph keeps, per vertex, a sorted
neighbor tuple and a neighborhood bitmask (arbitrary-precision int), so set
intersections and pair counts reduce to `&` plus popcount.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .rng import SplitMix64

__all__ = [
    "Graph",
    "VertexSet",
    "GraphFormatError",
    "edges_between",
    "edges_inside",
    "gen_random_regular",
    "gen_paley",
    "load_edge_list",
    "save_edge_list",
    "bits",
]


class GraphFormatError(ValueError):
    """Malformed edge-list input; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def bits(mask: int) -> Iterator[int]:
    """Yield set-bit positions of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for v in ids:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class VertexSet:
    """Sorted vertex ids plus their bitmask."""

    members: tuple[int, ...]
    mask: int

    @classmethod
    def from_iterable(cls, ids: Iterable[int]) -> "VertexSet":
        members = tuple(sorted(set(ids)))
        return cls(members, mask_of(members))

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        return cls(tuple(bits(mask)), mask)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: int) -> bool:
        return bool((self.mask >> v) & 1)

    def intersection_mask(self, other_mask: int) -> int:
        return self.mask & other_mask


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph with sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...] = field(repr=False)
    edge_count: int

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        neighbor_masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            neighbor_masks[u] |= 1 << v
            neighbor_masks[v] |= 1 << u
        adj = tuple(tuple(bits(m)) for m in neighbor_masks)
        edge_count = sum(m.bit_count() for m in neighbor_masks) // 2
        return cls(n, adj, tuple(neighbor_masks), edge_count)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.masks[u] >> v) & 1)

    def neighbor_mask(self, v: int) -> int:
        return self.masks[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        for u in range(self.n):
            high = self.masks[u] >> (u + 1)
            for off in bits(high):
                yield u, u + 1 + off

    def vertices(self) -> range:
        return range(self.n)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_regular(self) -> tuple[bool, float]:
        """(all degrees equal, average degree)."""
        if self.n == 0:
            return True, 0.0
        degs = [len(a) for a in self.adj]
        return min(degs) == max(degs), 2.0 * self.edge_count / self.n

    def density(self) -> float:
        """Edge density e / C(n,2)."""
        pairs = self.n * (self.n - 1) // 2
        return self.edge_count / pairs if pairs else 0.0

    def restricted_to(self, keep_mask: int) -> "Graph":
        """Same vertex universe, edges with both ends inside `keep_mask`."""
        new_masks = tuple(
            (self.masks[v] & keep_mask) if (keep_mask >> v) & 1 else 0
            for v in range(self.n)
        )
        adj = tuple(tuple(bits(m)) for m in new_masks)
        edge_count = sum(m.bit_count() for m in new_masks) // 2
        return Graph(self.n, adj, new_masks, edge_count)


def edges_between(g: Graph, x: VertexSet, y: VertexSet) -> int:
    """Number of edges with one end in `x` and the other in `y`.

    The sets must be disjoint: for overlapping sets the pair count is
    ambiguous and is never needed, so such input is rejected.
    """
    if x.mask & y.mask:
        raise ValueError("edges_between requires disjoint vertex sets")
    if len(x) > len(y):
        x, y = y, x
    ymask = y.mask
    return sum((g.masks[u] & ymask).bit_count() for u in x.members)


def edges_inside(g: Graph, x: VertexSet) -> int:
    """Number of edges with both endpoints in `x`, each counted once."""
    xmask = x.mask
    return sum((g.masks[u] & xmask).bit_count() for u in x.members) // 2


def gen_random_regular(n: int, d: int, seed: int) -> Graph:
    """Random simple d-regular graph via the pairing model, restarted on collisions.

    Deterministic per seed.  Requires n*d even and 0 <= d < n.
    """
    if d < 0 or d >= n:
        raise ValueError("need 0 <= d < n")
    if (n * d) % 2 != 0:
        raise ValueError("n*d must be even for a d-regular graph")
    if d == 0:
        return Graph.from_edges(n, [])
    rng = SplitMix64.derive(seed, n, d)
    stubs = [v for v in range(n) for _ in range(d)]
    while True:
        rng.shuffle(stubs)
        seen: set[tuple[int, int]] = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            e = (u, v) if u < v else (v, u)
            if e in seen:
                ok = False
                break
            seen.add(e)
        if ok:
            return Graph.from_edges(n, seen)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def gen_paley(q: int) -> Graph:
    """Paley graph on Z_q: u ~ v iff u - v is a nonzero quadratic residue.

    Requires q prime with q = 1 (mod 4), so that the residue relation
    is symmetric; the result is (q-1)/2-regular.
    """
    if not _is_prime(q):
        raise ValueError(f"q={q} is not prime (prime-power fields unsupported)")
    if q % 4 != 1:
        raise ValueError(f"q={q} must be 1 mod 4, otherwise the relation is not symmetric")
    residues = {(x * x) % q for x in range(1, q)}
    edges = []
    for u in range(q):
        for r in residues:
            v = (u + r) % q
            if u < v:
                edges.append((u, v))
    return Graph.from_edges(q, edges)


def load_edge_list(path: str) -> Graph:
    """Read a whitespace-separated "u v" edge list.

    '#' starts a comment; an optional first line "n=<count>" fixes the vertex
    count (otherwise 1 + max id is used).  Self-loops and out-of-range ids are
    rejected with the offending line number.
    """
    edges: list[tuple[int, int]] = []
    declared_n: int | None = None
    max_id = -1
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("n="):
                if declared_n is not None or edges:
                    raise GraphFormatError("header n=<count> allowed once, before edges", lineno)
                try:
                    declared_n = int(line[2:])
                except ValueError:
                    raise GraphFormatError(f"bad header {line!r}", lineno) from None
                if declared_n < 0:
                    raise GraphFormatError("n must be nonnegative", lineno)
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError(f"non-integer vertex id in {line!r}", lineno) from None
            if u < 0 or v < 0:
                raise GraphFormatError(f"negative vertex id in {line!r}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop {u} {v}", lineno)
            if declared_n is not None and (u >= declared_n or v >= declared_n):
                raise GraphFormatError(
                    f"vertex id exceeds declared n={declared_n}", lineno
                )
            edges.append((u, v))
            max_id = max(max_id, u, v)
    n = declared_n if declared_n is not None else max_id + 1
    return Graph.from_edges(n, edges)


def save_edge_list(g: Graph, path: str) -> None:
    """Write the canonical edge list: "n=<count>" header, then edges sorted with u < v."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"n={g.n}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def binom2(n: int) -> float:
    return n * (n - 1) / 2.0
