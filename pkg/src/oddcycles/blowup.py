"""Layered cycle blow-up graphs.

A blow-up of the odd cycle C_l (l = 2k+1) replaces each cycle vertex by a
class of m vertices; any spanning subgraph of the complete blow-up is handled
here.  Classes are kept in the fixed order (U_k, ..., U_1, W, V_1, ..., V_k);
consecutive entries of that list are adjacent around the cycle, and so is the
closing pair (V_k, U_k).  Only edges between cycle-adjacent classes are stored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, VertexSet, bits
from .rng import SplitMix64

__all__ = ["BlowupGraph", "gen_blowup_cycle"]


@dataclass(frozen=True)
class BlowupGraph:
    """A C_{2k+1}(m)-graph with its layer partition and degree window.

    `layers[0..2k]` are (U_k, ..., U_1, W, V_1, ..., V_k); `graph` holds the
    kept edges over the ambient vertex universe (layer ids are global, so a
    blow-up extracted from a host keeps host ids).  The window parameters
    (alpha, p, eps) describe the intended inter-layer degrees (alpha +- eps)*p*m;
    `audit_degree_window` checks them, it never assumes them.
    """

    k: int
    m: int
    alpha: float
    p: float
    eps: float
    layers: tuple[VertexSet, ...]
    graph: Graph
    trace: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        ell = 2 * self.k + 1
        if len(self.layers) != ell:
            raise ValueError(f"expected {ell} layers, got {len(self.layers)}")
        for layer in self.layers:
            if len(layer) != self.m:
                raise ValueError("all layers must have size m")

    # Layer access ---------------------------------------------------------

    @property
    def ell(self) -> int:
        return 2 * self.k + 1

    def u_set(self, i: int) -> VertexSet:
        """U_i for 1 <= i <= k."""
        return self.layers[self.k - i]

    @property
    def w_set(self) -> VertexSet:
        return self.layers[self.k]

    def v_set(self, i: int) -> VertexSet:
        """V_i for 1 <= i <= k."""
        return self.layers[self.k + i]

    def layer_of(self) -> dict[int, tuple[int, int]]:
        """Map vertex id -> (layer index, offset within layer)."""
        table: dict[int, tuple[int, int]] = {}
        for li, layer in enumerate(self.layers):
            for off, v in enumerate(layer.members):
                table[v] = (li, off)
        return table

    def adjacent_layer_indices(self, li: int) -> tuple[int, int]:
        ell = self.ell
        return ((li - 1) % ell, (li + 1) % ell)

    def neighbors_in_layer(self, v: int, li: int) -> int:
        """Bitmask of v's blow-up neighbors inside layers[li]."""
        return self.graph.masks[v] & self.layers[li].mask

    # Audits -----------------------------------------------------------------

    def audit_degree_window(self, eps: float | None = None) -> list[tuple[int, int, int]]:
        """Inter-layer degree check against (alpha +- eps)*p*m.

        Returns violations as (vertex, layer_index, degree); empty means every
        vertex meets the window toward both cycle-adjacent layers.
        """
        eps = self.eps if eps is None else eps
        lo = (self.alpha - eps) * self.p * self.m
        hi = (self.alpha + eps) * self.p * self.m
        bad: list[tuple[int, int, int]] = []
        for li, layer in enumerate(self.layers):
            for lj in self.adjacent_layer_indices(li):
                jmask = self.layers[lj].mask
                for v in layer.members:
                    deg = (self.graph.masks[v] & jmask).bit_count()
                    if deg < lo or deg > hi:
                        bad.append((v, lj, deg))
        return bad

    def only_consecutive_edges(self) -> bool:
        """True iff every stored edge joins cycle-adjacent layers."""
        locate = self.layer_of()
        ell = self.ell
        for u, v in self.graph.edges():
            lu = locate.get(u)
            lv = locate.get(v)
            if lu is None or lv is None:
                return False
            d = abs(lu[0] - lv[0])
            if d != 1 and d != ell - 1:
                return False
        return True

    # Serialization ----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "m": self.m,
            "alpha": self.alpha,
            "p": self.p,
            "eps": self.eps,
            "n": self.graph.n,
            "layers": [list(layer.members) for layer in self.layers],
            "edges": [[u, v] for u, v in self.graph.edges()],
            "trace": self.trace,
        }

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json_dict(), fh, sort_keys=True, indent=2)
            fh.write("\n")

    @classmethod
    def from_json_dict(cls, data: dict) -> "BlowupGraph":
        layers = tuple(VertexSet.from_iterable(ids) for ids in data["layers"])
        graph = Graph.from_edges(data["n"], [tuple(e) for e in data["edges"]])
        return cls(
            k=data["k"],
            m=data["m"],
            alpha=data["alpha"],
            p=data["p"],
            eps=data["eps"],
            layers=layers,
            graph=graph,
            trace=data.get("trace", {}),
        )

    @classmethod
    def load(cls, path: str) -> "BlowupGraph":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json_dict(json.load(fh))


def _layer_ranges(ell: int, m: int) -> list[range]:
    return [range(i * m, (i + 1) * m) for i in range(ell)]


def gen_blowup_cycle(
    ell: int,
    m: int,
    keep_prob: float,
    seed: int,
    eps: float = 0.25,
) -> BlowupGraph:
    """Random spanning subgraph of the complete cycle blow-up C_ell(m).

    Each edge between cycle-adjacent classes is kept independently with
    probability `keep_prob`; deterministic per seed.  `ell` must be odd and
    at least 3 so the layer labeling (U_k,...,U_1,W,V_1,...,V_k) applies.
    The recorded window is (keep_prob +- eps) with p = 1.
    """
    if ell < 3 or ell % 2 == 0:
        raise ValueError("ell must be odd and >= 3")
    if m < 1:
        raise ValueError("m must be at least 1")
    if not 0.0 <= keep_prob <= 1.0:
        raise ValueError("keep_prob must lie in [0, 1]")
    k = (ell - 1) // 2
    rng = SplitMix64.derive(seed, ell, m)
    ranges = _layer_ranges(ell, m)
    edges: list[tuple[int, int]] = []
    for li in range(ell):
        lj = (li + 1) % ell
        for u in ranges[li]:
            for v in ranges[lj]:
                if keep_prob >= 1.0 or rng.random() < keep_prob:
                    edges.append((u, v))
    graph = Graph.from_edges(ell * m, edges)
    layers = tuple(VertexSet.from_iterable(r) for r in ranges)
    return BlowupGraph(
        k=k, m=m, alpha=keep_prob, p=1.0, eps=eps, layers=layers, graph=graph
    )


def union_with_host_edges(h: BlowupGraph, extra_edges: Iterable[tuple[int, int]]) -> Graph:
    """Host graph containing all blow-up edges plus `extra_edges` (for tests/CLI)."""
    edges = list(h.graph.edges())
    edges.extend(extra_edges)
    return Graph.from_edges(h.graph.n, set(tuple(sorted(e)) for e in edges))
