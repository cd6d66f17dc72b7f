"""Blowups: construction, cloning, partition recovery and edge classification."""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from pathlib import Path
from typing import Optional

from .errors import (
    DimensionMismatch,
    InvalidArgument,
    InvalidAssignment,
    MemoryBudget,
    UnsupportedBase,
)
from .hypercore import Hypergraph, covers_pairs, link, read_hgr

DEFAULT_TUPLE_CAP = 10**6


@dataclass(frozen=True)
class BlowupSpec:
    """A base graph on m vertices plus a map from n new vertices to base vertices.

    Parts may be empty, which models deleted base vertices.
    """

    base: Hypergraph
    assignment: tuple

    def __post_init__(self):
        a = tuple(int(x) for x in self.assignment)
        bad = [x for x in a if not 0 <= x < self.base.n]
        if bad:
            raise InvalidAssignment(f"assignment values {sorted(set(bad))} outside 0..{self.base.n - 1}")
        object.__setattr__(self, "assignment", a)

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def m(self) -> int:
        return self.base.n

    def parts(self) -> list:
        out = [[] for _ in range(self.m)]
        for v, p in enumerate(self.assignment):
            out[p].append(v)
        return out

    def part_sizes(self) -> list:
        sizes = [0] * self.m
        for p in self.assignment:
            sizes[p] += 1
        return sizes

    @classmethod
    def from_part_sizes(cls, base: Hypergraph, sizes) -> "BlowupSpec":
        if len(sizes) != base.n:
            raise InvalidAssignment(f"{len(sizes)} part sizes for a base on {base.n} vertices")
        if any(s < 0 for s in sizes):
            raise InvalidAssignment("part sizes must be non-negative")
        return cls(base, tuple(i for i, s in enumerate(sizes) for _ in range(s)))

    @classmethod
    def identity(cls, base: Hypergraph) -> "BlowupSpec":
        return cls(base, tuple(range(base.n)))

    def to_dict(self, base_ref=None):
        return {"base": base_ref, "assignment": list(self.assignment)}


def resolve_base(ref, relative_to=None, cache_dir=None) -> Hypergraph:
    """Registry key ``steiner:<m>:<r>`` or a path to an HGR file."""
    if isinstance(ref, str) and ref.startswith("steiner:"):
        from .designs import build_steiner

        try:
            _, m, r = ref.split(":")
            return build_steiner(int(m), int(r), cache_dir=cache_dir).base
        except ValueError:
            raise InvalidArgument(f"bad registry key {ref!r}, expected steiner:<m>:<r>") from None
    path = Path(ref)
    if relative_to is not None and not path.is_absolute():
        path = Path(relative_to) / path
    return read_hgr(path)


def spec_from_dict(data, relative_to=None, cache_dir=None) -> BlowupSpec:
    if "base" not in data or "assignment" not in data:
        raise InvalidArgument("BlowupSpec JSON needs 'base' and 'assignment'")
    return BlowupSpec(resolve_base(data["base"], relative_to, cache_dir), tuple(data["assignment"]))


def read_spec(path, cache_dir=None) -> BlowupSpec:
    path = Path(path)
    with open(path) as fh:
        return spec_from_dict(json.load(fh), path.parent, cache_dir)


def blow_up(spec: BlowupSpec) -> Hypergraph:
    parts = spec.parts()
    edges = []
    for e in spec.base.edges:
        edges.extend(itertools.product(*(parts[i] for i in e)))
    return Hypergraph(spec.base.r, spec.n, tuple(edges))


def blowup_size(spec: BlowupSpec) -> int:
    sizes = spec.part_sizes()
    return sum(prod(sizes[i] for i in e) for e in spec.base.edges)


def clone_vertex(F: Hypergraph, v: int, k: int) -> Hypergraph:
    """Add k - 1 fresh vertices whose links copy the link of v."""
    if not 0 <= v < F.n:
        raise InvalidArgument(f"vertex {v} not in V(F)")
    if k < 1:
        raise InvalidArgument(f"clone count must be at least 1, got {k}")
    if k == 1:
        return F
    if F.r == 1:
        lk = [()] if (v,) in F.edge_set else []
    else:
        lk = link(F, {v}).edges
    new = list(F.edges)
    for w in range(F.n, F.n + k - 1):
        new.extend(tuple(sorted(J + (w,))) for J in lk)
    return Hypergraph(F.r, F.n + k - 1, tuple(new))


def clone_all(F: Hypergraph, k: int) -> Hypergraph:
    """Clone every vertex to a set of size k."""
    return blow_up(BlowupSpec.from_part_sizes(F, [k] * F.n))


def transversal_violations(F: Hypergraph, spec: BlowupSpec) -> list:
    if F.n != spec.n:
        raise DimensionMismatch(f"graph has {F.n} vertices, spec has {spec.n}")
    a = spec.assignment
    return [e for e in F.edges if len({a[v] for v in e}) < len(e)]


def epsilon_balance(spec: BlowupSpec) -> float:
    n, m = spec.n, spec.m
    if n < 1:
        raise InvalidArgument("epsilon_balance needs at least one vertex")
    avg = Fraction(n, m)
    return float(max(abs(s - avg) for s in spec.part_sizes()) / n)


# ---------------------------------------------------------------------------
# partition recovery


def recover_partition(G: Hypergraph, base: Hypergraph) -> Optional[BlowupSpec]:
    """An assignment exhibiting G as a blowup of base, or None.

    Vertices that are non-adjacent with identical links can always share a
    part, so they are merged first; the resulting classes are then mapped to
    base vertices by backtracking with edge/non-edge consistency checks.
    """
    if not covers_pairs(base):
        raise UnsupportedBase("base does not cover pairs; the blowup partition is not unique")
    if G.r != base.r:
        return None
    r, m = G.r, base.n
    if m == 0:
        return BlowupSpec(base, ()) if G.n == 0 else None

    links = [set() for _ in range(G.n)]
    adjacent = [set() for _ in range(G.n)]
    for e in G.edges:
        for v in e:
            links[v].add(tuple(u for u in e if u != v))
            adjacent[v].update(u for u in e if u != v)
    classes: list = []
    owner = [-1] * G.n
    for v in range(G.n):
        for ci, members in enumerate(classes):
            rep = members[0]
            if rep not in adjacent[v] and links[rep] == links[v]:
                members.append(v)
                owner[v] = ci
                break
        else:
            owner[v] = len(classes)
            classes.append([v])

    k = len(classes)
    reps = [c[0] for c in classes]
    is_edge = G.edge_set
    base_edges = base.edge_set

    # order classes so each new one touches already-placed ones where possible
    order: list = []
    placed = set()
    class_adj = [set() for _ in range(k)]
    for e in G.edges:
        cs = {owner[v] for v in e}
        for c in cs:
            class_adj[c].update(cs - {c})
    while len(order) < k:
        frontier = [c for c in range(k) if c not in placed and class_adj[c] & placed]
        nxt = min(frontier) if frontier else min(c for c in range(k) if c not in placed)
        order.append(nxt)
        placed.add(nxt)

    image = [-1] * k

    def consistent(pos):
        c = order[pos]
        earlier = order[:pos]
        for others in itertools.combinations(earlier, r - 1):
            cls = (c,) + others
            verts = tuple(sorted(reps[x] for x in cls))
            imgs = [image[x] for x in cls]
            mapped = len(set(imgs)) == r and tuple(sorted(imgs)) in base_edges
            if (verts in is_edge) != mapped:
                return False
        return True

    def place(pos):
        if pos == k:
            return True
        c = order[pos]
        for j in range(m):
            image[c] = j
            if consistent(pos) and place(pos + 1):
                return True
        image[c] = -1
        return False

    if not place(0):
        return None
    spec = BlowupSpec(base, tuple(image[owner[v]] for v in range(G.n)))
    if blow_up(spec) != G:  # pragma: no cover - guarded by the consistency checks
        return None
    return spec


# ---------------------------------------------------------------------------
# good / bad / missing edges


@dataclass
class EdgeClassification:
    good: tuple
    bad: tuple
    missing: tuple
    a_counts: dict
    b_counts: dict
    max_tuple: int

    def to_dict(self):
        def enc(counts):
            return {",".join(map(str, k)): v for k, v in sorted(counts.items())}

        return {
            "good": len(self.good),
            "bad": len(self.bad),
            "missing": len(self.missing),
            "bad_edges": [list(e) for e in self.bad],
            "missing_edges": [list(e) for e in self.missing],
            "max_tuple": self.max_tuple,
            "a_counts": enc(self.a_counts),
            "b_counts": enc(self.b_counts),
        }


def _tuple_counts(edges, depth):
    counts = defaultdict(int)
    for e in edges:
        for k in range(depth + 1):
            for I in itertools.combinations(e, k):
                counts[I] += 1
    return dict(counts)


def classify_edges(
    F: Hypergraph, spec: BlowupSpec, max_tuple: int = 2, tuple_cap: int = DEFAULT_TUPLE_CAP
) -> EdgeClassification:
    """Split F against B = blow_up(spec) and count, for each small vertex tuple I,
    the missing edges (a) and bad edges (b) containing it."""
    if F.n != spec.n:
        raise DimensionMismatch(f"graph has {F.n} vertices, spec has {spec.n}")
    if F.r != spec.base.r:
        raise DimensionMismatch("graph and base have different uniformity")
    if not 0 <= max_tuple <= F.r:
        raise InvalidArgument(f"max_tuple must lie in 0..{F.r}")
    B = blow_up(spec)
    good = tuple(sorted(F.edge_set & B.edge_set))
    bad = tuple(sorted(F.edge_set - B.edge_set))
    missing = tuple(sorted(B.edge_set - F.edge_set))
    per_edge = sum(comb(F.r, k) for k in range(max_tuple + 1))
    if (len(bad) + len(missing)) * per_edge > tuple_cap:
        raise MemoryBudget(
            f"tuple enumeration needs up to {(len(bad) + len(missing)) * per_edge} entries (cap {tuple_cap})"
        )
    return EdgeClassification(
        good, bad, missing, _tuple_counts(missing, max_tuple), _tuple_counts(bad, max_tuple), max_tuple
    )


def recursion_violations(cls: EdgeClassification, r: int) -> list:
    """Tuples I breaking sum_j c(I+j) >= c(I) >= sum_j c(I+j) / r, for c in {a, b}."""
    out = []
    for name, counts in (("a", cls.a_counts), ("b", cls.b_counts)):
        child_sum = defaultdict(int)
        for J, c in counts.items():
            if len(J) == 0:
                continue
            for x in range(len(J)):
                child_sum[J[:x] + J[x + 1 :]] += c
        for I, c in counts.items():
            if len(I) >= min(cls.max_tuple, r):
                continue
            s = child_sum.get(I, 0)
            if not (s >= c and r * c >= s):
                out.append((name, I, c, s))
    return out
