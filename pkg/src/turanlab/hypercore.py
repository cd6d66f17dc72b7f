"""r-uniform hypergraphs, links, induced subgraphs and forbidden-pattern detection."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InvalidArgument, ParseError, ValidationError
from .kernels import patterns as _pk
from .kernels.bits import edge_masks

Edge = tuple

SIGMA_MEMBER = "SigmaMember"
GENERALIZED_TRIANGLE = "GeneralizedTriangle"
THIN_VIOLATION = "ThinViolation"
CLIQUE = "Clique"


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on vertices ``0..n-1``.

    Edges are stored as strictly increasing tuples in lexicographic order, so
    two graphs compare equal exactly when their edge sets coincide.  Links of
    sets of size ``r - 1`` are 1-graphs, which is why ``r >= 1`` is accepted.
    """

    r: int
    n: int
    edges: tuple = ()

    def __post_init__(self):
        if self.r < 1:
            raise ValidationError(f"uniformity must be positive, got {self.r}")
        if self.n < 0:
            raise ValidationError(f"vertex count must be non-negative, got {self.n}")
        normalized = set()
        for e in self.edges:
            t = tuple(sorted(int(v) for v in e))
            if len(t) != self.r:
                raise ValidationError(f"edge {tuple(e)} has {len(t)} vertices, expected {self.r}")
            if len(set(t)) != self.r:
                raise ValidationError(f"edge {tuple(e)} repeats a vertex")
            if t and (t[0] < 0 or t[-1] >= self.n):
                raise ValidationError(f"edge {tuple(e)} has a vertex outside 0..{self.n - 1}")
            normalized.add(t)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge):
        return tuple(sorted(edge)) in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def masks(self) -> Optional[np.ndarray]:
        """Per-edge uint64 bitmasks, or None when n > 64."""
        if self.n > 64:
            return None
        return edge_masks(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        return np.array(self.edges, dtype=np.int64).reshape(len(self.edges), self.r)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def with_edges(self, edges: Iterable[Sequence[int]]) -> "Hypergraph":
        return Hypergraph(self.r, self.n, tuple(edges))

    def __repr__(self):
        return f"Hypergraph(r={self.r}, n={self.n}, |E|={len(self.edges)})"


@dataclass(frozen=True)
class PatternHit:
    kind: str
    witness_edges: tuple
    witness_vertices: frozenset = field(default=frozenset())

    def to_dict(self):
        return {
            "kind": self.kind,
            "witness_edges": [list(e) for e in self.witness_edges],
            "witness_vertices": sorted(self.witness_vertices),
        }


def complete(n: int, r: int) -> Hypergraph:
    return Hypergraph(r, n, tuple(itertools.combinations(range(n), r)))


def generalized_triangle(r: int) -> Hypergraph:
    """T_r on 2r - 1 vertices, 0-based."""
    d1 = tuple(range(r))
    d2 = tuple(range(r - 1)) + (r,)
    d3 = tuple(range(r - 1, 2 * r - 1))
    return Hypergraph(r, 2 * r - 1, (d1, d2, d3))


# ---------------------------------------------------------------------------
# HGR text format


def parse_hgr(text) -> Hypergraph:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"non-ASCII input: {exc}") from None
    lines = [
        (num, line.strip())
        for num, line in enumerate(text.split("\n"), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("missing header line 'r n m'")
    num, header = lines[0]
    fields = header.split()
    if len(fields) != 3:
        raise ParseError(f"line {num}: header must be 'r n m', got {header!r}")
    try:
        r, n, m = (int(x) for x in fields)
    except ValueError:
        raise ParseError(f"line {num}: header fields must be integers") from None
    if r < 1 or n < 0 or m < 0:
        raise ParseError(f"line {num}: invalid header values {header!r}")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for num, line in body:
        try:
            e = tuple(int(x) for x in line.split())
        except ValueError:
            raise ParseError(f"line {num}: non-integer vertex id in {line!r}") from None
        if len(e) != r:
            raise ValidationError(f"line {num}: expected {r} vertices, got {len(e)}")
        edges.append(e)
    return Hypergraph(r, n, tuple(edges))


def to_hgr(F: Hypergraph) -> str:
    out = [f"{F.r} {F.n} {len(F.edges)}"]
    out.extend(" ".join(str(v) for v in e) for e in F.edges)
    return "\n".join(out) + "\n"


def read_hgr(path) -> Hypergraph:
    return parse_hgr(Path(path).read_bytes())


def write_hgr(F: Hypergraph, path) -> None:
    Path(path).write_bytes(to_hgr(F).encode("ascii"))


# ---------------------------------------------------------------------------
# structure


def _vertex_set(F: Hypergraph, I) -> frozenset:
    s = frozenset(int(v) for v in I)
    bad = [v for v in s if not 0 <= v < F.n]
    if bad:
        raise InvalidArgument(f"vertices {sorted(bad)} are not in V(F)")
    return s


def link(F: Hypergraph, I) -> Hypergraph:
    """The (r - |I|)-graph of sets J disjoint from I with I | J an edge."""
    I = _vertex_set(F, I)
    if not 1 <= len(I) < F.r:
        raise InvalidArgument(f"need 1 <= |I| < r = {F.r}, got |I| = {len(I)}")
    rest = []
    for e in F.edges:
        if I.issubset(e):
            rest.append(tuple(v for v in e if v not in I))
    return Hypergraph(F.r - len(I), F.n, tuple(rest))


def induce(F: Hypergraph, X):
    """Subgraph induced on X, relabelled 0..|X|-1 by increasing original id.

    Returns ``(graph, relabel)`` where ``relabel`` maps old ids to new ones.
    """
    X = _vertex_set(F, X)
    relabel = {v: i for i, v in enumerate(sorted(X))}
    edges = tuple(
        tuple(relabel[v] for v in e) for e in F.edges if all(v in relabel for v in e)
    )
    return Hypergraph(F.r, len(X), edges), relabel


def covers_pairs(F: Hypergraph) -> bool:
    if F.n < 2:
        return True
    covered = np.zeros((F.n, F.n), dtype=bool)
    for e in F.edges:
        for u, v in itertools.combinations(e, 2):
            covered[u, v] = True
    return bool(covered[np.triu_indices(F.n, 1)].all())


def handshake_holds(F: Hypergraph) -> bool:
    if F.r == 1:
        return True
    return F.r * len(F) == sum(len(link(F, {v})) for v in range(F.n))


# ---------------------------------------------------------------------------
# detectors


def _thin_pair(F: Hypergraph):
    if F.masks is not None:
        i, j = _pk.scan_thin(F.masks, F.r)
        return None if i < 0 else (i, j)
    sets = [frozenset(e) for e in F.edges]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if len(sets[i] & sets[j]) == F.r - 1:
                return i, j
    return None


def _triple(F: Hypergraph, kind: int):
    if F.masks is not None:
        i, j, k = _pk.scan_triples(F.masks, F.r, kind)
        return None if i < 0 else (i, j, k)
    sets = [frozenset(e) for e in F.edges]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            core = sets[i] & sets[j]
            if len(core) != F.r - 1:
                continue
            sym = sets[i] ^ sets[j]
            for k in range(len(sets)):
                if sym <= sets[k] and (kind == _pk.SIGMA or not core & sets[k]):
                    return i, j, k
    return None


def _hit(F, kind, idx):
    edges = tuple(F.edges[i] for i in idx)
    return PatternHit(kind, edges, frozenset(v for e in edges for v in e))


def find_thin_violation(F: Hypergraph) -> Optional[PatternHit]:
    """Two edges sharing r - 1 vertices (a copy of D_r), or None if F is thin."""
    found = _thin_pair(F)
    return None if found is None else _hit(F, THIN_VIOLATION, found)


def find_sigma_member(F: Hypergraph) -> Optional[PatternHit]:
    """Edges A, B, C with |A & B| = r - 1 and A ^ B contained in C."""
    found = _triple(F, _pk.SIGMA)
    return None if found is None else _hit(F, SIGMA_MEMBER, found)


def find_generalized_triangle(F: Hypergraph) -> Optional[PatternHit]:
    """Like :func:`find_sigma_member` but C must also miss A & B (a copy of T_r)."""
    found = _triple(F, _pk.TRIANGLE)
    return None if found is None else _hit(F, GENERALIZED_TRIANGLE, found)


def find_clique(F: Hypergraph, t: int) -> Optional[PatternHit]:
    """A K_t in a 2-graph, lexicographically first by vertex set."""
    if F.r != 2:
        raise InvalidArgument(f"find_clique needs a 2-graph, got r = {F.r}")
    if t < 2:
        raise InvalidArgument(f"clique size must be at least 2, got {t}")
    adj = [0] * F.n
    for u, v in F.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    def extend(clique, cand):
        if len(clique) == t:
            return clique
        if len(clique) + cand.bit_count() < t:
            return None
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            # only higher-numbered candidates keep the set increasing
            found = extend(clique + [v], cand & adj[v])
            if found is not None:
                return found
            if len(clique) + cand.bit_count() < t:
                return None
        return None

    found = extend([], (1 << F.n) - 1)
    if found is None:
        return None
    edges = tuple(itertools.combinations(found, 2))
    return PatternHit(CLIQUE, edges, frozenset(found))
