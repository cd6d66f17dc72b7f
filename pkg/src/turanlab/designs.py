"""Exact cover by dancing links and (m, r, r-1) Steiner systems."""

from __future__ import annotations

import itertools
import os
import threading
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
from filelock import FileLock

from .errors import BudgetExceeded, InvalidArgument, NoSuchDesign, ValidationError
from .hypercore import Hypergraph, find_thin_violation, read_hgr, write_hgr
from .kernels import dlx

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class ExactCoverInstance:
    num_items: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        for i, row in enumerate(rows):
            if not row:
                raise ValidationError(f"row {i} is empty")
            if len(set(row)) != len(row):
                raise ValidationError(f"row {i} repeats an item")
            if min(row) < 0 or max(row) >= self.num_items:
                raise ValidationError(f"row {i} has an item outside 0..{self.num_items - 1}")
        object.__setattr__(self, "rows", rows)


@dataclass
class CoverOutcome:
    rows: Optional[tuple]
    nodes: int
    status: str  # "found" | "exhausted"


def solve_exact_cover(
    inst: ExactCoverInstance,
    budget: int = DEFAULT_BUDGET,
    forced: Sequence[int] = (),
) -> Optional[tuple]:
    """Row indices partitioning the items, or None when no cover exists.

    ``forced`` rows are put into the solution before the search starts.
    Raises :class:`BudgetExceeded` if ``budget`` search nodes run out first.
    """
    return solve_exact_cover_detailed(inst, budget, forced).rows


def solve_exact_cover_detailed(inst, budget=DEFAULT_BUDGET, forced=()) -> CoverOutcome:
    forced = tuple(int(i) for i in forced)
    seen = set()
    for i in forced:
        if not 0 <= i < len(inst.rows):
            raise InvalidArgument(f"forced row {i} does not exist")
        if seen.intersection(inst.rows[i]):
            return CoverOutcome(None, 0, "exhausted")
        seen.update(inst.rows[i])
    if inst.num_items == 0:
        return CoverOutcome(forced, 0, "found")
    L, R, U, D, C, ROW, S, first = dlx.build_links(inst.num_items, inst.rows)
    status, chosen, nodes = dlx.search(
        L, R, U, D, C, ROW, S, first[np.array(forced, dtype=np.int64)], int(budget)
    )
    if status == dlx.OUT_OF_BUDGET:
        raise BudgetExceeded(f"exact cover not settled within {budget} nodes")
    if status == dlx.EXHAUSTED:
        return CoverOutcome(None, int(nodes), "exhausted")
    return CoverOutcome(tuple(sorted(forced + tuple(int(x) for x in chosen))), int(nodes), "found")


# ---------------------------------------------------------------------------
# Steiner systems


@dataclass(frozen=True)
class SteinerSystem:
    base: Hypergraph
    certified: bool = False
    report: Optional["SteinerReport"] = field(default=None, compare=False, repr=False)

    @property
    def m(self):
        return self.base.n

    @property
    def r(self):
        return self.base.r


@dataclass
class SteinerReport:
    m: int
    r: int
    coverage_histogram: dict
    edge_count: int
    expected_edges: Fraction
    degrees: list
    expected_degree: Fraction
    thin: bool
    certified: bool

    def to_dict(self):
        return {
            "m": self.m,
            "r": self.r,
            "coverage_histogram": {str(k): v for k, v in sorted(self.coverage_histogram.items())},
            "edge_count": self.edge_count,
            "expected_edges": str(self.expected_edges),
            "degrees": self.degrees,
            "expected_degree": str(self.expected_degree),
            "thin": self.thin,
            "certified": self.certified,
        }


def steiner_constants(m: int, r: int):
    """Exact (edge density, degree density) of an (m, r, r-1) Steiner system."""
    if not m >= r >= 2:
        raise InvalidArgument(f"need m >= r >= 2, got m={m}, r={r}")
    e = Fraction(comb(m, r - 1), r * m**r)
    d = Fraction(comb(m - 1, r - 2), (r - 1) * m ** (r - 1))
    return e, d


def verify_steiner(F: Hypergraph) -> SteinerReport:
    m, r = F.n, F.r
    counts = Counter()
    for e in F.edges:
        for sub in itertools.combinations(e, r - 1):
            counts[sub] += 1
    histogram = Counter(counts[s] for s in itertools.combinations(range(m), r - 1))
    expected_edges = Fraction(comb(m, r - 1), r)
    expected_degree = Fraction(comb(m - 1, r - 2), r - 1) if r >= 2 else Fraction(0)
    degrees = [int(d) for d in F.degrees()]
    thin = find_thin_violation(F) is None
    certified = (
        set(histogram) <= {1}
        and len(F) == expected_edges
        and all(d == expected_degree for d in degrees)
        and thin
    )
    return SteinerReport(
        m, r, dict(histogram), len(F), expected_edges, degrees, expected_degree, thin, certified
    )


def steiner_instance(m: int, r: int) -> ExactCoverInstance:
    index = {s: i for i, s in enumerate(itertools.combinations(range(m), r - 1))}
    rows = tuple(
        tuple(index[s] for s in itertools.combinations(block, r - 1))
        for block in itertools.combinations(range(m), r)
    )
    return ExactCoverInstance(len(index), rows)


def divisibility_ok(m: int, r: int) -> bool:
    """Necessary conditions: C(m-i, r-1-i) divisible by C(r-i, r-1-i) for all i < r - 1."""
    return all(comb(m - i, r - 1 - i) % (r - i) == 0 for i in range(r - 1))


def _certify(F: Hypergraph) -> SteinerSystem:
    report = verify_steiner(F)
    return SteinerSystem(F, report.certified, report)


def _search_direct(m, r, budget):
    inst = steiner_instance(m, r)
    # Block {0..r-1} is row 0; any design can be relabelled to contain it.
    rows = solve_exact_cover(inst, budget, forced=(0,))
    if rows is None:
        raise NoSuchDesign(f"no ({m},{r},{r - 1}) Steiner system exists")
    blocks = list(itertools.combinations(range(m), r))
    return Hypergraph(r, m, tuple(blocks[i] for i in rows))


def extend_one_point(S: Hypergraph, budget: int = DEFAULT_BUDGET) -> Hypergraph:
    """Extend an (m, r, r-1) system to an (m+1, r+1, r) system containing it as a derived design.

    The blocks through the new point m are fixed to ``B + {m}``; the rest is an
    exact cover of the r-subsets of the old points.
    """
    m, r = S.n, S.r
    inst = steiner_instance(m + 1, r + 1)
    blocks = list(itertools.combinations(range(m + 1), r + 1))
    position = {b: i for i, b in enumerate(blocks)}
    forced = [position[e + (m,)] for e in S.edges]
    rows = solve_exact_cover(inst, budget, forced=forced)
    if rows is None:
        raise NoSuchDesign(f"the given ({m},{r},{r - 1}) system has no one-point extension")
    return Hypergraph(r + 1, m + 1, tuple(blocks[i] for i in rows))


# ---------------------------------------------------------------------------
# registry


def default_cache_dir() -> Path:
    env = os.environ.get("TURANLAB_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "turanlab"


def cache_path(m: int, r: int, cache_dir=None) -> Path:
    root = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    return root / f"steiner_m{m}_r{r}.hgr"


_registry: dict = {}
_registry_lock = threading.Lock()


def clear_registry():
    with _registry_lock:
        _registry.clear()


def _load_cached(path: Path) -> Optional[SteinerSystem]:
    if not path.exists():
        return None
    try:
        system = _certify(read_hgr(path))
    except Exception:
        return None
    return system if system.certified else None


def _store(system: SteinerSystem, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with FileLock(str(path) + ".lock"):
        tmp = path.with_suffix(".tmp")
        write_hgr(system.base, tmp)
        os.replace(tmp, path)


def build_steiner(
    m: int,
    r: int,
    budget: int = DEFAULT_BUDGET,
    method: str = "auto",
    cache_dir=None,
    use_cache: bool = True,
    check_divisibility: bool = True,
) -> SteinerSystem:
    """Construct and certify an (m, r, r-1) Steiner system.

    ``method`` is ``"dlx"`` (direct exact cover), ``"extension"`` (one-point
    extension of an (m-1, r-1, r-2) system) or ``"auto"`` (direct, then
    extension if the direct search runs out of budget).
    """
    if not m >= r >= 2:
        raise InvalidArgument(f"need m >= r >= 2, got m={m}, r={r}")
    if method not in ("auto", "dlx", "extension"):
        raise InvalidArgument(f"unknown method {method!r}")
    key = (m, r)
    path = cache_path(m, r, cache_dir)
    if use_cache:
        with _registry_lock:
            hit = _registry.get(key)
        if hit is not None:
            return hit
        hit = _load_cached(path)
        if hit is not None:
            with _registry_lock:
                _registry[key] = hit
            return hit

    if check_divisibility and not divisibility_ok(m, r):
        raise NoSuchDesign(f"({m},{r},{r - 1}) fails the divisibility conditions")

    if method == "extension":
        F = _via_extension(m, r, budget, cache_dir, use_cache)
    else:
        try:
            F = _search_direct(m, r, budget)
        except BudgetExceeded:
            if method == "dlx" or r < 3:
                raise
            F = _via_extension(m, r, budget, cache_dir, use_cache)

    system = _certify(F)
    if not system.certified:  # pragma: no cover - solver output is a partition by construction
        raise ValidationError(f"constructed ({m},{r}) system failed verification")
    if use_cache:
        with _registry_lock:
            _registry[key] = system
        _store(system, path)
    return system


def _via_extension(m, r, budget, cache_dir, use_cache):
    if r < 3:
        raise InvalidArgument("one-point extension needs r >= 3")
    derived = build_steiner(m - 1, r - 1, budget, "auto", cache_dir, use_cache)
    return extend_one_point(derived.base, budget)
