import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turanlab import (
    BlowupSpec,
    Hypergraph,
    WeightedHypergraph,
    blow_up,
    classify_edges,
    clone_all,
    clone_vertex,
    epsilon_balance,
    find_sigma_member,
    lambda_eval,
    link,
    recover_partition,
    recursion_violations,
    transversal_violations,
)
from turanlab.blowup import blowup_size, read_spec
from turanlab.errors import (
    DimensionMismatch,
    InvalidArgument,
    InvalidAssignment,
    MemoryBudget,
    UnsupportedBase,
)
from turanlab.extremal import brute_force_hit

from .test_hypercore import hypergraphs

EDGE3 = Hypergraph(3, 3, ((0, 1, 2),))


def spec_strategy(base, max_n):
    return st.lists(st.integers(0, base.n - 1), min_size=1, max_size=max_n).map(
        lambda a: BlowupSpec(base, tuple(a))
    )


class TestBlowUp:
    def test_single_edge(self):
        assert len(blow_up(BlowupSpec.from_part_sizes(EDGE3, [2, 1, 1]))) == 2

    def test_fano_doubled(self, fano):
        B = blow_up(BlowupSpec.from_part_sizes(fano, [2] * 7))
        assert (B.n, len(B)) == (14, 56)

    def test_identity(self, fano, s5):
        for base in (fano, s5):
            assert blow_up(BlowupSpec.identity(base)) == base

    def test_invalid(self, fano):
        with pytest.raises(InvalidAssignment):
            BlowupSpec(fano, (0, 7))
        with pytest.raises(InvalidAssignment):
            BlowupSpec.from_part_sizes(fano, [1, 2])

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_size_formula(self, data):
        F = data.draw(hypergraphs(max_n=6))
        spec = data.draw(spec_strategy(F, 10))
        B = blow_up(spec)
        assert len(B) == blowup_size(spec)
        assert transversal_violations(B, spec) == []

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_lambda_identity(self, data):
        F = data.draw(hypergraphs(max_n=6))
        spec = data.draw(spec_strategy(F, 9))
        n = spec.n
        y = [Fraction(s, n) for s in spec.part_sizes()]
        B = blow_up(spec)
        assert lambda_eval(B, WeightedHypergraph.uniform(B).mu) == lambda_eval(F, y)


class TestCloning:
    def test_path_center(self, p3):
        assert len(clone_vertex(p3, 1, 2)) == 4

    def test_k_one(self, t3):
        assert clone_vertex(t3, 0, 1) == t3

    def test_errors(self, t3):
        with pytest.raises(InvalidArgument):
            clone_vertex(t3, 5, 2)
        with pytest.raises(InvalidArgument):
            clone_vertex(t3, 0, 0)

    @settings(max_examples=60, deadline=None)
    @given(hypergraphs(max_n=6), st.integers(1, 3))
    def test_full_cloning(self, F, k):
        assert len(clone_all(F, k)) == k**F.r * len(F)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_clone_size(self, data):
        F = data.draw(hypergraphs(max_n=6))
        v = data.draw(st.integers(0, F.n - 1))
        k = data.draw(st.integers(1, 4))
        G = clone_vertex(F, v, k)
        assert len(G) == len(F) + (k - 1) * len(link(F, {v}))
        assert G.n == F.n + k - 1


class TestRecovery:
    def test_fano_round_trip(self, fano):
        spec = BlowupSpec.from_part_sizes(fano, [2] * 7)
        got = recover_partition(blow_up(spec), fano)
        assert sorted(got.part_sizes()) == [2] * 7
        assert blow_up(got) == blow_up(spec)

    def test_extra_edge(self, fano):
        B = blow_up(BlowupSpec.from_part_sizes(fano, [2] * 7))
        extra = next(e for e in itertools.combinations(range(14), 3) if e not in B.edge_set)
        assert recover_partition(B.with_edges(B.edges + (extra,)), fano) is None

    def test_identity(self, fano):
        got = recover_partition(fano, fano)
        assert blow_up(got) == fano and got.part_sizes() == [1] * 7

    def test_unsupported(self, t3):
        with pytest.raises(UnsupportedBase):
            recover_partition(t3, t3)

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_round_trip(self, data):
        base = data.draw(st.sampled_from(["fano", "k4", "k33"]))
        base = {
            "fano": Hypergraph(3, 7, ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5))),
            "k4": Hypergraph(2, 4, tuple(itertools.combinations(range(4), 2))),
            "k33": Hypergraph(3, 4, tuple(itertools.combinations(range(4), 3))),
        }[base]
        spec = data.draw(spec_strategy(base, 10))
        B = blow_up(spec)
        got = recover_partition(B, base)
        assert got is not None and blow_up(got) == B


class TestTransversal:
    def test_blowup_is_transversal(self, fano):
        spec = BlowupSpec.from_part_sizes(fano, [1, 2, 3, 1, 1, 1, 2])
        assert transversal_violations(blow_up(spec), spec) == []

    def test_violation_listed(self):
        spec = BlowupSpec.from_part_sizes(EDGE3, [2, 1, 1])
        F = Hypergraph(3, 4, ((0, 1, 2), (0, 2, 3)))
        assert transversal_violations(F, spec) == [(0, 1, 2)]

    def test_s5_identity(self, s5):
        assert transversal_violations(s5, BlowupSpec.identity(s5)) == []

    def test_dimension(self, fano):
        with pytest.raises(DimensionMismatch):
            transversal_violations(fano, BlowupSpec(fano, (0, 1)))


class TestBalance:
    def test_examples(self):
        assert epsilon_balance(BlowupSpec.from_part_sizes(EDGE3, [2, 2, 2])) == 0
        assert epsilon_balance(BlowupSpec.from_part_sizes(EDGE3, [2, 1, 1])) == pytest.approx(1 / 6)
        assert epsilon_balance(BlowupSpec.from_part_sizes(EDGE3, [2, 1, 0])) == pytest.approx(1 / 3)


class TestClassify:
    def test_swapped_block(self, fano):
        swapped = fano.with_edges(fano.edges[1:] + ((0, 1, 3),))
        cls = classify_edges(swapped, BlowupSpec.identity(fano))
        assert (len(cls.good), len(cls.bad), len(cls.missing)) == (6, 1, 1)
        assert cls.a_counts[()] == 1 and cls.b_counts[()] == 1
        assert cls.b_counts[(0, 1)] == 1

    def test_exact_blowup(self, fano):
        spec = BlowupSpec.from_part_sizes(fano, [2] * 7)
        cls = classify_edges(blow_up(spec), spec, max_tuple=3)
        assert cls.bad == () and cls.missing == ()
        assert cls.a_counts == {} and cls.b_counts == {}

    def test_errors(self, fano):
        spec = BlowupSpec.identity(fano)
        with pytest.raises(InvalidArgument):
            classify_edges(fano, spec, max_tuple=4)
        with pytest.raises(MemoryBudget):
            classify_edges(fano.with_edges(()), spec, tuple_cap=5)

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_recursions(self, data):
        F = data.draw(hypergraphs(max_n=7))
        base = data.draw(hypergraphs(max_n=5, rs=(F.r,)))
        assignment = data.draw(st.lists(st.integers(0, base.n - 1), min_size=F.n, max_size=F.n))
        cls = classify_edges(F, BlowupSpec(base, tuple(assignment)), max_tuple=F.r)
        assert set(cls.good) | set(cls.bad) == F.edge_set
        assert recursion_violations(cls, F.r) == []

    def test_spec_json(self, tmp_path, fano):
        (tmp_path / "fano.hgr").write_text("3 7 7\n" + "\n".join(" ".join(map(str, e)) for e in fano.edges))
        (tmp_path / "spec.json").write_text(json.dumps({"base": "fano.hgr", "assignment": [0, 1, 2, 2]}))
        spec = read_spec(tmp_path / "spec.json")
        assert spec.base == fano and spec.part_sizes()[:3] == [1, 1, 2]


class TestSigmaFreeBlowups:
    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(0, 6), min_size=1, max_size=14))
    def test_fano(self, assignment):
        fano = Hypergraph(3, 7, ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)))
        B = blow_up(BlowupSpec(fano, tuple(assignment)))
        assert find_sigma_member(B) is None
        assert brute_force_hit(B, "sigma") is None
