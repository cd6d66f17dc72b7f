from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turanlab import (
    Hypergraph,
    WeightedHypergraph,
    covers_pairs,
    find_uncovered_pair,
    induce,
    lambda_eval,
    symmetrize,
    symmetrize_step,
)
from turanlab.errors import InvalidArgument, InvalidPair

from .test_hypercore import hypergraphs

THIRD = (Fraction(1, 3),) * 3


@st.composite
def weighted(draw):
    F = draw(hypergraphs(max_n=7))
    raw = draw(st.lists(st.integers(0, 6), min_size=F.n, max_size=F.n))
    if sum(raw) == 0:
        raw[-1] = 1
    return WeightedHypergraph(F, tuple(Fraction(x, sum(raw)) for x in raw))


class TestUncoveredPair:
    def test_examples(self, p3, fano):
        assert find_uncovered_pair(p3, range(3)) == (0, 2)
        assert find_uncovered_pair(fano, range(7)) is None
        assert find_uncovered_pair(Hypergraph(3, 5, ((1, 2, 3),)), {1, 2, 3}) is None

    def test_restricted_support(self, t3):
        # {0,2} lies only in 012, which leaves the support {0,2,3,4}
        assert find_uncovered_pair(t3, {0, 2, 3, 4}) == (0, 2)

    def test_bad_support(self, p3):
        with pytest.raises(InvalidArgument):
            find_uncovered_pair(p3, {0, 5})


class TestStep:
    def test_path_uniform_tie(self, p3):
        out = symmetrize_step(WeightedHypergraph(p3, THIRD), 0, 2)
        assert out.mu == (Fraction(2, 3), Fraction(1, 3), Fraction(0))
        assert lambda_eval(p3, out.mu) == Fraction(2, 9)

    def test_path_float(self, p3):
        W = WeightedHypergraph(p3, (0.5, 0.3, 0.2))
        out = symmetrize_step(W, 0, 2)
        assert lambda_eval(p3, out.mu) == pytest.approx(0.21)
        assert lambda_eval(p3, out.mu) >= lambda_eval(p3, W.mu) - 1e-15

    def test_picks_larger_side(self):
        F = Hypergraph(2, 4, ((0, 1), (2, 3), (1, 3)))
        W = WeightedHypergraph(F, (Fraction(1, 4),) * 4)
        out = symmetrize_step(W, 0, 3)  # 3 has the richer link
        assert out.mu[0] == 0 and out.mu[3] == Fraction(1, 2)

    def test_covered_pair(self, p3):
        with pytest.raises(InvalidPair):
            symmetrize_step(WeightedHypergraph(p3, THIRD), 0, 1)
        with pytest.raises(InvalidPair):
            symmetrize_step(WeightedHypergraph(p3, THIRD), 1, 1)
        with pytest.raises(InvalidPair):
            symmetrize_step(WeightedHypergraph(p3, (Fraction(0), Fraction(1), Fraction(0))), 0, 2)

    @settings(max_examples=80, deadline=None)
    @given(weighted())
    def test_affine_in_the_shift(self, W):
        pair = find_uncovered_pair(W.graph, W.support)
        if pair is None:
            return
        v1, v2 = pair
        total = W.mu[v1] + W.mu[v2]
        x = W.mu[v1] / total

        def at(share):
            mu = list(W.mu)
            mu[v1], mu[v2] = share * total, (1 - share) * total
            return lambda_eval(W.graph, mu)

        assert at(x) == x * at(Fraction(1)) + (1 - x) * at(Fraction(0))


class TestSymmetrize:
    def test_fano(self, fano):
        W = WeightedHypergraph.uniform(fano)
        tr = symmetrize(W)
        assert tr.steps == [] and tr.final == W and tr.covers_pairs_on_support

    def test_path(self, p3):
        tr = symmetrize(WeightedHypergraph(p3, THIRD))
        assert len(tr.steps) == 1
        assert tr.final.support == (0, 1)
        assert tr.final_lambda == Fraction(2, 9)

    def test_empty_graph(self):
        tr = symmetrize(WeightedHypergraph.uniform(Hypergraph(2, 3, ())))
        assert len(tr.steps) <= 2
        assert len(tr.final.support) == 1 and tr.final_lambda == 0

    def test_trace_json(self, p3):
        data = symmetrize(WeightedHypergraph(p3, THIRD)).to_dict()
        assert data["steps"][0] == {
            "pair": [0, 2], "direction": 1, "lambda_before": "2/9", "lambda_after": "2/9",
        }

    @settings(max_examples=150, deadline=None)
    @given(weighted())
    def test_properties(self, W):
        tr = symmetrize(W)
        F = W.graph
        lam = lambda_eval(F, W.mu)
        assert len(tr.steps) <= F.n - 1
        zeroed = set()
        for step in tr.steps:
            assert step.after >= step.before == lam
            lam = step.after
            v1, v2 = step.pair
            assert v1 not in zeroed and v2 not in zeroed
            zeroed.add(v2 if step.direction == 1 else v1)
        assert tr.final_lambda == lam >= lambda_eval(F, W.mu)
        assert len(tr.final.support) == len(W.support) - len(tr.steps)
        sub, _ = induce(F, tr.final.support)
        assert covers_pairs(sub) and tr.covers_pairs_on_support
