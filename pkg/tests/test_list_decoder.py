"""
Tests for posterior recalculation, the basic recursive decoder and the
list decoder.
"""

import itertools

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from list_decoder import (
    ListDecoder,
    RecalcRule,
    RecursiveDecoder,
    codeword_log_posterior,
    cost_extend,
    decode_basic,
    decode_list,
    recalc_u,
    recalc_u_simplified,
    recalc_v,
)
from rm_code import (
    FrozenMask,
    LengthMismatchError,
    ParameterError,
    code_params,
    default_pruning_order,
    encode,
    encode_batch,
)
from sim_harness import basic_flop_bound, ml_bruteforce
from soft_metrics import EPS_CLAMP


def exhaustive_branch(spec):
    """Branch that keeps every word of the largest full-space leaf."""
    widths = [p.info_width for p in spec.paths if not p.is_left_end]
    return 1 << max(widths, default=1)


class TestRecalc:
    """The two recalculation rules."""

    def test_recalc_v(self):
        assert_array_equal(recalc_v([1.0, 1.0, 0.0, 0.5], [1.0, -1.0, 0.7, 0.8]), [1.0, -1.0, 0.0, 0.4])

    def test_recalc_u(self):
        out = recalc_u([0.0, 0.5], [0.6, 0.8], [1, 1])
        assert_allclose(out, [0.6, 1.3 / 1.4])

    def test_recalc_u_preserves_certainty(self):
        near = 1.0 - EPS_CLAMP
        out = recalc_u([near], [near], [1])
        assert out[0] == pytest.approx(1.0, abs=1e-9)
        assert out[0] < 1.0

    def test_recalc_u_simplified(self):
        assert_allclose(recalc_u_simplified([0.5, 1.0], [0.8, 1.0], [1, 1]), [0.65, 1.0 - EPS_CLAMP])

    def test_exact_dominates_simplified_for_positive_inputs(self):
        grid = np.linspace(0.01, 0.99, 50)
        a, b = np.meshgrid(grid, grid)
        a, b = a.ravel(), b.ravel()
        ones = np.ones_like(a)
        assert np.all(recalc_u(a, b, ones) >= recalc_u_simplified(a, b, ones))

    def test_clamp_safety(self, rng):
        """Adversarial +/-(1 - eps) inputs never produce non-finite values."""
        edge = np.array([1.0, -1.0, 1.0 - EPS_CLAMP, -1.0 + EPS_CLAMP, 0.0])
        for _ in range(200):
            a = rng.choice(edge, size=512)
            b = rng.choice(edge, size=512)
            v = rng.choice([-1, 1], size=512)
            out = recalc_u(a, b, v)
            assert np.all(np.isfinite(out)) and np.all(np.abs(out) < 1.0)

    @pytest.mark.slow
    def test_clamp_safety_at_scale(self, rng):
        """Over a million adversarial recalc_u evaluations nothing leaves (-1, 1)."""
        edge = np.array([1.0, -1.0, 1.0 - EPS_CLAMP, -1.0 + EPS_CLAMP, 0.0])
        evaluations = 0
        for _ in range(2048):
            a = np.where(rng.random(512) < 0.5, rng.choice(edge, size=512), rng.uniform(-1, 1, size=512))
            b = np.where(rng.random(512) < 0.5, rng.choice(edge, size=512), rng.uniform(-1, 1, size=512))
            v = rng.choice([-1, 1], size=512)
            for rule in (recalc_u, recalc_u_simplified):
                out = rule(a, b, v)
                assert np.all(np.isfinite(out)) and np.all(np.abs(out) < 1.0)
            evaluations += a.size
        assert evaluations >= 1_000_000

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            recalc_v([0.1, 0.2], [0.1])
        with pytest.raises(LengthMismatchError):
            recalc_u([0.1, 0.2], [0.1, 0.2], [1])


class TestCost:
    """Leaf cost accumulation."""

    def test_perfect_match_adds_nothing(self):
        c = np.array([1, -1, -1, 1])
        assert cost_extend(0.0, c.astype(float), c) == pytest.approx(0.0, abs=1e-9)

    def test_uninformative_leaf(self):
        assert cost_extend(-1.0, np.zeros(8), np.ones(8)) == pytest.approx(-1.0 + 8 * np.log(0.5))

    def test_posteriors_normalize(self, rng):
        """Over all codewords of {3,3} the probabilities sum to one."""
        y = rng.uniform(-1, 1, size=8)
        infos = np.array(list(itertools.product((0, 1), repeat=8)))
        words = 1 - 2 * encode_batch(code_params(3, 3), infos).astype(int)
        total = sum(np.exp(codeword_log_posterior(y, w)) for w in words)
        assert total == pytest.approx(1.0, rel=1e-9)

    def test_monotone_likelihoods(self, rng):
        """Raising y_i never lowers the cost of a word with c_i = +1 nor raises it for c_i = -1."""
        for _ in range(50):
            y = rng.uniform(-0.99, 0.99, size=16)
            c = rng.choice([-1, 1], size=16)
            i = rng.integers(16)
            raised = y.copy()
            raised[i] = rng.uniform(y[i], 1.0)
            delta = codeword_log_posterior(raised, c) - codeword_log_posterior(y, c)
            if c[i] == 1:
                assert delta >= 0.0
            else:
                assert delta <= 0.0

    @pytest.mark.parametrize("m, r", [(3, 1), (4, 2), (5, 2)])
    def test_path_cost_equals_posterior(self, m, r, noisy_word):
        """Accumulated leaf costs equal log P(c | y) of the output."""
        spec = code_params(m, r)
        for _ in range(20):
            _, _, y = noisy_word(spec, 1.0)
            result = decode_list(spec, None, y, L=8)
            for record in result.records:
                assert record.log_cost == pytest.approx(codeword_log_posterior(y, record.codeword), abs=1e-9)


class TestBasicDecoder:
    """Basic recursive decoding."""

    @pytest.mark.parametrize("m, r", [(m, r) for m in range(1, 7) for r in range(0, m + 1)])
    def test_noiseless_round_trip(self, m, r, rng):
        spec = code_params(m, r)
        info = rng.integers(0, 2, size=spec.k, dtype=np.uint8)
        c = encode(spec, None, info)
        result = decode_basic(spec, None, c.astype(float))
        assert_array_equal(result.best_info, info)
        assert_array_equal(result.best_codeword, c)

    def test_corrects_single_flip(self, rng):
        """Every single hard error in {4,1} (d = 8) is corrected."""
        spec = code_params(4, 1)
        info = rng.integers(0, 2, size=spec.k, dtype=np.uint8)
        c = encode(spec, None, info)
        for position in range(spec.n):
            y = 0.6 * c.astype(float)
            y[position] = -y[position]
            assert_array_equal(decode_basic(spec, None, y).best_info, info)

    @pytest.mark.parametrize("m, r", [(m, r) for m in range(2, 10) for r in range(1, m)])
    def test_flop_bound(self, m, r, rng):
        """|Psi| <= 6 n min(r, m - r) + n."""
        spec = code_params(m, r)
        y = rng.uniform(-1, 1, size=spec.n)
        assert decode_basic(spec, None, y).flops <= basic_flop_bound(m, r)

    def test_output_is_codeword(self, noisy_word):
        spec = code_params(5, 2)
        _, _, y = noisy_word(spec, 0.8)
        result = decode_basic(spec, None, y)
        assert_array_equal(encode(spec, None, result.best_info), result.best_codeword)

    def test_simplified_rule_decodes_noiseless(self, rng):
        spec = code_params(6, 3)
        info = rng.integers(0, 2, size=spec.k, dtype=np.uint8)
        c = encode(spec, None, info)
        result = decode_basic(spec, None, c.astype(float), recalc=RecalcRule.SIMPLIFIED)
        assert_array_equal(result.best_info, info)


class TestListDecoder:
    """List decoding."""

    @pytest.mark.parametrize("m, r", [(4, 2), (5, 2), (6, 3), (7, 2)])
    def test_list_of_one_is_basic(self, m, r, noisy_word):
        """L = 1 reproduces the basic decoder exactly."""
        spec = code_params(m, r)
        for _ in range(50):
            _, _, y = noisy_word(spec, 1.2)
            basic = decode_basic(spec, None, y)
            single = decode_list(spec, None, y, L=1)
            assert_array_equal(single.best_info, basic.best_info)
            assert single.best_log_cost == basic.best_log_cost

    def test_list_of_one_is_basic_simplified(self, noisy_word):
        spec = code_params(6, 2)
        for _ in range(30):
            _, _, y = noisy_word(spec, 1.2)
            basic = decode_basic(spec, None, y, recalc=RecalcRule.SIMPLIFIED)
            single = decode_list(spec, None, y, L=1, recalc=RecalcRule.SIMPLIFIED)
            assert_array_equal(single.best_info, basic.best_info)

    def test_matches_ml_with_exhaustive_list(self, small_spec, noisy_word):
        """A list holding every prefix returns the ML codeword."""
        branch = exhaustive_branch(small_spec)
        for sigma2 in (0.5, 1.0, 2.0):
            for _ in range(10):
                _, _, y = noisy_word(small_spec, sigma2)
                result = decode_list(small_spec, None, y, L=1 << small_spec.k, branch=branch)
                ml = ml_bruteforce(small_spec, None, y)
                assert_array_equal(result.best_codeword, ml.codeword)
                assert result.best_log_cost == pytest.approx(ml.log_cost, abs=1e-9)

    @pytest.mark.slow
    def test_matches_ml_over_a_thousand_trials(self, small_spec, noisy_word):
        """Over 10^3 trials the exhaustive list agrees with ML in at least 99.9% of them."""
        branch = exhaustive_branch(small_spec)
        trials = mismatches = 0
        for sigma2 in (0.5, 1.0, 2.0):
            for _ in range(334):
                _, _, y = noisy_word(small_spec, sigma2)
                result = decode_list(small_spec, None, y, L=1 << small_spec.k, branch=branch)
                ml = ml_bruteforce(small_spec, None, y)
                trials += 1
                mismatches += not np.array_equal(result.best_codeword, ml.codeword)
                direct = codeword_log_posterior(y, result.best_codeword)
                assert result.best_log_cost == pytest.approx(direct, abs=1e-9)
                assert result.best_log_cost == pytest.approx(ml.log_cost, abs=1e-9)
        assert trials >= 1000
        assert mismatches <= trials // 1000

    def test_list_sorted_and_bounded(self, noisy_word):
        spec = code_params(6, 2)
        _, _, y = noisy_word(spec, 1.0)
        result = decode_list(spec, None, y, L=8)
        costs = [rec.log_cost for rec in result.records]
        assert len(costs) <= 8
        assert costs == sorted(costs, reverse=True)
        assert result.best_log_cost == costs[0]

    def test_larger_list_rarely_worse(self, noisy_word):
        """Doubling L almost never lowers the best cost."""
        spec = code_params(6, 2)
        violations = 0
        for _ in range(20):
            _, _, y = noisy_word(spec, 1.5)
            costs = [decode_list(spec, None, y, L=L).best_log_cost for L in (1, 2, 4, 8, 16)]
            violations += sum(b < a - 1e-12 for a, b in zip(costs, costs[1:]))
        # truncation can in principle drop a prefix the shorter list kept
        assert violations <= 4

    def test_early_steps_keep_all_records(self):
        """Fewer than L candidates are all kept."""
        spec = code_params(2, 1)
        result = decode_list(spec, None, np.array([0.3, -0.2, 0.1, 0.4]), L=64)
        assert len(result.records) == 8

    @pytest.mark.parametrize("L", [1, 4, 16])
    @pytest.mark.parametrize("m, r", [(4, 2), (5, 2), (7, 2)])
    def test_flops_scale_with_list(self, m, r, L, noisy_word):
        spec = code_params(m, r)
        _, _, y = noisy_word(spec, 1.0)
        basic = decode_basic(spec, None, y).flops
        assert decode_list(spec, None, y, L=L).flops <= L * basic * 1.25

    def test_subcode_frozen_bits_stay_zero(self, noisy_word):
        spec = code_params(6, 3)
        mask = default_pruning_order(spec, 10)
        for _ in range(20):
            _, _, y = noisy_word(spec, 1.5, mask)
            result = decode_list(spec, mask, y, L=4)
            for record in result.records:
                assert all(record.info[i] == 0 for i in mask.frozen)
            assert result.best_info.size == mask.k_sub
            assert_array_equal(encode(spec, mask, result.best_info), result.best_codeword)

    def test_subcode_noiseless(self, rng):
        spec = code_params(7, 2)
        mask = default_pruning_order(spec, 5)
        info = rng.integers(0, 2, size=mask.k_sub, dtype=np.uint8)
        c = encode(spec, mask, info)
        assert_array_equal(decode_list(spec, mask, c.astype(float), L=4).best_info, info)

    def test_subcode_with_partly_frozen_wide_leaf(self, rng, noisy_word):
        """Freezing one bit of the 32-symbol {5, 5} leaf of {6, 5} leaves a decodable subcode."""
        spec = code_params(6, 5)
        leaf = spec.paths[-1]
        assert (leaf.length, leaf.info_width) == (32, 32)
        mask = FrozenMask.from_bits(spec, [leaf.info_offset])
        info = rng.integers(0, 2, size=mask.k_sub, dtype=np.uint8)
        c = encode(spec, mask, info)
        assert_array_equal(decode_list(spec, mask, c.astype(float), L=4).best_info, info)
        assert_array_equal(decode_basic(spec, mask, c.astype(float)).best_info, info)
        for _ in range(5):
            _, _, y = noisy_word(spec, 0.5, mask)
            result = decode_list(spec, mask, y, L=4)
            assert all(record.info[leaf.info_offset] == 0 for record in result.records)
            assert_array_equal(encode(spec, mask, result.best_info), result.best_codeword)

    def test_deterministic(self, noisy_word):
        spec = code_params(6, 3)
        _, _, y = noisy_word(spec, 1.0)
        a = decode_list(spec, None, y, L=8)
        b = decode_list(spec, None, y, L=8)
        assert [r.info for r in a.records] == [r.info for r in b.records]
        assert a.flops == b.flops

    def test_invalid_parameters(self):
        spec = code_params(4, 2)
        with pytest.raises(ParameterError):
            ListDecoder(spec, list_size=0)
        with pytest.raises(ParameterError):
            RecursiveDecoder(spec, branch=0)

    def test_wrong_length(self):
        with pytest.raises(LengthMismatchError):
            decode_list(code_params(4, 2), None, np.zeros(8), L=2)
