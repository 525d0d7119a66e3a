"""
Tests for soft vectors, channels and leaf ML decoding.
"""

import itertools

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from rm_code import LengthMismatchError, ParameterError, code_params, full_space_generator
from soft_metrics import (
    EPS_CLAMP,
    AWGNChannel,
    BSCChannel,
    ChannelKind,
    as_soft_vector,
    clamp,
    leaf_candidates,
    leaf_ml_fullspace,
    leaf_ml_parity_trellis,
    leaf_ml_repetition,
    leaf_ml_restricted,
    log_prob_terms,
    make_channel,
    sigma2_from_snr,
)


def _all_fullspace_costs(y):
    """Log-costs of every word of {h, h} by direct evaluation."""
    lp, lm = log_prob_terms(y)
    h = y.size.bit_length() - 1
    G = full_space_generator(h).astype(int)
    rows = []
    for info in itertools.product((0, 1), repeat=y.size):
        bits = np.array(info) @ G % 2
        rows.append((np.where(bits == 1, lm, lp).sum(), info))
    return rows


class TestSoftVector:
    """Validation and clamping."""

    def test_clamp_keeps_entries_inside(self):
        y = clamp(np.array([-1.0, 1.0, 0.3]))
        assert y[0] == -1.0 + EPS_CLAMP and y[1] == 1.0 - EPS_CLAMP and y[2] == 0.3

    def test_rejects_bad_length(self):
        with pytest.raises(LengthMismatchError):
            as_soft_vector(np.zeros(3))
        with pytest.raises(LengthMismatchError):
            as_soft_vector(np.zeros(8), n=16)

    @pytest.mark.parametrize("bad", [1.5, np.nan, -np.inf])
    def test_rejects_bad_entries(self, bad):
        with pytest.raises(ValueError):
            as_soft_vector(np.array([0.0, bad]))

    def test_log_terms_are_probabilities(self, rng):
        """exp of the two terms sums to one."""
        y = rng.uniform(-1, 1, size=64)
        lp, lm = log_prob_terms(y)
        assert_allclose(np.exp(lp) + np.exp(lm), 1.0, rtol=1e-12)

    def test_log_terms_finite_at_certainty(self):
        lp, lm = log_prob_terms(np.array([1.0, -1.0]))
        assert np.all(np.isfinite(lp)) and np.all(np.isfinite(lm))


class TestChannels:
    """AWGN and BSC models."""

    def test_sigma_from_snr(self):
        """sigma^2 = 1 / (2 R 10^(snr/10))."""
        assert sigma2_from_snr(0.0, 0.5) == pytest.approx(1.0)
        assert sigma2_from_snr(10.0, 1.0) == pytest.approx(0.05)

    def test_awgn_round_trip_snr(self):
        channel = AWGNChannel.from_snr(3.47, 29 / 128)
        assert channel.snr_db(29 / 128) == pytest.approx(3.47)

    def test_awgn_posteriors(self):
        """y = tanh(x / sigma^2)."""
        channel = AWGNChannel(0.5)
        x = np.array([-0.2, 0.0, 0.7])
        assert_allclose(channel.posteriors(x), np.tanh(x / 0.5))

    def test_awgn_noise_statistics(self, rng):
        channel = AWGNChannel(0.25)
        x = channel.transmit(np.ones(200_000), rng)
        assert np.mean(x) == pytest.approx(1.0, abs=0.01)
        assert np.var(x) == pytest.approx(0.25, rel=0.02)

    def test_high_snr_is_noiseless(self, rng):
        channel = AWGNChannel.from_snr(60.0, 0.5)
        c = np.array([1, -1, -1, 1] * 8)
        y = channel.posteriors(channel.transmit(c, rng))
        assert_array_equal(np.sign(y), c)

    def test_bsc(self, rng):
        """Posteriors are +/-(1 - 2p); flips occur at rate p."""
        channel = BSCChannel(0.1)
        x = channel.transmit(np.ones(100_000), rng)
        assert np.mean(x < 0) == pytest.approx(0.1, abs=0.005)
        assert_allclose(channel.posteriors(np.array([1.0, -1.0])), [0.8, -0.8])

    def test_bsc_from_snr(self):
        """Hard-decision crossover is below 1/2 and falls with SNR."""
        low = BSCChannel.from_snr(0.0, 0.5).p
        high = BSCChannel.from_snr(5.0, 0.5).p
        assert 0 < high < low < 0.5

    @pytest.mark.parametrize("p", [0.0, 0.5, 0.7])
    def test_bsc_invalid(self, p):
        with pytest.raises(ParameterError):
            BSCChannel(p)

    def test_make_channel(self):
        assert isinstance(make_channel(ChannelKind.AWGN, 2.0, 0.5), AWGNChannel)
        assert isinstance(make_channel(ChannelKind.BSC, 2.0, 0.5), BSCChannel)


class TestLeafML:
    """Maximum-likelihood decoding at the leaves."""

    def test_repetition(self):
        """Majority of soft evidence wins; both words are returned."""
        candidates = leaf_ml_repetition(np.array([0.9, -0.1, 0.2, 0.3]))
        assert [c.info for c in candidates] == [(0,), (1,)]
        assert_array_equal(candidates[0].codeword, np.ones(4))
        assert candidates[0].log_cost > candidates[1].log_cost

    def test_fullspace_h1(self):
        """(0.8, -0.2): hard decision (+1, -1) first, all four words with branch 4."""
        candidates = leaf_ml_fullspace(np.array([0.8, -0.2]), branch=4)
        assert len(candidates) == 4
        assert_array_equal(candidates[0].codeword, [1, -1])
        assert_array_equal(candidates[1].codeword, [1, 1])
        costs = [c.log_cost for c in candidates]
        assert costs == sorted(costs, reverse=True)

    @pytest.mark.parametrize("branch", [1, 2, 4])
    def test_fullspace_matches_enumeration(self, branch, rng):
        """Top words agree with ranking the whole space of {2, 2}."""
        y = rng.uniform(-0.95, 0.95, size=4)
        expected = sorted(_all_fullspace_costs(y), key=lambda t: -t[0])[:branch]
        candidates = leaf_ml_fullspace(y, branch=branch)
        assert [c.info for c in candidates] == [info for _, info in expected]
        assert_allclose([c.log_cost for c in candidates], [cost for cost, _ in expected])

    def test_fullspace_info_encodes_to_codeword(self, rng):
        y = rng.uniform(-1, 1, size=8)
        G = full_space_generator(3).astype(int)
        for candidate in leaf_ml_fullspace(y, branch=4):
            bits = np.array(candidate.info) @ G % 2
            assert_array_equal(1 - 2 * bits, candidate.codeword)

    def test_fullspace_branch_guard(self):
        with pytest.raises(ParameterError):
            leaf_ml_fullspace(np.zeros(4), branch=0)

    def test_frozen_left_end(self):
        """A frozen repetition leaf only offers a = 0."""
        path = code_params(3, 1).paths[0]
        candidates = leaf_candidates(np.array([-0.9, -0.9, -0.9, -0.9]), path, frozen=(True,))
        assert [c.info for c in candidates] == [(0,)]

    def test_restricted_right_end(self, rng):
        """Frozen bits of a full space stay zero."""
        path = code_params(3, 1).paths[-1]
        y = rng.uniform(-1, 1, size=path.length)
        frozen = (False, True)
        candidates = leaf_candidates(y, path, frozen=frozen, branch=4)
        assert len(candidates) == 2
        assert all(c.info[1] == 0 for c in candidates)

    def test_fullspace_large_branch_matches_enumeration(self, rng):
        """Branches wider than the leaf keep the exact top words of {3, 3}."""
        y = rng.uniform(-0.9, 0.9, size=8)
        expected = sorted(_all_fullspace_costs(y), key=lambda t: (-t[0], t[1]))[:40]
        candidates = leaf_ml_fullspace(y, branch=40)
        assert_allclose([c.log_cost for c in candidates], [cost for cost, _ in expected])

    def test_fullspace_flips_beyond_the_logarithmic_rank(self):
        """Reliabilities 1, 1.01, 1.02, 100: the fourth word flips the third weakest position."""
        y = np.tanh(np.array([1.0, 1.01, 1.02, 100.0]) / 2)
        candidates = leaf_ml_fullspace(y, branch=4)
        assert_array_equal(candidates[0].codeword, [1, 1, 1, 1])
        assert_array_equal(candidates[3].codeword, [1, 1, -1, 1])

    def test_fullspace_wide_branch_on_long_leaf(self, rng):
        """branch = 40 on a 32-symbol leaf returns 40 distinct words, best first."""
        y = rng.uniform(-1, 1, size=32)
        candidates = leaf_ml_fullspace(y, branch=40)
        assert len(candidates) == 40
        assert len({c.info for c in candidates}) == 40
        costs = [c.log_cost for c in candidates]
        assert costs == sorted(costs, reverse=True)
        assert_array_equal(candidates[0].codeword, np.where(y >= 0, 1, -1))
        G = full_space_generator(5).astype(int)
        for candidate in candidates[:5]:
            assert_array_equal(1 - 2 * (np.array(candidate.info) @ G % 2), candidate.codeword)

    def test_fullspace_word_cap(self):
        with pytest.raises(ParameterError):
            leaf_ml_fullspace(np.zeros(32), branch=(1 << 16) + 1)


class TestParityTrellis:
    """Partly frozen full-space leaves decoded through the syndrome trellis."""

    @pytest.mark.parametrize("frozen_bits", [(0,), (3,), (1, 4, 7), (0, 2, 5, 6)])
    @pytest.mark.parametrize("branch", [1, 4, 16])
    def test_matches_enumeration(self, frozen_bits, branch, rng):
        y = rng.uniform(-0.95, 0.95, size=8)
        frozen = tuple(j in frozen_bits for j in range(8))
        expected = leaf_ml_restricted(y, frozen, branch)
        candidates = leaf_ml_parity_trellis(y, frozen, branch)
        assert [c.info for c in candidates] == [c.info for c in expected]
        assert_allclose([c.log_cost for c in candidates], [c.log_cost for c in expected])

    def test_matches_enumeration_on_sixteen_symbols(self, rng):
        y = rng.uniform(-0.9, 0.9, size=16)
        frozen = tuple(j in (0, 5, 15) for j in range(16))
        expected = leaf_ml_restricted(y, frozen, 8)
        candidates = leaf_ml_parity_trellis(y, frozen, 8)
        assert [c.info for c in candidates] == [c.info for c in expected]

    def test_small_subcode_returns_every_word(self, rng):
        """Six of eight bits frozen leaves four words, however wide the branch."""
        y = rng.uniform(-1, 1, size=8)
        frozen = (True,) * 6 + (False,) * 2
        candidates = leaf_ml_parity_trellis(y, frozen, 16)
        assert len(candidates) == 4
        assert all(c.info[:6] == (0,) * 6 for c in candidates)

    def test_restricted_leaf_with_many_free_bits(self, rng):
        """One frozen bit in a 32-symbol leaf leaves 31 free bits and still decodes."""
        y = rng.uniform(-1, 1, size=32)
        frozen = (True,) + (False,) * 31
        candidates = leaf_ml_restricted(y, frozen, 6)
        assert len(candidates) == 6
        costs = [c.log_cost for c in candidates]
        assert costs == sorted(costs, reverse=True)
        G = full_space_generator(5).astype(int)
        for candidate in candidates:
            assert candidate.info[0] == 0
            assert_array_equal(1 - 2 * (np.array(candidate.info) @ G % 2), candidate.codeword)
        # the unrestricted best word either satisfies the check or costs more
        best = leaf_ml_fullspace(y, branch=1)[0]
        assert best.log_cost >= candidates[0].log_cost - 1e-12
        if best.info[0] == 0:
            assert best.info == candidates[0].info

    def test_too_many_free_and_frozen_bits(self):
        frozen = (True,) * 20 + (False,) * 44
        with pytest.raises(ParameterError):
            leaf_ml_restricted(np.zeros(64), frozen, 4)

    def test_branch_guard(self):
        with pytest.raises(ParameterError):
            leaf_ml_parity_trellis(np.zeros(8), (True,) + (False,) * 7, 0)
