from __future__ import annotations

import math
import random

import pytest
from scipy import stats as scipy_stats

from retrorank import stats

# Published two-tailed t critical values (0.975 quantile) and F critical
# values at the 0.95 level, straight from standard distribution tables.
T_TABLE_975 = {
    1: 12.7062,
    2: 4.3027,
    5: 2.5706,
    10: 2.2281,
    24: 2.0639,
    30: 2.0423,
    48: 2.0106,
    120: 1.9799,
}

F_TABLE_95 = {
    (1, 10): 4.9646,
    (2, 10): 4.1028,
    (3, 30): 2.9223,
    (5, 20): 2.7109,
    (10, 10): 2.9782,
    (1, 120): 3.9201,
}


class TestDistributions:
    def test_incomplete_beta_matches_scipy(self):
        rng = random.Random(7)
        for _ in range(200):
            a = rng.uniform(0.5, 30.0)
            b = rng.uniform(0.5, 30.0)
            x = rng.random()
            assert stats.incomplete_beta(a, b, x) == pytest.approx(
                scipy_stats.beta.cdf(x, a, b), abs=1e-10
            )

    def test_incomplete_beta_bounds(self):
        assert stats.incomplete_beta(2.0, 3.0, 0.0) == 0.0
        assert stats.incomplete_beta(2.0, 3.0, 1.0) == 1.0

    @pytest.mark.parametrize("df,expected", sorted(T_TABLE_975.items()))
    def test_t_critical_matches_published_table(self, df, expected):
        assert stats.t_critical(df, 0.95) == pytest.approx(expected, abs=1e-4)

    @pytest.mark.parametrize("df,expected", sorted(T_TABLE_975.items()))
    def test_t_cdf_at_table_quantile(self, df, expected):
        assert stats.t_cdf(expected, df) == pytest.approx(0.975, abs=1e-4)
        assert stats.t_cdf(-expected, df) == pytest.approx(0.025, abs=1e-4)

    def test_t_cdf_matches_scipy(self):
        rng = random.Random(11)
        for _ in range(100):
            t = rng.uniform(-8.0, 8.0)
            df = rng.randint(2, 200)
            assert stats.t_cdf(t, df) == pytest.approx(
                scipy_stats.t.cdf(t, df), abs=1e-10
            )

    @pytest.mark.parametrize("dfs,expected", sorted(F_TABLE_95.items()))
    def test_f_critical_matches_published_table(self, dfs, expected):
        d1, d2 = dfs
        assert stats.f_critical(d1, d2, 0.95) == pytest.approx(expected, abs=1e-4)

    @pytest.mark.parametrize("dfs,expected", sorted(F_TABLE_95.items()))
    def test_f_cdf_at_table_quantile(self, dfs, expected):
        d1, d2 = dfs
        assert stats.f_cdf(expected, d1, d2) == pytest.approx(0.95, abs=1e-4)

    def test_f_cdf_matches_scipy(self):
        rng = random.Random(13)
        for _ in range(100):
            x = rng.uniform(0.01, 20.0)
            d1 = rng.randint(1, 30)
            d2 = rng.randint(2, 200)
            assert stats.f_cdf(x, d1, d2) == pytest.approx(
                scipy_stats.f.cdf(x, d1, d2), abs=1e-10
            )


class TestPooledT:
    def test_identical_groups(self):
        result = stats.pooled_t_test(5, 2.0, 1.0, 5, 2.0, 1.0)
        assert result.t == 0.0
        assert result.p == pytest.approx(1.0)
        assert not result.reject

    def test_textbook_case_against_scipy(self):
        # Raw-data cross-check: summaries fed to pooled_t_test must agree
        # with scipy's ttest_ind on the same samples.
        rng = random.Random(3)
        a = [rng.gauss(0.0, 1.0) for _ in range(12)]
        b = [rng.gauss(0.7, 1.3) for _ in range(17)]
        mean = lambda v: sum(v) / len(v)
        sd = lambda v: math.sqrt(sum((x - mean(v)) ** 2 for x in v) / (len(v) - 1))
        result = stats.pooled_t_test(len(a), mean(a), sd(a), len(b), mean(b), sd(b))
        expected = scipy_stats.ttest_ind(a, b, equal_var=True)
        assert result.t == pytest.approx(expected.statistic, abs=1e-10)
        assert result.p == pytest.approx(expected.pvalue, abs=1e-10)

    def test_hand_formula_small_case(self):
        # n=2 each, means 0 and 10, sd 1: sp=1, t = -10 / sqrt(1/2 + 1/2) = -10.
        result = stats.pooled_t_test(2, 0.0, 1.0, 2, 10.0, 1.0)
        assert result.t == pytest.approx(-10.0)
        assert result.df == 2
        # Published table: t(0.975, df=2) = 4.3027, so |t|=10 rejects.
        assert result.reject

    def test_zero_variance_unequal_means_is_infinite(self):
        result = stats.pooled_t_test(3, 0.0, 0.0, 3, 1.0, 0.0)
        assert math.isinf(result.t)
        assert result.p == 0.0

    def test_needs_two_observations(self):
        with pytest.raises(ValueError):
            stats.pooled_t_test(1, 0.0, 0.0, 5, 1.0, 1.0)


class TestCohensD:
    @pytest.mark.parametrize(
        "a,b,expected",
        [
            ((25, 1.8, 1.1), (25, 3.4, 1.9), 1.0307),
            ((25, 9.1, 5.0), (25, 3.7, 2.2), 1.3980),
            ((25, 9.1, 5.0), (25, 3.4, 1.9), 1.5071),
            ((25, 9.1, 5.0), (25, 1.8, 1.1), 2.0165),
        ],
    )
    def test_reference_effect_sizes(self, a, b, expected):
        assert stats.cohens_d_from_summary(*a, *b) == pytest.approx(expected, abs=0.001)

    def test_equal_means_is_zero(self):
        assert stats.cohens_d_from_summary(10, 5.0, 2.0, 10, 5.0, 2.0) == 0.0

    def test_symmetry(self):
        d1 = stats.cohens_d_from_summary(12, 1.0, 2.0, 8, 4.0, 1.0)
        d2 = stats.cohens_d_from_summary(8, 4.0, 1.0, 12, 1.0, 2.0)
        assert d1 == pytest.approx(d2)

    def test_shift_invariance(self):
        d1 = stats.cohens_d_from_summary(9, 1.0, 2.0, 11, 4.0, 1.5)
        d2 = stats.cohens_d_from_summary(9, 101.0, 2.0, 11, 104.0, 1.5)
        assert d1 == pytest.approx(d2)

    def test_zero_pooled_sd_raises(self):
        with pytest.raises(ValueError):
            stats.cohens_d_from_summary(5, 1.0, 0.0, 5, 2.0, 0.0)


class TestAnova:
    def test_identical_groups(self):
        result = stats.anova_oneway([[1.0, 2.0, 3.0], [1.0, 2.0, 3.0]])
        assert result.f == pytest.approx(0.0)
        assert result.p == pytest.approx(1.0)

    def test_all_identical_values_degenerate(self):
        result = stats.anova_oneway([[2.0, 2.0], [2.0, 2.0]])
        assert result.f == 0.0
        assert result.p == 1.0

    def test_hand_computed_table(self):
        # Groups {1,2,3} and {4,5,6}: SSB = 13.5, SSW = 4, df = (1, 4),
        # F = 13.5 / 1.0 = 13.5.
        result = stats.anova_oneway([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]])
        assert result.f == pytest.approx(13.5)
        assert result.df_between == 1
        assert result.df_within == 4

    def test_two_group_f_equals_t_squared(self):
        rng = random.Random(42)
        for _ in range(50):
            n1 = rng.randint(2, 15)
            n2 = rng.randint(2, 15)
            a = [rng.gauss(0.0, 1.0) for _ in range(n1)]
            b = [rng.gauss(1.0, 2.0) for _ in range(n2)]
            mean = lambda v: sum(v) / len(v)
            sd = lambda v: math.sqrt(sum((x - mean(v)) ** 2 for x in v) / (len(v) - 1))
            t = stats.pooled_t_test(n1, mean(a), sd(a), n2, mean(b), sd(b)).t
            f = stats.anova_oneway([a, b]).f
            assert f == pytest.approx(t * t, abs=1e-6 * max(1.0, t * t))

    def test_matches_scipy(self):
        rng = random.Random(99)
        groups = [[rng.gauss(m, 1.0) for _ in range(8)] for m in (0.0, 0.5, 2.0)]
        result = stats.anova_oneway(groups)
        expected = scipy_stats.f_oneway(*groups)
        assert result.f == pytest.approx(expected.statistic, abs=1e-10)
        assert result.p == pytest.approx(expected.pvalue, abs=1e-10)

    def test_validation(self):
        with pytest.raises(ValueError):
            stats.anova_oneway([[1.0, 2.0]])
        with pytest.raises(ValueError):
            stats.anova_oneway([[1.0], [2.0, 3.0]])
