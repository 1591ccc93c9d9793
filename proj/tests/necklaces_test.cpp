#include <cycpart/necklaces.hpp>
#include <cycpart/oracle.hpp>

#include <gtest/gtest.h>

#include <map>
#include <vector>

using namespace cycpart;

namespace {

std::int64_t oracle_count_dividing(std::int64_t m, std::int64_t t, std::int64_t n) {
    std::int64_t c = 0;
    for (const auto& w : oracle::enumerate_necklaces(m, t)) c += (n % w.frequency == 0);
    return c;
}

std::int64_t oracle_count_selected(std::int64_t m, std::int64_t t, const FreqSelector& sel) {
    std::int64_t c = 0;
    for (const auto& w : oracle::enumerate_necklaces(m, t)) c += sel.contains(w.frequency);
    return c;
}

}  // namespace

TEST(CountAperiodic, SpotValues) {
    EXPECT_EQ(oracle_count_dividing(8, 2, 1), 3);
    EXPECT_EQ(count_aperiodic(8, 2), 3);
    EXPECT_EQ(oracle_count_dividing(4, 2, 1), 1);
    EXPECT_EQ(count_aperiodic(4, 2), 1);
    EXPECT_EQ(count_aperiodic(1, 0), 1);
    EXPECT_EQ(count_aperiodic(5, 0), 0);
    EXPECT_THROW(count_aperiodic(4, 5), std::domain_error);
}

TEST(CountFreqDividing, SpotValues) {
    EXPECT_EQ(count_freq_dividing(8, 4, 4), 10);
    EXPECT_EQ(count_freq_dividing(8, 2, 1), 3);
    EXPECT_EQ(oracle_count_dividing(4, 2, 2), 2);
    EXPECT_EQ(count_freq_dividing(4, 2, 2), 2);
    EXPECT_EQ(count_freq_dividing(8, 0, 8), 1);
    EXPECT_EQ(count_freq_dividing(8, 0, 4), 0);
    EXPECT_THROW(count_freq_dividing(8, 2, 0), std::domain_error);
}

TEST(CountFreqDividing, MatchesOracle) {
    for (std::int64_t m = 1; m <= 14; ++m) {
        for (std::int64_t t = 0; t <= m; ++t) {
            for (std::int64_t n = 1; n <= m; ++n) {
                ASSERT_EQ(count_freq_dividing(m, t, n), oracle_count_dividing(m, t, n)) << m << ' ' << t << ' ' << n;
            }
        }
    }
}

TEST(CountFreqDividing, DecomposesIntoAperiodicCounts) {
    for (std::int64_t m = 1; m <= 40; ++m) {
        for (std::int64_t t = 0; t <= m; ++t) {
            for (std::int64_t n = 1; n <= m; ++n) {
                ExactCount s = 0;
                for (auto d : divisors(gcd(m, t, n))) s += count_aperiodic(m / d, t / d);
                ASSERT_EQ(count_freq_dividing(m, t, n), s) << m << ' ' << t << ' ' << n;
            }
        }
    }
}

TEST(CountWithFrequency, SupportedOnDivisorsOfGcd) {
    for (std::int64_t m = 1; m <= 14; ++m) {
        for (std::int64_t t = 0; t <= m; ++t) {
            std::map<std::int64_t, std::int64_t> by_freq;
            for (const auto& w : oracle::enumerate_necklaces(m, t)) ++by_freq[w.frequency];
            for (std::int64_t u = 1; u <= m; ++u) {
                ASSERT_EQ(count_with_frequency(m, t, u), by_freq[u]) << m << ' ' << t << ' ' << u;
                if (t >= 1 && gcd(m, t) % u != 0) ASSERT_EQ(by_freq[u], 0);
            }
        }
    }
}

TEST(FreqSelector, Membership) {
    const auto d6 = FreqSelector::divisors_of(6);
    EXPECT_TRUE(d6.contains(3));
    EXPECT_FALSE(d6.contains(4));
    EXPECT_FALSE(d6.contains(0));
    EXPECT_EQ(d6.describe(), "<6>");
    EXPECT_EQ(d6.divisor_bound(), 6);

    const auto set = FreqSelector::explicit_set({2, 5});
    EXPECT_TRUE(set.contains(5));
    EXPECT_FALSE(set.contains(1));
    EXPECT_EQ(set.describe(), "{2,5}");

    const auto scaled = FreqSelector::scaled(4, FreqSelector::divisors_of(3));
    EXPECT_TRUE(scaled.contains(12));
    EXPECT_TRUE(scaled.contains(4));
    EXPECT_FALSE(scaled.contains(3));
    EXPECT_FALSE(scaled.contains(8));
    EXPECT_EQ(scaled.describe(), "4*<3>");
    EXPECT_EQ(scaled.divisor_bound(), 0);

    EXPECT_THROW(FreqSelector::divisors_of(0), std::domain_error);
}

TEST(CountSelected, MatchesOracleForEverySelectorKind) {
    for (std::int64_t m = 1; m <= 12; ++m) {
        for (std::int64_t t = 0; t <= m; ++t) {
            for (std::int64_t k = 1; k <= m; ++k) {
                const auto sel = FreqSelector::divisors_of(k);
                ASSERT_EQ(count_selected(m, t, sel), oracle_count_selected(m, t, sel));
                const auto scaled = FreqSelector::scaled(2, sel);
                ASSERT_EQ(count_selected(m, t, scaled), oracle_count_selected(m, t, scaled));
                const auto set = FreqSelector::explicit_set({k, 2 * k});
                ASSERT_EQ(count_selected(m, t, set), oracle_count_selected(m, t, set));
            }
        }
    }
}

TEST(Theorem3, SpotValues) {
    const auto c1 = theorem3_dispatch(5, 2, 3);
    EXPECT_EQ(c1.case_id, 1);
    EXPECT_EQ(c1.selector.describe(), "<3>");
    EXPECT_EQ(c1.count, 2);

    const auto c3 = theorem3_dispatch(8, 4, 2);
    EXPECT_EQ(c3.case_id, 3);
    EXPECT_EQ(c3.selector.describe(), "<4>");
    EXPECT_EQ(c3.count, 10);

    const auto c4 = theorem3_dispatch(8, 2, 0);
    EXPECT_EQ(c4.case_id, 4);
    EXPECT_EQ(c4.selector.describe(), "<1>");
    EXPECT_EQ(c4.count, 3);

    const auto c2 = theorem3_dispatch(8, 4, 1);
    EXPECT_EQ(c2.case_id, 2);
    EXPECT_EQ(c2.selector.describe(), "<1>");
    EXPECT_EQ(c2.count, count_aperiodic(8, 4));
    EXPECT_EQ(c2.count, oracle_count_dividing(8, 4, 1));

    EXPECT_EQ(theorem3_dispatch(6, 0, 0).selector.describe(), "<6>");
    EXPECT_EQ(theorem3_dispatch(6, 0, 0).count, 1);
    EXPECT_THROW(theorem3_dispatch(4, 5, 0), std::domain_error);
}

TEST(Theorem3, HoldsAndMatchesOracle) {
    for (std::int64_t m = 1; m <= 16; ++m) {
        for (std::int64_t t = 0; t <= m; ++t) {
            for (std::int64_t n = 0; n < m; ++n) {
                Theorem3Case c;
                ASSERT_NO_THROW(c = theorem3_dispatch(m, t, n)) << m << ' ' << t << ' ' << n;
                if (m <= 14) ASSERT_EQ(c.count, oracle_count_selected(m, t, c.selector));
            }
        }
    }
}

TEST(Theorem3, SubtractionIdentity) {
    for (std::int64_t m = 2; m <= 16; ++m) {
        for (std::int64_t t = 1; t <= m; ++t) {
            const Valuation vt = v2(t);
            if (!(v2(m) >= vt && vt >= Valuation(1))) continue;
            const std::int64_t v = vt.value();
            const std::int64_t pow2 = std::int64_t{1} << v;
            const std::int64_t big_m = m / pow2;
            const std::int64_t big_t = t / pow2;
            for (std::int64_t n = 1; n <= m; ++n) {
                std::int64_t odd = n;
                while (odd % 2 == 0) odd /= 2;
                const SignedExact c = ramanujan_sum(pow2, n);
                const SignedExact ratio = c / (pow2 / 2);
                ASSERT_EQ(c % (pow2 / 2), 0);
                const SignedExact rhs = SignedExact(count_freq_dividing(m, t, n)) -
                                        ratio * SignedExact(count_freq_dividing(big_m, big_t, odd));
                ASSERT_EQ(SignedExact(q_mod(m, t, n)), rhs) << m << ' ' << t << ' ' << n;
            }
        }
    }
}

TEST(IdentityAudit, EightBeads) {
    const auto a = identity_audit(8);
    EXPECT_EQ(a.partition_total, 32);
    EXPECT_EQ(a.necklace_total, 36);
    ASSERT_EQ(a.excluded.size(), 4u);
    const std::vector<std::pair<std::int64_t, std::int64_t>> expected{{2, 2}, {4, 4}, {6, 2}, {8, 8}};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(a.excluded[i].t, expected[i].first);
        EXPECT_EQ(a.excluded[i].frequency, expected[i].second);
        EXPECT_EQ(a.excluded[i].count, 1);
    }
    EXPECT_TRUE(a.balanced());
}

TEST(IdentityAudit, OddAndSmallCases) {
    const auto a5 = identity_audit(5);
    EXPECT_TRUE(a5.excluded.empty());
    EXPECT_EQ(a5.partition_total, a5.necklace_total);

    const auto a2 = identity_audit(2);
    EXPECT_EQ(a2.partition_total, 2);
    EXPECT_EQ(a2.necklace_total, 3);
    ASSERT_EQ(a2.excluded.size(), 1u);
    EXPECT_EQ(a2.excluded[0].t, 2);
    EXPECT_EQ(a2.excluded[0].frequency, 2);
}

TEST(IdentityAudit, BalancedAndMatchesOracleTotals) {
    for (std::int64_t m = 1; m <= 64; ++m) ASSERT_TRUE(identity_audit(m).balanced()) << m;
    for (std::int64_t m = 1; m <= 14; ++m) {
        std::int64_t classes = 0;
        ExactCount partitions = 0;
        for (std::int64_t t = 0; t <= m; ++t) {
            classes += static_cast<std::int64_t>(oracle::enumerate_necklaces(m, t).size());
            partitions += oracle::enumerate_subset_sums(m, t).table[0];
        }
        const auto a = identity_audit(m);
        EXPECT_EQ(a.necklace_total, classes);
        EXPECT_EQ(a.partition_total, partitions);
    }
}
