#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "genfunc.hpp"
#include "inversion.hpp"
#include "necklaces.hpp"
#include "oracle.hpp"
#include "partitions.hpp"

// Invariant sweeps comparing closed forms with the brute-force oracles.
namespace cycpart::verify {

struct Counterexample {
    std::string check;
    std::int64_t m = 0;
    std::int64_t t = 0;
    std::int64_t n = 0;
    std::string expected;
    std::string got;
    std::string extra;  // further parameters, e.g. "s=3 u=2"
};

struct CheckResult {
    std::string name;
    std::int64_t cases = 0;
    bool passed = true;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    std::optional<Counterexample> failure;

    bool passed() const { return !failure.has_value(); }
};

enum class Suite { Oracle, Dft, Identities };

inline constexpr std::int64_t kOracleSuiteMaxM = 16;
inline constexpr std::int64_t kDftSuiteMaxM = 10;
inline constexpr std::int64_t kNecklaceSweepMaxM = 14;

/// Records cases and the first mismatch of one named check.
class Recorder {
public:
    Recorder(SuiteReport& report, std::string name) : report_(report) {
        report_.checks.push_back(CheckResult{std::move(name), 0, true});
    }

    template <typename A, typename B>
    bool expect_equal(const A& expected, const B& got, std::int64_t m, std::int64_t t, std::int64_t n,
                      std::string extra = {}) {
        ++current().cases;
        if (expected == got) return true;
        fail(to_text(expected), to_text(got), m, t, n, std::move(extra));
        return false;
    }

    bool expect_within(double deviation, double tolerance, std::int64_t m, std::int64_t t,
                       std::int64_t n, std::string extra = {}) {
        ++current().cases;
        if (deviation <= tolerance) return true;
        fail("<= " + to_text(tolerance), to_text(deviation), m, t, n, std::move(extra));
        return false;
    }

    bool ok() const { return report_.checks.back().passed; }

private:
    CheckResult& current() { return report_.checks.back(); }

    void fail(std::string expected, std::string got, std::int64_t m, std::int64_t t, std::int64_t n,
              std::string extra) {
        current().passed = false;
        if (!report_.failure) {
            report_.failure =
                Counterexample{current().name, m, t, n, std::move(expected), std::move(got), std::move(extra)};
        }
    }

    template <typename V>
    static std::string to_text(const V& v) {
        if constexpr (std::is_same_v<V, bool>) {
            return v ? "true" : "false";
        } else if constexpr (std::is_arithmetic_v<V>) {
            std::ostringstream os;
            os.precision(17);
            os << v;
            return os.str();
        } else if constexpr (std::is_convertible_v<V, std::string>) {
            return std::string(v);
        } else {
            return v.str();
        }
    }

    SuiteReport& report_;
};

inline std::string join(const std::vector<std::int64_t>& values) {
    std::string out;
    for (auto v : values) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

inline SuiteReport run_oracle_suite(std::int64_t max_m) {
    SuiteReport rep{"oracle", {}, {}};
    {
        Recorder r(rep, "q_mod=subset_sum_oracle");
        for (std::int64_t m = 1; m <= max_m && r.ok(); ++m) {
            for (std::int64_t t = 0; t <= m && r.ok(); ++t) {
                const auto tally = oracle::enumerate_subset_sums(m, t);
                for (std::int64_t n = 0; n < m && r.ok(); ++n) r.expect_equal(tally.table[n], q_mod(m, t, n), m, t, n);
            }
        }
    }
    {
        Recorder r(rep, "maximizers=oracle_argmax");
        for (std::int64_t m = 1; m <= max_m && r.ok(); ++m) {
            for (std::int64_t t = 0; t <= m && r.ok(); ++t) {
                const auto table = oracle::enumerate_subset_sums(m, t).table;
                const auto best = *std::max_element(table.values.begin(), table.values.end());
                std::vector<std::int64_t> argmax;
                for (std::int64_t n = 0; n < m; ++n) {
                    if (table[n] == best) argmax.push_back(n);
                }
                const auto residues = maximizers(m, t).maximizing_residues;
                r.expect_equal(join(argmax), join(residues), m, t, 0, "argmax residues");
            }
        }
    }
    const std::int64_t neck_m = std::min(max_m, kNecklaceSweepMaxM);
    {
        Recorder r(rep, "count_freq_dividing=necklace_oracle");
        for (std::int64_t m = 1; m <= neck_m && r.ok(); ++m) {
            for (std::int64_t t = 0; t <= m && r.ok(); ++t) {
                const auto classes = oracle::enumerate_necklaces(m, t);
                for (std::int64_t n = 1; n <= m && r.ok(); ++n) {
                    std::int64_t c = 0;
                    for (const auto& w : classes) c += (n % w.frequency == 0);
                    r.expect_equal(ExactCount(c), count_freq_dividing(m, t, n), m, t, n);
                }
            }
        }
    }
    {
        Recorder r(rep, "theorem3=necklace_oracle");
        for (std::int64_t m = 1; m <= neck_m && r.ok(); ++m) {
            for (std::int64_t t = 0; t <= m && r.ok(); ++t) {
                const auto classes = oracle::enumerate_necklaces(m, t);
                for (std::int64_t n = 0; n < m && r.ok(); ++n) {
                    const auto c = theorem3_dispatch(m, t, n);
                    std::int64_t direct = 0;
                    for (const auto& w : classes) direct += c.selector.contains(w.frequency);
                    r.expect_equal(ExactCount(direct), c.count, m, t, n, "selector " + c.selector.describe());
                }
            }
        }
    }
    {
        Recorder r(rep, "subset_sums=q_recursive_split");
        for (std::int64_t m = 1; m <= std::min<std::int64_t>(max_m, 12) && r.ok(); ++m) {
            for (std::int64_t t = 0; t <= m && r.ok(); ++t) {
                const auto tally = oracle::enumerate_subset_sums(m, t);
                for (std::int64_t n = 0; n < m && r.ok(); ++n) {
                    ExactCount s = 0;
                    for (std::int64_t k = n; k <= m * m; k += m) {
                        s += oracle::q_recursive(m - 1, t, k) + oracle::q_recursive(m - 1, t - 1, k);
                    }
                    r.expect_equal(tally.table[n], s, m, t, n);
                }
            }
        }
    }
    return rep;
}

inline SuiteReport run_dft_suite(std::int64_t max_m) {
    using genfunc::Complex;
    SuiteReport rep{"dft", {}, {}};
    {
        Recorder r(rep, "generating_function=q_recursive");
        for (std::int64_t m = 1; m <= max_m && r.ok(); ++m) {
            const genfunc::BivariateExpansion f(m);
            for (std::int64_t t = 0; t <= m && r.ok(); ++t) {
                for (std::int64_t n = 0; n <= f.max_n() && r.ok(); ++n) {
                    r.expect_equal(oracle::q_recursive(m - 1, t, n), f.coefficient(t, n), m, t, n);
                }
            }
        }
    }
    {
        Recorder r(rep, "j_from_qstar=upsilon");
        for (std::int64_t m = 1; m <= max_m && r.ok(); ++m) {
            for (std::int64_t s = 1; s <= m + 1 && r.ok(); ++s) {
                for (std::int64_t t = 0; t <= m && r.ok(); ++t) {
                    for (std::int64_t u = 0; u < m && r.ok(); ++u) {
                        const auto [alpha, beta] = genfunc::alpha_beta(m, u);
                        const Complex j = genfunc::j_from_qstar(m, t, s, u);
                        const double dev = std::abs(j - genfunc::upsilon(s, t, alpha, beta).convert_to<double>());
                        r.expect_within(dev, 1e-6, m, t, 0, "s=" + std::to_string(s) + " u=" + std::to_string(u));
                    }
                }
            }
        }
    }
    {
        Recorder r(rep, "qstar_via_dft=definition");
        for (std::int64_t m = 1; m <= max_m + 2 && r.ok(); ++m) {
            for (std::int64_t s = 1; s <= m + 1 && r.ok(); ++s) {
                for (std::int64_t t = 0; t <= m && r.ok(); ++t) {
                    for (std::int64_t n = 0; n < m && r.ok(); ++n) {
                        r.expect_equal(genfunc::ddot_qstar_direct(m, t, s, n), genfunc::qstar_via_dft(m, t, s, n), m,
                                       t, n, "s=" + std::to_string(s));
                    }
                }
            }
        }
    }
    {
        Recorder r(rep, "f_closed_eval=f_direct");
        std::mt19937_64 rng(0x5eed);
        std::uniform_real_distribution<double> radius(0.25, 1.75);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        const std::int64_t top = 5 * max_m;
        for (std::int64_t m = 1; m <= top && r.ok(); ++m) {
            for (std::int64_t u = 1; u <= top && r.ok(); ++u) {
                const Complex y = genfunc::root_of_unity(u, m);
                for (int k = 0; k < 10 && r.ok(); ++k) {
                    const Complex z = std::polar(radius(rng), angle(rng));
                    const Complex a = genfunc::f_closed_eval(m, u, z);
                    const Complex b = genfunc::f_direct(m, 1.0, y, z);
                    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
                    r.expect_within(std::abs(a - b) / scale, 1e-9, m, 0, 0, "u=" + std::to_string(u));
                }
            }
        }
    }
    return rep;
}

inline SuiteReport run_identities_suite(std::int64_t max_m) {
    SuiteReport rep{"identities", {}, {}};
    const std::int64_t wide_m = std::max<std::int64_t>(max_m, 2 * max_m);
    {
        Recorder r(rep, "row_sum=binomial");
        for (std::int64_t m = 1; m <= wide_m && r.ok(); ++m) {
            for (std::int64_t t = 0; t <= m && r.ok(); ++t) r.expect_equal(binomial(m, t), q_table(m, t).total(), m, t, 0);
        }
    }
    {
        Recorder r(rep, "roots_of_unity_vanish");
        for (std::int64_t m = 2; m <= wide_m && r.ok(); ++m) {
            for (std::int64_t t = 1; t < m && r.ok(); ++t) {
                const auto table = q_table(m, t);
                std::complex<long double> s = 0;
                for (std::int64_t n = 0; n < m; ++n) {
                    const long double a = 2.0L * std::numbers::pi_v<long double> * n / m;
                    s += table[n].convert_to<long double>() * std::polar(1.0L, a);
                }
                r.expect_within(static_cast<double>(std::max(std::abs(s.real()), std::abs(s.imag()))), 1e-6, m, t, 0);
            }
        }
    }
    {
        Recorder r(rep, "gcd_class_symmetry");
        for (std::int64_t m = 1; m <= max_m && r.ok(); ++m) {
            for (std::int64_t t = 0; t <= m && r.ok(); ++t) {
                const auto table = q_table(m, t);
                for (std::int64_t n = 0; n < m && r.ok(); ++n) {
                    const std::int64_t rep_n = gcd(n, t, m) % m;
                    r.expect_equal(table[rep_n], table[n], m, t, n);
                }
            }
        }
    }
    {
        Recorder r(rep, "q=q_star_split");
        for (std::int64_t m = 1; m <= std::min<std::int64_t>(max_m, 12) && r.ok(); ++m) {
            for (std::int64_t t = 0; t <= m && r.ok(); ++t) {
                for (std::int64_t n = 0; n < m && r.ok(); ++n) {
                    r.expect_equal(true, q_split_check(m, t, n), m, t, n);
                }
            }
        }
    }
    {
        Recorder r(rep, "ddot_q=congruence_sum");
        for (std::int64_t m = 1; m <= max_m && r.ok(); ++m) {
            for (std::int64_t s = 1; s <= m && r.ok(); ++s) {
                for (std::int64_t n = 0; n < m && r.ok(); ++n) {
                    ExactCount direct = 0;
                    for (std::int64_t u = 0; u <= m; u += s) direct += q_mod(m, u, n);
                    r.expect_equal(direct, ddot_q(m, 0, s, n), m, 0, n, "s=" + std::to_string(s));
                }
            }
        }
    }
    {
        Recorder r(rep, "a_identities");
        for (std::int64_t m = 1; m <= wide_m && r.ok(); ++m) {
            for (std::int64_t t = 0; t <= m && r.ok(); ++t) {
                r.expect_equal(true, a_coeff(m, t) >= 0, m, t, 0, "A >= 0");
                r.expect_equal(true, binomial_via_a_check(m, t), m, t, 0, "binomial via A");
                r.expect_equal(q_mod(m, t, 1), a_coeff(m, t), m, t, 1, "A = Q(1)");
                for (std::int64_t n = 0; n < m && r.ok(); ++n) r.expect_equal(q_mod(m, t, n), q_via_a(m, t, n), m, t, n);
            }
        }
    }
    {
        Recorder r(rep, "necklace_decomposition");
        for (std::int64_t m = 1; m <= wide_m && r.ok(); ++m) {
            for (std::int64_t t = 0; t <= m && r.ok(); ++t) {
                for (std::int64_t n = 1; n <= m && r.ok(); ++n) {
                    ExactCount s = 0;
                    for (auto d : divisors(gcd(m, t, n))) s += count_aperiodic(m / d, t / d);
                    r.expect_equal(s, count_freq_dividing(m, t, n), m, t, n);
                }
            }
        }
    }
    {
        Recorder r(rep, "theorem3_dispatch");
        for (std::int64_t m = 1; m <= max_m && r.ok(); ++m) {
            for (std::int64_t t = 0; t <= m && r.ok(); ++t) {
                for (std::int64_t n = 0; n < m && r.ok(); ++n) {
                    try {
                        const auto c = theorem3_dispatch(m, t, n);
                        r.expect_equal(q_mod(m, t, n), c.count, m, t, n);
                    } catch (const theorem_violation& e) {
                        r.expect_equal(q_mod(m, t, n).str(), std::string("violation: ") + e.what(), m, t, n);
                    }
                }
            }
        }
    }
    {
        Recorder r(rep, "identity_audit_balanced");
        for (std::int64_t m = 1; m <= wide_m && r.ok(); ++m) {
            const auto a = identity_audit(m);
            r.expect_equal(a.partition_total, a.necklace_total - a.excluded_total(), m, 0, 0);
        }
    }
    {
        Recorder r(rep, "signed_mobius_round_trip");
        for (std::uint64_t seed = 1; seed <= 10 && r.ok(); ++seed) {
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
            std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> memo;
            auto x = [&](std::int64_t a, std::int64_t b) -> SignedExact {
                auto [it, fresh] = memo.try_emplace({a, b}, 0);
                if (fresh) it->second = dist(rng);
                return it->second;
            };
            auto y = [&](std::int64_t a, std::int64_t b) { return signed_divisor_transform(x, a, b); };
            for (std::int64_t m = 1; m <= max_m && r.ok(); ++m) {
                for (std::int64_t t = 0; t <= max_m && r.ok(); ++t) {
                    r.expect_equal(Rational(x(m, t)), signed_mobius_inverse(y, m, t), m, t, 0,
                                   "seed=" + std::to_string(seed));
                }
            }
        }
    }
    {
        Recorder r(rep, "ramanujan_expansion_forms");
        for (std::uint64_t seed = 1; seed <= 10 && r.ok(); ++seed) {
            std::mt19937_64 rng(seed + 1000);
            std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
            std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> memo;
            auto x = [&](std::int64_t a, std::int64_t b) -> SignedExact {
                auto [it, fresh] = memo.try_emplace({a, b}, 0);
                if (fresh) it->second = dist(rng);
                return it->second;
            };
            for (std::int64_t m = 1; m <= max_m && r.ok(); ++m) {
                for (std::int64_t n = 0; n < m && r.ok(); ++n) {
                    for (std::int64_t u = 1; u <= 4 && r.ok(); ++u) {
                        for (std::int64_t v = 1; v <= 4 && r.ok(); ++v) {
                            r.expect_equal(ramanujan_expansion(x, m, n, u, v), ramanujan_expansion_mobius(x, m, n, u, v),
                                           m, 0, n, "u=" + std::to_string(u) + " v=" + std::to_string(v));
                        }
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace cycpart::verify
