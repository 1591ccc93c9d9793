#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "numtheory.hpp"
#include "oracle.hpp"

namespace cycpart {

/// Q_{m,t}(n): number of t-element subsets of Z/mZ summing to n.
/// Zero outside 0 ≤ t ≤ m.
inline ExactCount q_mod(std::int64_t m, std::int64_t t, std::int64_t n) {
    detail::require_positive(m, "q_mod");
    if (t < 0 || t > m) return 0;
    const std::int64_t r = canonical_residue(n, m);
    SignedExact sum = 0;
    for (std::int64_t d : divisors(gcd(m, t))) {
        SignedExact term = binomial(m / d, t / d) * ramanujan_sum(d, r);
        if (divisor_sign(t, d) < 0) term = -term;
        sum += term;
    }
    return exact_quotient(sum, m, "q_mod");
}

inline CountTable q_table(std::int64_t m, std::int64_t t) {
    detail::require_positive(m, "q_table");
    CountTable out{m, t, {}};
    out.values.reserve(static_cast<std::size_t>(m));
    for (std::int64_t n = 0; n < m; ++n) out.values.push_back(q_mod(m, t, n));
    return out;
}

/// Q*_{m,t}(n): as q_mod but the part 0 mod m is forbidden.
inline ExactCount q_star(std::int64_t m, std::int64_t t, std::int64_t n) {
    detail::require_positive(m, "q_star");
    if (t < 0) return 0;
    const std::int64_t r = canonical_residue(n, m);
    const std::int64_t max_sum = t * (m - 1);
    ExactCount sum = 0;
    for (std::int64_t s = r; s <= max_sum; s += m) sum += oracle::q_recursive(m - 1, t, s);
    return sum;
}

inline bool q_split_check(std::int64_t m, std::int64_t t, std::int64_t n) {
    return q_mod(m, t, n) == q_star(m, t - 1, n) + q_star(m, t, n);
}

/// Q̈_{m,t,s}(n) = Σ_{u ≡ t (mod s)} Q_{m,u}(n), evaluated by the Ramanujan-sum
/// double sum rather than by adding q_mod values.
inline ExactCount ddot_q(std::int64_t m, std::int64_t t, std::int64_t s, std::int64_t n) {
    detail::require_positive(m, "ddot_q");
    detail::require_positive(s, "ddot_q");
    const std::int64_t r = canonical_residue(n, m);
    SignedExact sum = 0;
    for (std::int64_t d : divisors(m)) {
        SignedExact inner = 0;
        for (std::int64_t j = 0; j <= m; j += d) {
            if ((j - t) % s != 0) continue;
            ExactCount b = binomial(m / d, j / d);
            if (divisor_sign(j, d) < 0) inner -= b;
            else inner += b;
        }
        if (inner != 0) sum += inner * ramanujan_sum(d, r);
    }
    return exact_quotient(sum, m, "ddot_q");
}

/// A(m,t) = (1/m) Σ_{d | (m,t)} (-1)^{t(d+1)/d} μ(d) C(m/d, t/d).
inline ExactCount a_coeff(std::int64_t m, std::int64_t t) {
    detail::require_positive(m, "a_coeff");
    if (t < 0) return 0;
    SignedExact sum = 0;
    for (std::int64_t d : divisors(gcd(m, t))) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        SignedExact term = binomial(m / d, t / d);
        if (mu * divisor_sign(t, d) < 0) term = -term;
        sum += term;
    }
    return exact_quotient(sum, m, "a_coeff");
}

/// Q_{m,t}(n) rebuilt from A over the divisors of (n, t, m).
inline ExactCount q_via_a(std::int64_t m, std::int64_t t, std::int64_t n) {
    detail::require_positive(m, "q_via_a");
    if (t < 0 || t > m) return 0;
    const std::int64_t g = gcd(canonical_residue(n, m), t, m);
    SignedExact sum = 0;
    for (std::int64_t d : divisors(g)) {
        SignedExact a = a_coeff(m / d, t / d);
        sum += divisor_sign(t, d) < 0 ? SignedExact(-a) : a;
    }
    return sum;
}

inline bool binomial_via_a_check(std::int64_t m, std::int64_t t) {
    detail::require_positive(m, "binomial_via_a_check");
    if (t < 0) return binomial(m, t) == 0;
    SignedExact sum = 0;
    for (std::int64_t d : divisors(gcd(m, t))) {
        SignedExact term = SignedExact(m / d) * a_coeff(m / d, t / d);
        sum += divisor_sign(t, d) < 0 ? SignedExact(-term) : term;
    }
    return sum == binomial(m, t);
}

struct MaximizerReport {
    std::int64_t m = 1;
    std::int64_t t = 0;
    int case_id = 1;
    std::int64_t witness_gcd = 1;
    std::vector<std::int64_t> maximizing_residues;
    ExactCount max_value = 0;
};

/// Residues n maximizing Q_{m,t}(n), classified by the parity and 2-adic
/// valuation of (t, m).
inline MaximizerReport maximizers(std::int64_t m, std::int64_t t) {
    detail::require_positive(m, "maximizers");
    if (t < 0 || t > m) {
        throw std::domain_error("maximizers requires 0 <= t <= m, got t=" + std::to_string(t));
    }
    MaximizerReport rep;
    rep.m = m;
    rep.t = t;
    const std::int64_t g = gcd(t, m);
    if (g % 2 != 0) {
        rep.case_id = 1;
        rep.witness_gcd = g;
    } else if (v2(g) < v2(t)) {
        rep.case_id = 2;
        rep.witness_gcd = g;
    } else {
        rep.case_id = 3;
        rep.witness_gcd = g / 2;
    }
    for (std::int64_t n = 0; n < m; ++n) {
        if (gcd(n, t, m) == rep.witness_gcd) rep.maximizing_residues.push_back(n);
    }
    rep.max_value = q_mod(m, t, rep.maximizing_residues.front());
    return rep;
}

/// Law of (a_1 + ... + a_t) mod m for t labels drawn without replacement from
/// {0, ..., m-1}. Probabilities are counts[n] / draws.
struct UrnDistribution {
    std::int64_t m = 1;
    std::int64_t t = 0;
    CountTable counts;
    ExactCount draws = 1;

    Rational probability(std::int64_t n) const {
        return Rational(counts[static_cast<std::size_t>(canonical_residue(n, m))], draws);
    }

    std::vector<Rational> probabilities() const {
        std::vector<Rational> out;
        for (std::int64_t n = 0; n < m; ++n) out.push_back(probability(n));
        return out;
    }
};

inline UrnDistribution urn_distribution(std::int64_t m, std::int64_t t) {
    detail::require_positive(m, "urn_distribution");
    if (t < 0 || t > m) {
        throw std::domain_error("urn_distribution requires 0 <= t <= m, got t=" + std::to_string(t));
    }
    return UrnDistribution{m, t, q_table(m, t), binomial(m, t)};
}

}  // namespace cycpart
