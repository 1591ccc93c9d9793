#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace cycpart {

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b, std::int64_t c) {
    return gcd(gcd(a, b), c);
}

/// Integer n together with its modulus, held as the representative in [0, m).
class ResidueClass {
public:
    ResidueClass(std::int64_t n, std::int64_t modulus) : modulus_(modulus) {
        if (modulus < 1) throw std::domain_error("modulus must be positive");
        value_ = n % modulus;
        if (value_ < 0) value_ += modulus;
    }

    std::int64_t value() const { return value_; }
    std::int64_t modulus() const { return modulus_; }

    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

private:
    std::int64_t value_ = 0;
    std::int64_t modulus_ = 1;
};

inline std::int64_t canonical_residue(std::int64_t n, std::int64_t m) {
    return ResidueClass(n, m).value();
}

/// 2-adic valuation; v2(0) is infinite and compares above every finite value.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(unsigned v) : finite_(v) {}

    static constexpr Valuation infinity() { return Valuation(); }

    constexpr bool is_infinite() const { return !finite_.has_value(); }

    unsigned value() const {
        if (!finite_) throw std::domain_error("valuation is infinite");
        return *finite_;
    }

    friend constexpr bool operator==(const Valuation&, const Valuation&) = default;

    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() <=> b.is_infinite();
        }
        return *a.finite_ <=> *b.finite_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
        if (v.is_infinite()) return os << "inf";
        return os << *v.finite_;
    }

private:
    std::optional<unsigned> finite_;
};

inline Valuation v2(std::int64_t n) {
    if (n == 0) return Valuation::infinity();
    unsigned k = 0;
    std::uint64_t u = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    while ((u & 1u) == 0) {
        u >>= 1;
        ++k;
    }
    return Valuation(k);
}

namespace detail {

inline void require_positive(std::int64_t n, const char* what) {
    if (n < 1) {
        throw std::domain_error(std::string(what) + " requires a positive argument, got " +
                                std::to_string(n));
    }
}

/// Prime factorization by trial division, primes ascending.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace detail

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    detail::require_positive(n, "divisors");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline int mobius(std::int64_t n) {
    detail::require_positive(n, "mobius");
    int sign = 1;
    for (const auto& [p, e] : detail::factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline ExactCount totient(std::int64_t n) {
    detail::require_positive(n, "totient");
    std::int64_t phi = n;
    for (const auto& [p, e] : detail::factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

/// Ramanujan's sum c_d(n) via Hölder's closed form μ(d/g)·φ(d)/φ(d/g), g = (d, n).
inline SignedExact ramanujan_sum(std::int64_t d, std::int64_t n) {
    detail::require_positive(d, "ramanujan_sum");
    const std::int64_t g = gcd(d, n);
    const std::int64_t q = d / g;
    const int mu = mobius(q);
    if (mu == 0) return 0;
    return SignedExact(mu) * totient(d) / totient(q);
}

/// Exact C(n, k); zero outside 0 ≤ k ≤ n.
inline ExactCount binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::domain_error("binomial requires n >= 0");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    ExactCount r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// H_{m,u}(d) = d / (u, d) on the divisor lattice of m.
inline std::int64_t divisor_endo(std::int64_t m, std::int64_t u, std::int64_t d) {
    detail::require_positive(m, "divisor_endo");
    detail::require_positive(u, "divisor_endo");
    if (d < 1 || m % d != 0) {
        throw std::domain_error(std::to_string(d) + " does not divide " + std::to_string(m));
    }
    return d / gcd(u, d);
}

/// All d | m with H_{m,u}(d) = dprime, ascending. Empty when dprime is not in the image.
inline std::vector<std::int64_t> divisor_endo_preimage(std::int64_t m, std::int64_t u,
                                                       std::int64_t dprime) {
    std::vector<std::int64_t> out;
    if (dprime < 1) return out;
    for (std::int64_t d : divisors(m)) {
        if (divisor_endo(m, u, d) == dprime) out.push_back(d);
    }
    return out;
}

/// Image of H_{m,u} over all divisors of m, ascending and without duplicates.
inline std::vector<std::int64_t> divisor_endo_image(std::int64_t m, std::int64_t u) {
    std::vector<std::int64_t> out;
    for (std::int64_t d : divisors(m)) out.push_back(divisor_endo(m, u, d));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Parity of t + t/d, i.e. the sign (-1)^{t(d+1)/d} for d | t.
inline int divisor_sign(std::int64_t t, std::int64_t d) {
    return ((t + t / d) % 2 == 0) ? 1 : -1;
}

}  // namespace cycpart
