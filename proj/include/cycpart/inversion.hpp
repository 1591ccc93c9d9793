#pragma once

#include <concepts>
#include <cstdint>

#include "core.hpp"
#include "numtheory.hpp"

// Divisor-sum transforms through which Q decomposes into the A coefficients.
// Each takes an integer-valued function of two integers.
namespace cycpart {

template <typename F>
concept IntegerPairFunction = requires(F f, std::int64_t a, std::int64_t b) {
    { f(a, b) } -> std::convertible_to<SignedExact>;
};

/// Y(m,t) = Σ_{d | (m,t)} (-1)^{t(d+1)/d} (m/d) X(m/d, t/d).
template <IntegerPairFunction F>
SignedExact signed_divisor_transform(F&& x, std::int64_t m, std::int64_t t) {
    SignedExact sum = 0;
    for (std::int64_t d : divisors(gcd(m, t))) {
        SignedExact term = SignedExact(m / d) * SignedExact(x(m / d, t / d));
        sum += divisor_sign(t, d) < 0 ? SignedExact(-term) : term;
    }
    return sum;
}

/// Inverse of signed_divisor_transform:
/// X(m,t) = (1/m) Σ_{d | (m,t)} (-1)^{t(d+1)/d} μ(d) Y(m/d, t/d).
template <IntegerPairFunction F>
Rational signed_mobius_inverse(F&& y, std::int64_t m, std::int64_t t) {
    SignedExact sum = 0;
    for (std::int64_t d : divisors(gcd(m, t))) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        SignedExact term = y(m / d, t / d);
        sum += (mu * divisor_sign(t, d) < 0) ? SignedExact(-term) : term;
    }
    return Rational(sum, SignedExact(m));
}

/// (1/(muv)) Σ_{d | m} c_d(n) X(mu/d, dv).
template <IntegerPairFunction F>
Rational ramanujan_expansion(F&& x, std::int64_t m, std::int64_t n, std::int64_t u,
                             std::int64_t v) {
    SignedExact sum = 0;
    for (std::int64_t d : divisors(m)) {
        sum += ramanujan_sum(d, n) * SignedExact(x(m * u / d, d * v));
    }
    return Rational(sum, SignedExact(m * u * v));
}

/// The same quantity as ramanujan_expansion, written over pairs d1·d2 | m
/// with [d1 | n] d1 μ(d2) weights instead of Ramanujan sums.
template <IntegerPairFunction F>
Rational ramanujan_expansion_mobius(F&& x, std::int64_t m, std::int64_t n, std::int64_t u,
                                    std::int64_t v) {
    SignedExact sum = 0;
    for (std::int64_t d1 : divisors(m)) {
        if (n % d1 != 0) continue;
        for (std::int64_t d2 : divisors(m / d1)) {
            const int mu = mobius(d2);
            if (mu == 0) continue;
            SignedExact term = SignedExact(d1) * SignedExact(x(m * u / (d1 * d2), d1 * d2 * v));
            sum += mu < 0 ? SignedExact(-term) : term;
        }
    }
    return Rational(sum, SignedExact(m * u * v));
}

}  // namespace cycpart
