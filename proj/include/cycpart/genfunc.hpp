#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "core.hpp"
#include "numtheory.hpp"
#include "partitions.hpp"

// Generating function F_m(x,y,z) = Π_{j=1}^{m-1} (x + z y^j) and the discrete
// Fourier machinery built on it. Floating point appears only in values that
// are compared against exact results; every count stays exact.
namespace cycpart::genfunc {

using Complex = std::complex<double>;

/// e^{2πik/m}, with k reduced mod m first.
inline Complex root_of_unity(std::int64_t k, std::int64_t m) {
    const std::int64_t r = canonical_residue(k, m);
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m));
}

inline Complex ipow(Complex base, std::int64_t e) {
    Complex r = 1.0;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// F_0 = 0 and F_1 = 1 by convention.
inline Complex f_direct(std::int64_t m, Complex x, Complex y, Complex z) {
    if (m < 0) throw std::domain_error("f_direct requires m >= 0");
    if (m == 0) return 0.0;
    Complex prod = 1.0;
    Complex yj = 1.0;
    for (std::int64_t j = 1; j < m; ++j) {
        yj *= y;
        prod *= x + z * yj;
    }
    return prod;
}

struct SignedPolynomial {
    std::vector<SignedExact> coefficients;  // index = power of z

    void trim() {
        while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
    }

    std::int64_t degree() const { return static_cast<std::int64_t>(coefficients.size()) - 1; }

    Complex evaluate(Complex z) const {
        Complex acc = 0.0;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
            acc = acc * z + it->convert_to<double>();
        }
        return acc;
    }

    friend bool operator==(const SignedPolynomial&, const SignedPolynomial&) = default;
};

struct AlphaBeta {
    std::int64_t alpha = 1;  // m / (m, u)
    std::int64_t beta = 1;   // (m, u)
};

/// u ≡ 0 (mod m) is read as u = m, so α = 1 and β = m.
inline AlphaBeta alpha_beta(std::int64_t m, std::int64_t u) {
    detail::require_positive(m, "alpha_beta");
    std::int64_t r = canonical_residue(u, m);
    if (r == 0) r = m;
    const std::int64_t g = gcd(m, r);
    return {m / g, g};
}

/// Coefficients of F_m(1, λ_m^u, z): (-1)^{⌊j/α⌋+j} C(β-1, ⌊j/α⌋) for 0 ≤ j < m.
inline SignedPolynomial f_closed_coeffs(std::int64_t m, std::int64_t u) {
    detail::require_positive(m, "f_closed_coeffs");
    detail::require_positive(u, "f_closed_coeffs");
    const auto [alpha, beta] = alpha_beta(m, u);
    SignedPolynomial p;
    p.coefficients.reserve(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) {
        const std::int64_t k = j / alpha;
        SignedExact c = binomial(beta - 1, k);
        if ((k + j) % 2 != 0) c = -c;
        p.coefficients.push_back(std::move(c));
    }
    p.trim();
    return p;
}

/// (1 - (-z)^α)^β / (1 + z). Near the removable point z = -1 the quotient is
/// replaced by the product of the geometric factor Σ_{k<α} (-z)^k and
/// (1 - (-z)^α)^{β-1}.
inline Complex f_closed_eval(std::int64_t m, std::int64_t u, Complex z) {
    const auto [alpha, beta] = alpha_beta(m, u);
    const Complex head = 1.0 - ipow(-z, alpha);
    if (std::abs(1.0 + z) >= 1e-2) {
        return ipow(head, beta) / (1.0 + z);
    }
    Complex geometric = 0.0;
    Complex term = 1.0;
    for (std::int64_t k = 0; k < alpha; ++k) {
        geometric += term;
        term *= -z;
    }
    return geometric * ipow(head, beta - 1);
}

/// Υ_{s,t}(α,β) = Σ_{j ≡ t (mod s), 0 ≤ j < αβ} (-1)^{⌊j/α⌋+j} C(β-1, ⌊j/α⌋).
inline SignedExact upsilon(std::int64_t s, std::int64_t t, std::int64_t alpha,
                           std::int64_t beta) {
    detail::require_positive(s, "upsilon");
    detail::require_positive(alpha, "upsilon");
    detail::require_positive(beta, "upsilon");
    SignedExact sum = 0;
    const std::int64_t start = canonical_residue(t, s);
    for (std::int64_t j = start; j < alpha * beta; j += s) {
        const std::int64_t k = j / alpha;
        ExactCount c = binomial(beta - 1, k);
        if ((k + j) % 2 != 0) sum -= c;
        else sum += c;
    }
    return sum;
}

/// Q̈*_{m,t,s}(n) straight from its definition: Σ_{u ≡ t (mod s)} Q*_{m,u}(n).
inline ExactCount ddot_qstar_direct(std::int64_t m, std::int64_t t, std::int64_t s,
                                    std::int64_t n) {
    detail::require_positive(s, "ddot_qstar_direct");
    ExactCount sum = 0;
    for (std::int64_t u = canonical_residue(t, s); u <= m; u += s) sum += q_star(m, u, n);
    return sum;
}

/// J_{m,t,s}(u) = Σ_n Q̈*_{m,t,s}(n) λ_m^{un}, computed from the definitions.
inline Complex j_from_qstar(std::int64_t m, std::int64_t t, std::int64_t s, std::int64_t u) {
    detail::require_positive(m, "j_from_qstar");
    Complex sum = 0.0;
    for (std::int64_t n = 0; n < m; ++n) {
        sum += ddot_qstar_direct(m, t, s, n).convert_to<double>() * root_of_unity(u * n, m);
    }
    return sum;
}

/// Q̈*_{m,t,s}(n) by inverting the transform: (1/m) Σ_{d | m} Υ_{s,t}(d, m/d) c_d(n).
inline ExactCount qstar_via_dft(std::int64_t m, std::int64_t t, std::int64_t s, std::int64_t n) {
    detail::require_positive(m, "qstar_via_dft");
    detail::require_positive(s, "qstar_via_dft");
    const std::int64_t r = canonical_residue(n, m);
    SignedExact sum = 0;
    for (std::int64_t d : divisors(m)) sum += upsilon(s, t, d, m / d) * ramanujan_sum(d, r);
    return exact_quotient(sum, m, "qstar_via_dft");
}

/// Dense coefficients of Π_{j=1}^{m-1} (1 + z y^j): coefficient(t, n) of y^n z^t.
class BivariateExpansion {
public:
    explicit BivariateExpansion(std::int64_t m) : m_(m) {
        if (m < 0) throw std::domain_error("expansion requires m >= 0");
        if (m == 0) return;  // F_0 = 0
        const std::int64_t max_t = m - 1;
        const std::int64_t max_n = m * (m - 1) / 2;
        coeffs_.assign(static_cast<std::size_t>(max_t + 1),
                       std::vector<ExactCount>(static_cast<std::size_t>(max_n + 1), 0));
        coeffs_[0][0] = 1;
        for (std::int64_t j = 1; j < m; ++j) {
            for (std::int64_t t = j; t >= 1; --t) {
                for (std::int64_t n = max_n; n >= j; --n) coeffs_[t][n] += coeffs_[t - 1][n - j];
            }
        }
    }

    ExactCount coefficient(std::int64_t t, std::int64_t n) const {
        if (t < 0 || n < 0 || t >= static_cast<std::int64_t>(coeffs_.size())) return 0;
        const auto& row = coeffs_[static_cast<std::size_t>(t)];
        if (n >= static_cast<std::int64_t>(row.size())) return 0;
        return row[static_cast<std::size_t>(n)];
    }

    std::int64_t max_t() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    std::int64_t max_n() const { return m_ * (m_ - 1) / 2; }

private:
    std::int64_t m_ = 0;
    std::vector<std::vector<ExactCount>> coeffs_;
};

}  // namespace cycpart::genfunc
