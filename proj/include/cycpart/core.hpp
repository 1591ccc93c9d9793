#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cycpart {

/// Arbitrary-precision integer used for every count (non-negative by context).
using ExactCount = boost::multiprecision::cpp_int;
/// Same representation, used where intermediate values may be negative.
using SignedExact = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a sum that must be a multiple of its normalizer is not.
/// Indicates an implementation bug, never bad input.
class inexact_division : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline ExactCount exact_quotient(const SignedExact& numerator, std::int64_t denominator,
                                 const char* what) {
    SignedExact q, r;
    boost::multiprecision::divide_qr(numerator, SignedExact(denominator), q, r);
    if (r != 0) {
        throw inexact_division(std::string(what) + ": " + numerator.str() +
                               " is not divisible by " + std::to_string(denominator));
    }
    return q;
}

/// n ↦ Q_{m,t}(n) for one fixed (m, t); index = canonical residue.
struct CountTable {
    std::int64_t m = 1;
    std::int64_t t = 0;
    std::vector<ExactCount> values;

    const ExactCount& operator[](std::size_t n) const { return values.at(n); }
    std::size_t size() const { return values.size(); }

    ExactCount total() const {
        ExactCount s = 0;
        for (const auto& v : values) s += v;
        return s;
    }

    friend bool operator==(const CountTable&, const CountTable&) = default;
};

}  // namespace cycpart
