#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "core.hpp"
#include "numtheory.hpp"
#include "partitions.hpp"

namespace cycpart {

namespace detail {

inline void require_bead_counts(std::int64_t m, std::int64_t t, const char* what) {
    require_positive(m, what);
    if (t < 0 || t > m) {
        throw std::domain_error(std::string(what) + " requires 0 <= t <= m, got m=" +
                                std::to_string(m) + " t=" + std::to_string(t));
    }
}

}  // namespace detail

/// Number of aperiodic necklaces (frequency 1) with t black beads out of m.
inline ExactCount count_aperiodic(std::int64_t m, std::int64_t t) {
    detail::require_bead_counts(m, t, "count_aperiodic");
    SignedExact sum = 0;
    for (std::int64_t d : divisors(gcd(m, t))) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        ExactCount b = binomial(m / d, t / d);
        if (mu < 0) sum -= b;
        else sum += b;
    }
    return exact_quotient(sum, m, "count_aperiodic");
}

/// Necklaces with t black beads out of m whose frequency is exactly u.
inline ExactCount count_with_frequency(std::int64_t m, std::int64_t t, std::int64_t u) {
    detail::require_bead_counts(m, t, "count_with_frequency");
    if (u < 1 || gcd(m, t) % u != 0) return 0;
    return count_aperiodic(m / u, t / u);
}

/// |N_{m,t,<n>}|: necklaces whose frequency divides n, via Ramanujan sums.
inline ExactCount count_freq_dividing(std::int64_t m, std::int64_t t, std::int64_t n) {
    detail::require_bead_counts(m, t, "count_freq_dividing");
    detail::require_positive(n, "count_freq_dividing");
    SignedExact sum = 0;
    for (std::int64_t d : divisors(gcd(m, t))) sum += binomial(m / d, t / d) * ramanujan_sum(d, n);
    return exact_quotient(sum, m, "count_freq_dividing");
}

/// A set of admissible necklace frequencies.
class FreqSelector {
public:
    struct DivisorsOf {
        std::int64_t n;
    };
    struct ExplicitSet {
        std::set<std::int64_t> members;
    };
    struct Scaled {
        std::int64_t factor;
        std::shared_ptr<const FreqSelector> inner;
    };

    /// ⟨n⟩: every divisor of n.
    static FreqSelector divisors_of(std::int64_t n) {
        detail::require_positive(n, "FreqSelector::divisors_of");
        return FreqSelector(DivisorsOf{n});
    }

    static FreqSelector explicit_set(std::set<std::int64_t> members) {
        return FreqSelector(ExplicitSet{std::move(members)});
    }

    /// factor·S: each member of the inner selector multiplied by factor.
    static FreqSelector scaled(std::int64_t factor, FreqSelector inner) {
        detail::require_positive(factor, "FreqSelector::scaled");
        return FreqSelector(Scaled{factor, std::make_shared<const FreqSelector>(std::move(inner))});
    }

    bool contains(std::int64_t u) const {
        if (u < 1) return false;
        return std::visit(
            [u](const auto& sel) -> bool {
                using T = std::decay_t<decltype(sel)>;
                if constexpr (std::is_same_v<T, DivisorsOf>) {
                    return sel.n % u == 0;
                } else if constexpr (std::is_same_v<T, ExplicitSet>) {
                    return sel.members.contains(u);
                } else {
                    return u % sel.factor == 0 && sel.inner->contains(u / sel.factor);
                }
            },
            mode_);
    }

    /// Set-builder rendering, e.g. "<4>" or "2*<3>".
    std::string describe() const {
        return std::visit(
            [](const auto& sel) -> std::string {
                using T = std::decay_t<decltype(sel)>;
                if constexpr (std::is_same_v<T, DivisorsOf>) {
                    return "<" + std::to_string(sel.n) + ">";
                } else if constexpr (std::is_same_v<T, ExplicitSet>) {
                    std::string s = "{";
                    for (auto it = sel.members.begin(); it != sel.members.end(); ++it) {
                        if (it != sel.members.begin()) s += ",";
                        s += std::to_string(*it);
                    }
                    return s + "}";
                } else {
                    return std::to_string(sel.factor) + "*" + sel.inner->describe();
                }
            },
            mode_);
    }

    /// Divisor-of-n parameter when this is a ⟨n⟩ selector, else 0.
    std::int64_t divisor_bound() const {
        if (const auto* d = std::get_if<DivisorsOf>(&mode_)) return d->n;
        return 0;
    }

private:
    using Mode = std::variant<DivisorsOf, ExplicitSet, Scaled>;
    explicit FreqSelector(Mode mode) : mode_(std::move(mode)) {}
    Mode mode_;
};

/// |N_{m,t,U}|. Only frequencies dividing (m, t) can occur, so the sum runs
/// over those.
inline ExactCount count_selected(std::int64_t m, std::int64_t t, const FreqSelector& selector) {
    detail::require_bead_counts(m, t, "count_selected");
    ExactCount sum = 0;
    for (std::int64_t u : divisors(gcd(m, t))) {
        if (selector.contains(u)) sum += count_aperiodic(m / u, t / u);
    }
    return sum;
}

class theorem_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Theorem3Case {
    int case_id = 1;
    FreqSelector selector = FreqSelector::divisors_of(1);
    ExactCount count = 0;
};

/// Chooses which frequency-filtered necklace family is equinumerous with the
/// partitions of n mod m into t distinct parts, and counts it. Throws
/// theorem_violation if that count differs from q_mod.
inline Theorem3Case theorem3_dispatch(std::int64_t m, std::int64_t t, std::int64_t n) {
    detail::require_bead_counts(m, t, "theorem3_dispatch");
    const std::int64_t r = canonical_residue(n, m);
    const Valuation vt = v2(t);
    const bool signed_case = !vt.is_infinite() && v2(m) >= vt && vt >= Valuation(1);

    Theorem3Case out;
    if (!signed_case) {
        out.case_id = 1;
        // ⟨0⟩ is read as ⟨(m,t)⟩: no other frequency can occur.
        out.selector = FreqSelector::divisors_of(r == 0 ? gcd(m, t) : r);
    } else {
        const Valuation vn = v2(r);
        const Valuation below(vt.value() - 1);
        if (vn < below) {
            out.case_id = 2;
            out.selector = FreqSelector::divisors_of(r);
        } else if (vn == below) {
            out.case_id = 3;
            out.selector = FreqSelector::divisors_of(2 * r);
        } else {
            out.case_id = 4;
            out.selector = FreqSelector::divisors_of(gcd(t, r) / 2);
        }
    }
    out.count = count_selected(m, t, out.selector);

    const ExactCount expected = q_mod(m, t, r);
    if (out.count != expected) {
        throw theorem_violation("necklace count " + out.count.str() + " for " +
                                out.selector.describe() + " differs from Q_{" + std::to_string(m) +
                                "," + std::to_string(t) + "}(" + std::to_string(r) +
                                ") = " + expected.str());
    }
    return out;
}

struct ExcludedNecklaces {
    std::int64_t t = 0;
    std::int64_t frequency = 1;
    ExactCount count = 0;
};

struct IdentityAudit {
    std::int64_t m = 1;
    ExactCount partition_total = 0;
    ExactCount necklace_total = 0;
    std::vector<ExcludedNecklaces> excluded;

    ExactCount excluded_total() const {
        ExactCount s = 0;
        for (const auto& e : excluded) s += e.count;
        return s;
    }

    bool balanced() const { return partition_total == necklace_total - excluded_total(); }
};

/// Compares the partitions of 0 mod m (all part counts) with all m-bead
/// necklaces, listing the necklaces that must be dropped for the two to agree:
/// for each t with v2(m) ≥ v2(t) ≥ 1, those whose frequency u has v2(u) = v2(t).
inline IdentityAudit identity_audit(std::int64_t m) {
    detail::require_positive(m, "identity_audit");
    IdentityAudit out;
    out.m = m;
    const Valuation vm = v2(m);
    for (std::int64_t t = 0; t <= m; ++t) {
        out.partition_total += q_mod(m, t, 0);
        const Valuation vt = v2(t);
        const bool signed_case = !vt.is_infinite() && vm >= vt && vt >= Valuation(1);
        for (std::int64_t u : divisors(gcd(m, t))) {
            const ExactCount c = count_aperiodic(m / u, t / u);
            out.necklace_total += c;
            if (signed_case && v2(u) == vt && c > 0) out.excluded.push_back({t, u, c});
        }
    }
    return out;
}

}  // namespace cycpart
