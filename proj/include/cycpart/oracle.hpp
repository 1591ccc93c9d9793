#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "core.hpp"
#include "numtheory.hpp"

// Brute-force ground truth. Nothing here uses the closed forms.
namespace cycpart::oracle {

inline constexpr std::int64_t kHardOracleLimit = 30;
inline constexpr std::int64_t kNecklaceLimit = 24;

/// Largest m accepted by enumerate_subset_sums. CYCPART_MAX_ORACLE_M may lower
/// or restore it, but never beyond kHardOracleLimit.
inline std::int64_t subset_sum_limit() {
    if (const char* env = std::getenv("CYCPART_MAX_ORACLE_M")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) {
            return std::min<std::int64_t>(v, kHardOracleLimit);
        }
    }
    return kHardOracleLimit;
}

struct SubsetSumTally {
    std::int64_t m = 1;
    std::int64_t t = 0;
    CountTable table;
};

/// Tallies every t-subset of {0, ..., m-1} by its sum mod m.
inline SubsetSumTally enumerate_subset_sums(std::int64_t m, std::int64_t t) {
    if (m < 1 || m > subset_sum_limit()) {
        throw std::domain_error("subset-sum oracle requires 1 <= m <= " +
                                std::to_string(subset_sum_limit()) + ", got " + std::to_string(m));
    }
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(m), 0);
    if (t == 0) {
        tally[0] = 1;
    } else if (t > 0 && t <= m) {
        // Lexicographic combinations with a running sum.
        std::vector<std::int64_t> pick(static_cast<std::size_t>(t));
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i < t; ++i) {
            pick[i] = i;
            sum += i;
        }
        while (true) {
            ++tally[static_cast<std::size_t>(sum % m)];
            std::int64_t i = t - 1;
            while (i >= 0 && pick[i] == m - t + i) --i;
            if (i < 0) break;
            ++pick[i];
            ++sum;
            for (std::int64_t j = i + 1; j < t; ++j) {
                sum += pick[j - 1] + 1 - pick[j];
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    SubsetSumTally out{m, t, CountTable{m, t, {}}};
    out.table.values.reserve(tally.size());
    for (auto c : tally) out.table.values.emplace_back(c);
    return out;
}

/// Binary necklace in lexicographically least rotation; '1' is a black bead.
struct NecklaceWord {
    std::string beads;
    std::int64_t frequency = 1;

    std::int64_t length() const { return static_cast<std::int64_t>(beads.size()); }
    std::int64_t black_count() const { return std::count(beads.begin(), beads.end(), '1'); }
    std::int64_t minimal_period() const { return length() / frequency; }

    friend bool operator==(const NecklaceWord&, const NecklaceWord&) = default;
};

namespace detail {

// Bit (m-1-i) holds bead i, so integer order equals lexicographic order.
inline std::uint32_t rotate_left(std::uint32_t word, std::int64_t k, std::int64_t m) {
    const std::uint32_t mask = (m == 32) ? ~0u : ((1u << m) - 1u);
    if (k % m == 0) return word;
    return ((word << k) | (word >> (m - k))) & mask;
}

inline bool is_least_rotation(std::uint32_t word, std::int64_t m) {
    for (std::int64_t k = 1; k < m; ++k) {
        if (rotate_left(word, k, m) < word) return false;
    }
    return true;
}

inline std::string to_beads(std::uint32_t word, std::int64_t m) {
    std::string s(static_cast<std::size_t>(m), '0');
    for (std::int64_t i = 0; i < m; ++i) {
        if ((word >> (m - 1 - i)) & 1u) s[i] = '1';
    }
    return s;
}

inline std::uint32_t from_beads(const std::string& beads) {
    std::uint32_t w = 0;
    for (char c : beads) w = (w << 1) | (c == '1' ? 1u : 0u);
    return w;
}

}  // namespace detail

/// Smallest p | m with the word invariant under rotation by p.
inline std::int64_t minimal_period(const std::string& beads) {
    const auto m = static_cast<std::int64_t>(beads.size());
    if (m == 0) throw std::domain_error("empty word");
    for (std::int64_t p : divisors(m)) {
        bool same = true;
        for (std::int64_t i = 0; i < m && same; ++i) same = beads[i] == beads[(i + p) % m];
        if (same) return p;
    }
    return m;
}

inline std::string canonical_rotation(const std::string& beads) {
    std::string best = beads;
    for (std::size_t k = 1; k < beads.size(); ++k) {
        std::string r = beads.substr(k) + beads.substr(0, k);
        if (r < best) best = std::move(r);
    }
    return best;
}

/// One canonical representative per rotation class with exactly t black beads,
/// in ascending lexicographic order.
inline std::vector<NecklaceWord> enumerate_necklaces(std::int64_t m, std::int64_t t) {
    if (m < 1 || m > kNecklaceLimit) {
        throw std::domain_error("necklace oracle requires 1 <= m <= " +
                                std::to_string(kNecklaceLimit));
    }
    if (t < 0 || t > m) throw std::domain_error("necklace oracle requires 0 <= t <= m");

    std::vector<NecklaceWord> out;
    const std::uint32_t limit = 1u << m;
    for (std::uint32_t w = 0; w < limit; ++w) {
        if (std::popcount(w) != t) continue;
        if (!detail::is_least_rotation(w, m)) continue;
        std::string beads = detail::to_beads(w, m);
        const std::int64_t p = minimal_period(beads);
        out.push_back(NecklaceWord{std::move(beads), m / p});
    }
    return out;
}

/// Number of partitions of n into t distinct parts, each in 1..m.
/// Memoized recursion on m; zero whenever m, t or n is negative.
class DistinctPartitionCounter {
public:
    ExactCount operator()(std::int64_t m, std::int64_t t, std::int64_t n) {
        if (m < 0 || t < 0 || n < 0) return 0;
        if (m == 0) return (t == 0 && n == 0) ? 1 : 0;
        const auto key = std::make_tuple(m, t, n);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        ExactCount v = (*this)(m - 1, t - 1, n - t) + (*this)(m - 1, t, n - t);
        memo_.emplace(key, v);
        return v;
    }

private:
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, ExactCount> memo_;
};

inline ExactCount q_recursive(std::int64_t m, std::int64_t t, std::int64_t n) {
    thread_local DistinctPartitionCounter counter;
    return counter(m, t, n);
}

}  // namespace cycpart::oracle
