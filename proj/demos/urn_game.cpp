// Draw t labels from {0..m-1} without replacement and bet on the sum mod m.
// Compares the exact law with a simulation.
#include <cycpart/cycpart.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <random>
#include <vector>

int main(int argc, char** argv) {
    const std::int64_t m = argc > 1 ? std::atoll(argv[1]) : 6;
    const std::int64_t t = argc > 2 ? std::atoll(argv[2]) : 2;
    const int trials = argc > 3 ? std::atoi(argv[3]) : 100000;
    if (m < 1 || t < 0 || t > m || trials < 1) {
        std::cerr << "usage: urn_game [m] [t] [trials]\n";
        return 1;
    }
    const auto urn = cycpart::urn_distribution(m, t);
    const auto best = cycpart::maximizers(m, t);

    std::mt19937_64 rng(42);
    std::vector<std::int64_t> labels(static_cast<std::size_t>(m));
    std::iota(labels.begin(), labels.end(), 0);
    std::vector<int> hits(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < trials; ++i) {
        std::shuffle(labels.begin(), labels.end(), rng);
        const auto sum = std::accumulate(labels.begin(), labels.begin() + t, std::int64_t{0});
        ++hits[static_cast<std::size_t>(sum % m)];
    }

    std::cout << "n\texact\tsimulated\n";
    for (std::int64_t n = 0; n < m; ++n) {
        std::cout << n << '\t' << urn.probability(n) << '\t'
                  << static_cast<double>(hits[static_cast<std::size_t>(n)]) / trials << '\n';
    }
    std::cout << "best bets (case " << best.case_id << "):";
    for (auto n : best.maximizing_residues) std::cout << ' ' << n;
    std::cout << '\n';
    return 0;
}
