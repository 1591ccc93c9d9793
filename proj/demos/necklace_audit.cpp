// Prints Q_{m,t}(0) beside the necklace counts for each t, then the totals.
#include <cycpart/cycpart.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    const std::int64_t m = argc > 1 ? std::atoll(argv[1]) : 8;
    if (m < 1) {
        std::cerr << "usage: necklace_audit [m >= 1]\n";
        return 1;
    }
    std::cout << "t\tpartitions_of_0\tnecklaces\n";
    for (std::int64_t t = 0; t <= m; ++t) {
        cycpart::ExactCount necklaces = 0;
        for (auto u : cycpart::divisors(m)) necklaces += cycpart::count_with_frequency(m, t, u);
        std::cout << t << '\t' << cycpart::q_mod(m, t, 0) << '\t' << necklaces << '\n';
    }
    const auto audit = cycpart::identity_audit(m);
    std::cout << "\ntotals: " << audit.partition_total << " partitions, " << audit.necklace_total << " necklaces\n";
    for (const auto& e : audit.excluded) {
        std::cout << "  excluded: t=" << e.t << " frequency=" << e.frequency << " count=" << e.count << '\n';
    }
    std::cout << (audit.balanced() ? "balanced\n" : "NOT balanced\n");
    return audit.balanced() ? 0 : 2;
}
