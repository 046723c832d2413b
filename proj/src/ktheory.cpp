#include "extq/ktheory.hpp"

#include <stdexcept>

namespace extq {

std::pair<Int, Int> component_contribution(const Component& c) {
    Int ev = 0, odd = 0;
    std::vector<Int> betti = component_betti(c);
    for (std::size_t j = 0; j < betti.size(); ++j)
        (j % 2 == 0 ? ev : odd) += betti[j];
    return {std::move(ev), std::move(odd)};
}

KRanks ktheory_ranks(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("ktheory_ranks: n must be positive");
    KRanks out{n, 0, 0, {}};
    for (const Component& c : enumerate_components(n)) {
        auto [ev, odd] = component_contribution(c);
        out.k0 += ev;
        out.k1 += odd;
        out.breakdown.push_back(ComponentContribution{c, std::move(ev), std::move(odd)});
    }
    return out;
}

KRanks prime_case_report(unsigned ell) {
    if (!is_prime(ell))
        throw std::invalid_argument("prime_case_report: input is not prime");
    KRanks ranks = ktheory_ranks(ell);

    const std::uint64_t points = isolated_point_count(ell); // ell * (ell - 1)
    std::uint64_t point_components = 0;
    for (const auto& row : ranks.breakdown)
        if (row.component.is_point())
            ++point_components;
    if (ranks.breakdown.size() != points + 1 || point_components != points)
        throw std::logic_error("prime_case_report: catalogue is not quotient + ell(ell-1) points");

    BettiTable b = betti_table(ell);
    bool even_only = true;
    for (unsigned j = 1; j < ell; j += 2)
        if (b.betti[j] != 0)
            even_only = false;
    if (even_only && ranks.k0 != total_dim_half(ell) + points)
        throw std::logic_error("prime_case_report: k0 != g/2 + ell(ell-1)");
    return ranks;
}

} // namespace extq
