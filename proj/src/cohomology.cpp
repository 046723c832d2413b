#include "extq/cohomology.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace extq {

namespace {

Int exact_div(const Int& value, unsigned n, const char* where) {
    if (value % n != 0)
        throw std::logic_error(std::string(where) + ": character sum not divisible by n");
    return value / n;
}

} // namespace

CharacterRow character_row(unsigned n, unsigned r) {
    if (n == 0)
        throw std::invalid_argument("character_row: n must be positive");
    if (r >= n)
        throw std::invalid_argument("character_row: r out of range");
    const unsigned d = n / static_cast<unsigned>(gcd(n, r)); // gcd(n,0) = n
    const unsigned q = n / d;
    // coefficients of (1 - (-1)^d lambda^d)^q: zero off multiples of d,
    // binomial C(q, i) at j = i*d, alternating in sign when d is even
    std::vector<Int> values(n + 1, 0);
    Int c = 1;
    for (unsigned i = 0; i <= q; ++i) {
        values[i * d] = (d % 2 == 0 && i % 2 == 1) ? -c : c;
        if (i < q) {
            c *= q - i;
            c /= i + 1;
        }
    }
    return CharacterRow{n, r, std::move(values)};
}

GradedDims graded_invariants(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("graded_invariants: n must be positive");
    std::vector<Int> acc(n + 1, 0);
    for (unsigned r = 0; r < n; ++r) {
        CharacterRow row = character_row(n, r);
        for (unsigned j = 0; j <= n; ++j)
            acc[j] += row.values[j];
    }
    std::vector<Int> dims(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        dims[j] = exact_div(acc[j], n, "graded_invariants");
        if (dims[j] < 0)
            throw std::logic_error("graded_invariants: negative dimension");
    }
    return GradedDims{n, std::move(dims)};
}

GradedDims graded_invariants_oracle(unsigned n, unsigned bound) {
    if (n == 0)
        throw std::invalid_argument("graded_invariants_oracle: n must be positive");
    if (n > bound)
        throw BoundExceeded("graded_invariants_oracle: n = " + std::to_string(n) +
                            " exceeds bound " + std::to_string(bound));
    if (n > 30)
        throw BoundExceeded("graded_invariants_oracle: bound capped at 30");

    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::int64_t> acc(n + 1, 0);
    std::vector<unsigned> elems, pos(n), perm;
    for (unsigned r = 0; r < n; ++r) {
        for (std::uint64_t mask = 0; mask <= full; ++mask) {
            std::uint64_t rotated = r == 0 ? mask : ((mask << r) | (mask >> (n - r))) & full;
            if (rotated != mask)
                continue;
            // sign of the permutation that adding r induces on the sorted
            // elements of the subset
            elems.clear();
            for (unsigned i = 0; i < n; ++i)
                if (mask >> i & 1) {
                    pos[i] = static_cast<unsigned>(elems.size());
                    elems.push_back(i);
                }
            perm.assign(elems.size(), 0);
            for (unsigned i = 0; i < elems.size(); ++i)
                perm[i] = pos[(elems[i] + r) % n];
            int sign = 1;
            std::vector<bool> seen(elems.size(), false);
            for (unsigned i = 0; i < elems.size(); ++i) {
                if (seen[i])
                    continue;
                unsigned len = 0;
                for (unsigned j = i; !seen[j]; j = perm[j]) {
                    seen[j] = true;
                    ++len;
                }
                if (len % 2 == 0)
                    sign = -sign;
            }
            acc[static_cast<unsigned>(__builtin_popcountll(mask))] += sign;
        }
    }
    std::vector<Int> dims(n + 1);
    for (unsigned j = 0; j <= n; ++j)
        dims[j] = exact_div(Int(acc[j]), n, "graded_invariants_oracle");
    return GradedDims{n, std::move(dims)};
}

BettiTable betti_table(unsigned n) {
    GradedDims a = graded_invariants(n);
    std::vector<Int> betti(n);
    betti[0] = 1;
    for (unsigned j = 1; j < n; ++j) {
        betti[j] = a.dims[j] - betti[j - 1];
        if (betti[j] < 0)
            throw std::logic_error("betti_table: negative Betti number");
    }
    if (a.dims[n] != betti[n - 1])
        throw std::logic_error("betti_table: recursion does not close (a_n != b_{n-1})");
    return BettiTable{n, std::move(betti)};
}

Int total_dim(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("total_dim: n must be positive");
    Int sum = 0;
    for (std::uint64_t d : odd_divisors(n))
        sum += Int(totient(d)) << (n / d);
    Int g = exact_div(sum, n, "total_dim");

    GradedDims a = graded_invariants(n);
    Int a_total = std::accumulate(a.dims.begin(), a.dims.end(), Int(0));
    if (a_total != g)
        throw std::logic_error("total_dim: closed form disagrees with character averaging");
    BettiTable b = betti_table(n);
    Int b_total = std::accumulate(b.betti.begin(), b.betti.end(), Int(0));
    if (b_total * 2 != g)
        throw std::logic_error("total_dim: Betti total is not half the invariant total");
    return g;
}

Int total_dim_half(unsigned n) {
    return total_dim(n) / 2;
}

std::vector<Int> reduced_invariants(unsigned g) {
    if (g == 0)
        throw std::invalid_argument("reduced_invariants: g must be positive");
    std::vector<Int> acc(g, 0);
    for (unsigned r = 0; r < g; ++r) {
        // graded character on the quotient of the permutation representation
        // by its diagonal line: divide the full row by (1 + lambda)
        CharacterRow row = character_row(g, r);
        std::vector<Int> quot(g);
        quot[0] = row.values[0];
        for (unsigned j = 1; j < g; ++j)
            quot[j] = row.values[j] - quot[j - 1];
        if (row.values[g] != quot[g - 1])
            throw std::logic_error("reduced_invariants: row not divisible by 1 + lambda");
        for (unsigned j = 0; j < g; ++j)
            acc[j] += quot[j];
    }
    std::vector<Int> dims(g);
    for (unsigned j = 0; j < g; ++j)
        dims[j] = exact_div(acc[j], g, "reduced_invariants");
    return dims;
}

std::vector<Int> component_betti(const Component& c) {
    return betti_table(c.g()).betti;
}

} // namespace extq
