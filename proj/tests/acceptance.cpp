// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Pass --cli <path> to also drive the command line tool where a
// criterion concerns its output.

#include "extq/cohomology.hpp"
#include "extq/ktheory.hpp"
#include "extq/labels.hpp"
#include "extq/quotient.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace extq;

namespace {

int failures = 0;
std::string cli_path;

void criterion(int number, const std::string& name, const std::function<std::string()>& run) {
    auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
        problem = run();
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (problem.empty()) {
        std::cout << "PASS  criterion " << number << ": " << name << " (" << ms << " ms)\n";
    } else {
        std::cout << "FAIL  criterion " << number << ": " << name << " -- " << problem << "\n";
        ++failures;
    }
}

std::string run_cli(const std::string& args) {
    std::string cmd = cli_path + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {};
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
        out.append(buf, got);
    pclose(pipe);
    return out;
}

const std::vector<long long> kSequence = {1,   1,   2,   2,    4,    6,    10,   16,   30,
                                          52,  94,  172, 316,  586,  1096, 2048, 3856, 7286};

std::string check_sequence() {
    for (unsigned n = 1; n <= 18; ++n)
        if (total_dim_half(n) != kSequence[n - 1])
            return "wrong term at n = " + std::to_string(n);
    if (!cli_path.empty()) {
        std::string expected = "n,g_half\n";
        for (unsigned n = 1; n <= 18; ++n)
            expected += std::to_string(n) + "," + std::to_string(kSequence[n - 1]) + "\n";
        std::string got = run_cli("sequence --limit 18 --format csv");
        if (got != expected)
            return "CLI csv output differs from the expected 18 terms";
    }
    return {};
}

std::string check_formula_vs_oracle() {
    for (unsigned n = 1; n <= 16; ++n)
        if (graded_invariants(n).dims != graded_invariants_oracle(n, 16).dims)
            return "mismatch at n = " + std::to_string(n);
    return {};
}

std::string check_recursion_identities() {
    for (unsigned n = 1; n <= 24; ++n) {
        GradedDims a = graded_invariants(n);
        BettiTable b = betti_table(n); // throws unless a_n = b_{n-1} and all b_j >= 0
        if (a.dims[n] != b.betti[n - 1])
            return "recursion does not close at n = " + std::to_string(n);
        Int b_total = std::accumulate(b.betti.begin(), b.betti.end(), Int(0));
        for (const Int& v : b.betti)
            if (v < 0)
                return "negative Betti number at n = " + std::to_string(n);
        if (2 * b_total != total_dim(n))
            return "sum b != g/2 at n = " + std::to_string(n);
        Int even = 0, odd = 0, alt = 0;
        for (unsigned j = 0; j <= n; ++j) {
            ((j % 2 == 0) ? even : odd) += a.dims[j];
            alt += (j % 2 == 0) ? a.dims[j] : -a.dims[j];
        }
        if (even != b_total || odd != b_total)
            return "even/odd split fails at n = " + std::to_string(n);
        if (alt != 0)
            return "alternating sum nonzero at n = " + std::to_string(n);
    }
    return {};
}

std::string check_census() {
    for (unsigned ell : {2u, 3u, 5u, 7u, 11u}) {
        auto comps = enumerate_components(ell);
        std::size_t points = 0;
        for (const Component& c : comps)
            if (c.dim() == 0)
                ++points;
        std::size_t expected = static_cast<std::size_t>(ell) * (ell - 1);
        if (comps.size() != expected + 1 || points != expected)
            return "prime census wrong at ell = " + std::to_string(ell);
    }
    for (unsigned n = 1; n <= 24; ++n) {
        std::size_t points = 0;
        for (const Component& c : enumerate_components(n))
            if (c.dim() == 0)
                ++points;
        if (points != isolated_point_count(n))
            return "isolated point count wrong at n = " + std::to_string(n);
    }
    return {};
}

std::string check_component_cohomology() {
    for (unsigned n = 1; n <= 10; ++n)
        for (const Component& c : enumerate_components(n))
            if (component_betti(c) != reduced_invariants(c.g()))
                return "component (" + std::to_string(n) + "," + std::to_string(c.k) + "," +
                       c.omega_label() + ") disagrees with the reduced-invariants oracle";
    return {};
}

std::string check_ktheory_values() {
    const std::vector<std::pair<unsigned, std::pair<long long, long long>>> expected = {
        {1, {1, 0}}, {2, {3, 0}}, {3, {8, 0}}, {4, {12, 0}}, {6, {26, 2}}};
    for (const auto& [n, ranks] : expected) {
        KRanks r = ktheory_ranks(n);
        if (r.k0 != ranks.first || r.k1 != ranks.second)
            return "ktheory_ranks(" + std::to_string(n) + ") off";
        // independent route: sum the oracle Betti tables over the catalogue
        Int ev = 0, odd = 0;
        for (const Component& c : enumerate_components(n)) {
            std::vector<Int> betti = reduced_invariants(c.g());
            for (std::size_t j = 0; j < betti.size(); ++j)
                ((j % 2 == 0) ? ev : odd) += betti[j];
        }
        if (ev != ranks.first || odd != ranks.second)
            return "oracle census sum disagrees at n = " + std::to_string(n);
    }
    return {};
}

std::string check_commuting_square() {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned M = 1; M <= 6; ++M) {
            CheckReport r = check_square(n, M);
            if (!r.pass)
                return "n = " + std::to_string(n) + ", M = " + std::to_string(M) + ": " +
                       r.witness;
        }
    return {};
}

std::string check_prime_fixed_points() {
    for (unsigned ell : {2u, 3u, 5u}) {
        auto points = elliptic_fixed_points(ell);
        if (points.size() != ell)
            return "wrong count at ell = " + std::to_string(ell);
        for (const ProjectivePoint& p : points) {
            if (p.isotropy().order != ell)
                return "isotropy order off at ell = " + std::to_string(ell) + ", point " +
                       p.str();
            if (fibre_cardinality(p) != ell)
                return "fibre cardinality off at ell = " + std::to_string(ell);
        }
    }
    return {};
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli")
            cli_path = argv[i + 1];

    criterion(1, "sequence of total quotient cohomology dimensions, 18 terms", check_sequence);
    criterion(2, "invariant formula equals brute-force subset count, n <= 16",
              check_formula_vs_oracle);
    criterion(3, "factorization recursion closes with all identities, n <= 24", check_recursion_identities);
    criterion(4, "component census: prime shape and isolated point counts", check_census);
    criterion(5, "component Betti tables match the reduced-invariants oracle, n <= 10",
              check_component_cohomology);
    criterion(6, "K-theory ranks at n = 1,2,3,4,6 by two independent routes",
              check_ktheory_values);
    criterion(7, "projection/labelling square closes on lattices, n <= 4, M <= 6",
              check_commuting_square);
    criterion(8, "prime fixed points: count, isotropy and fibres", check_prime_fixed_points);

    if (failures == 0)
        std::cout << "acceptance: all 8 criteria pass\n";
    else
        std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return failures;
}
