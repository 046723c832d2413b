#pragma once

// Cyclic invariants of the cohomology of the n-torus and Betti numbers of
// the quotient orbifolds. Two independent routes are kept side by side:
// character averaging with an exact integrality check at every division,
// and a brute-force signed count of shift-stable coordinate subsets.

#include "extq/arith.hpp"
#include "extq/quotient.hpp"

#include <vector>

namespace extq {

inline constexpr unsigned kDefaultOracleBound = 16;

// Graded character of the shift gamma^r on the exterior algebra of the
// n-dimensional permutation representation: values[j] is the trace on
// degree j, i.e. the coefficients of (1 - (-1)^d lambda^d)^{n/d} with
// d = n/(n,r).
struct CharacterRow {
    unsigned n;
    unsigned r;
    std::vector<Int> values; // j = 0..n
};

// Dimensions a_0..a_n of the shift-invariant subspaces in the graded
// cohomology of T^n.
struct GradedDims {
    unsigned n;
    std::vector<Int> dims;
};

// Betti numbers b_0..b_{n-1} of the quotient of T^n/T by the shift action.
struct BettiTable {
    unsigned n;
    std::vector<Int> betti;
};

CharacterRow character_row(unsigned n, unsigned r);

/// a_j = (1/n) sum_r character_row(n, r)[j]; every division must be exact.
GradedDims graded_invariants(unsigned n);

/// Same dimensions by the independent route: for each shift r and each
/// j-subset S of coordinates with S + r = S, accumulate the sign of the
/// permutation induced on S. Refuses n beyond the bound.
GradedDims graded_invariants_oracle(unsigned n, unsigned bound = kDefaultOracleBound);

/// b_0 = 1 and b_j = a_j - b_{j-1}; the closure a_n = b_{n-1} and
/// nonnegativity of every entry are asserted.
BettiTable betti_table(unsigned n);

/// Total invariant dimension by the closed form
///   g(n) = (1/n) sum over odd d | n of totient(d) * 2^{n/d},
/// asserted equal to sum a_j and to twice sum b_j.
Int total_dim(unsigned n);

/// g(n)/2, the total cohomology dimension of the ordinary quotient.
Int total_dim_half(unsigned n);

/// Betti-shaped oracle: dimensions of the shift-invariant exterior powers of
/// the quotient of the g-dimensional permutation representation by its
/// diagonal line, computed by exact character sums (polynomial division by
/// 1 + lambda, then averaging). Must match betti_table(g) entrywise.
std::vector<Int> reduced_invariants(unsigned g);

/// Betti numbers of one component: the translation twist acts trivially on
/// cohomology, so these are the Betti numbers of the ordinary quotient in
/// dimension g = (n,k).
std::vector<Int> component_betti(const Component& c);

} // namespace extq
