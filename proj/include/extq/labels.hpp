#pragma once

// Combinatorial layer over the extended quotient: which cyclic orders occur
// for a given matrix size over a given residue field, the labelling of the
// points of the extended quotient by (orbit, constituent index), and the
// finite-model check that labelling commutes with the standard projection.
// Representations themselves stay opaque; only orders, counts and bijections
// are modelled.

#include "extq/arith.hpp"
#include "extq/quotient.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace extq {

// Residue data of a nonarchimedean local field of characteristic zero:
// residue characteristic p and residue cardinality q = p^e.
struct LocalFieldData {
    LocalFieldData(std::uint64_t p, std::uint64_t q);
    std::uint64_t p;
    std::uint64_t q;
};

// A block decomposition N = m * n of the matrix size.
struct BernsteinPoint {
    BernsteinPoint(std::uint64_t N, std::uint64_t n);
    std::uint64_t N;
    std::uint64_t m;
    std::uint64_t n;
};

/// Divisors n of N whose prime-to-p part divides q - 1: the unit group of
/// the field admits a character of order n exactly for these (the tame
/// quotient is cyclic of order q - 1; wild p-power orders always occur in
/// characteristic zero).
std::vector<std::uint64_t> admissible_n(std::uint64_t N, const LocalFieldData& field);

// Label of one constituent: the canonical orbit representative together
// with the index r of the fixing element as a power of the isotropy
// generator, 0 <= r < isotropy order.
struct ReprLabel {
    ProjectivePoint orbit_rep;
    unsigned r;

    bool operator==(const ReprLabel& o) const = default;
    bool operator<(const ReprLabel& o) const;
};

/// Writes x's element as (gamma^{n/m})^r with m the isotropy order of
/// x.point and returns (canonical orbit representative, r). Constant on
/// orbits of the extended quotient.
ReprLabel mu_label(const ExtQuotPoint& x);

/// Forgets the constituent index.
const ProjectivePoint& inf_ch(const ReprLabel& label);

struct CheckReport {
    unsigned n = 0;
    unsigned M = 0;
    std::uint64_t lattice_size = 0;
    std::uint64_t orbit_count = 0;
    std::uint64_t label_count = 0;
    bool pass = false;
    std::string witness; // empty when pass
};

/// Exhaustive finite-model check over rational_lattice(n, M):
///   (a) inf_ch after mu_label equals the standard projection,
///   (b) mu_label is injective on extended-quotient orbits,
///   (c) the number of labels over each orbit equals the fibre cardinality.
CheckReport check_square(unsigned n, unsigned M);

/// The ell points fixed by the whole group for prime ell: coordinates in
/// arithmetic progression with common difference j/ell, one point per j.
/// Each has isotropy order ell. Rejects non-prime input.
std::vector<ProjectivePoint> elliptic_fixed_points(unsigned ell);

} // namespace extq
