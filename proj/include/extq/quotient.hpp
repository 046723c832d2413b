#pragma once

// The projective torus E = T^n/T restricted to its finite-order points, the
// cyclic shift action of Z/nZ on it, and the component catalogue of the
// extended quotient E // Z/nZ.
//
// Only rational angles are representable, so every equality test is exact.
// A point is kept in normalized homogeneous coordinates: the first angle is
// pinned to 0, and two raw angle tuples are the same point iff they differ
// by a constant angle on every coordinate.

#include "extq/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace extq {

struct Isotropy {
    unsigned order;     // m = |{k : gamma^k fixes the point}|
    unsigned generator; // the subgroup is generated by gamma^{n/m}
};

class ProjectivePoint {
public:
    /// Subtracts the first angle from every coordinate. Rejects empty input.
    static ProjectivePoint normalize(std::vector<RationalAngle> raw);

    unsigned n() const { return static_cast<unsigned>(angles_.size()); }
    const std::vector<RationalAngle>& angles() const { return angles_; }

    /// Action of gamma^k: the entry in slot i moves to slot i+k (mod n),
    /// then the result is renormalized.
    ProjectivePoint shifted(unsigned k) const;

    /// If gamma^k fixes the point, the raw shift differs from the point by a
    /// constant angle omega; returns that omega (so the point lies in the
    /// fixed set twisted by omega). Empty when the point is not fixed.
    std::optional<RationalAngle> membership(unsigned k) const;

    /// Order and generator of the isotropy subgroup of Z/nZ. The fixing set
    /// is verified to be exactly the subgroup generated by n/order.
    Isotropy isotropy() const;

    /// Lexicographically least point in the Z/nZ-orbit.
    ProjectivePoint canonical() const;

    bool operator==(const ProjectivePoint& o) const = default;
    bool operator<(const ProjectivePoint& o) const; // lexicographic

    std::string str() const; // "0,1/3,2/3"

private:
    explicit ProjectivePoint(std::vector<RationalAngle> a) : angles_(std::move(a)) {}
    std::vector<RationalAngle> angles_;
};

/// The element gamma^k of Z/nZ acting on points with n coordinates.
struct ShiftElement {
    ShiftElement(unsigned n, unsigned k);
    unsigned n;
    unsigned k; // 0 <= k < n

    ShiftElement compose(const ShiftElement& o) const; // gamma^{k + o.k}
    bool operator==(const ShiftElement& o) const = default;
};

/// Applies the group element; rejects a dimension mismatch.
ProjectivePoint act(const ShiftElement& e, const ProjectivePoint& p);

// A pair (point, gamma^k) with gamma^k fixing the point; membership in the
// extended quotient's covering set is checked at construction.
struct ExtQuotPoint {
    ExtQuotPoint(ProjectivePoint point, unsigned k);
    ExtQuotPoint(ProjectivePoint point, ShiftElement element);
    ProjectivePoint point;
    ShiftElement element;

    unsigned k() const { return element.k; }
};

/// Parses a comma-separated list of fractions ("0,1/3,2/3") and normalizes.
/// Malformed fractions are rejected with their 1-based field position.
ProjectivePoint parse_point(std::string_view spec);

/// All normalized points whose angles have denominator dividing M: the set
/// has M^{n-1} elements and is closed under the shift action.
std::vector<ProjectivePoint> rational_lattice(unsigned n, unsigned M);

/// Canonical representative of the orbit under the standard projection
/// (point, gamma^k) -> point.
ProjectivePoint project(const ExtQuotPoint& x);

/// Cardinality of the projection fibre over the orbit of the point; equals
/// the isotropy order.
unsigned fibre_cardinality(const ProjectivePoint& p);

// One connected component of the extended quotient: the quotient of the
// fixed set of gamma^k twisted by omega, where omega^d = 1 for d = n/(n,k).
// Its dimension is g - 1 with g = (n,k); k = n and omega = 0 give the
// ordinary quotient.
struct Component {
    unsigned n;
    unsigned k;          // 1 <= k <= n
    RationalAngle omega; // reduced; order divides d

    unsigned g() const { return static_cast<unsigned>(gcd(n, k)); }
    unsigned d() const { return n / g(); }
    unsigned dim() const { return g() - 1; }
    bool is_point() const { return g() == 1; }

    /// omega written as "j/d" over the component's full root order d.
    std::string omega_label() const;

    bool operator==(const Component& o) const = default;
};

/// All components for a given n, ordered by (k, omega): for each k, one
/// component per d-th root of unity with d = n/(n,k). Rejects n = 0.
std::vector<Component> enumerate_components(unsigned n);

/// n * totient(n), the number of isolated points of the extended quotient.
std::uint64_t isolated_point_count(unsigned n);

// The fixed set of gamma^k twisted by omega, described by its g free
// coordinates (one per residue class mod g) and the closure rule
//   coordinate i  =  omega^{-power[i]} * (free coordinate rep[i]).
struct FixedSetDescriptor {
    unsigned n;
    unsigned k;
    RationalAngle omega;
    std::vector<unsigned> free_indices; // the residues 0..g-1
    std::vector<unsigned> rep;          // rep[i] = i mod g
    std::vector<unsigned> power;        // exponent s with coordinate i = omega^{-s} * free

    /// Instantiates the rule at the given free angles (size g) and
    /// normalizes; the result is fixed by gamma^k with twist omega.
    ProjectivePoint instantiate(const std::vector<RationalAngle>& free_angles) const;

    /// Translation carrying the untwisted fixed set (omega = 0) onto this
    /// one: adds the coordinate offsets of the twisted instance whose free
    /// coordinates are all trivial.
    ProjectivePoint translate_from_untwisted(const ProjectivePoint& p) const;
};

/// Rejects omega whose order does not divide d = n/(n,k).
FixedSetDescriptor fixed_set_descriptor(unsigned n, unsigned k, const RationalAngle& omega);

} // namespace extq
