#pragma once

// Rational K-theory ranks of the crossed product attached to the shift
// action: K_0 collects the even cohomology of every component of the
// extended quotient, K_1 the odd. The identification of K-theory with
// component cohomology is an input correspondence, not derived here, and
// only ranks are computed; torsion is out of scope.

#include "extq/cohomology.hpp"
#include "extq/quotient.hpp"

#include <utility>
#include <vector>

namespace extq {

struct ComponentContribution {
    Component component;
    Int h_ev;
    Int h_odd;
};

struct KRanks {
    unsigned n;
    Int k0;
    Int k1;
    std::vector<ComponentContribution> breakdown; // covers enumerate_components(n)
};

/// Even/odd sums of the component's Betti numbers.
std::pair<Int, Int> component_contribution(const Component& c);

/// Aggregates component contributions over the full catalogue.
KRanks ktheory_ranks(unsigned n);

/// For prime n the catalogue is one ordinary quotient plus n(n-1) points;
/// the shape and the resulting rank identities are asserted.
KRanks prime_case_report(unsigned ell);

} // namespace extq
