#include "extq/labels.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace extq {

LocalFieldData::LocalFieldData(std::uint64_t pp, std::uint64_t qq) : p(pp), q(qq) {
    if (!is_prime(p))
        throw std::invalid_argument("LocalFieldData: p must be prime");
    std::uint64_t t = q;
    while (t > 1 && t % p == 0)
        t /= p;
    if (q < p || t != 1)
        throw std::invalid_argument("LocalFieldData: q must be a positive power of p");
}

BernsteinPoint::BernsteinPoint(std::uint64_t NN, std::uint64_t nn) : N(NN), m(0), n(nn) {
    if (n == 0 || N % n != 0)
        throw std::invalid_argument("BernsteinPoint: n must divide N");
    m = N / n;
}

std::vector<std::uint64_t> admissible_n(std::uint64_t N, const LocalFieldData& field) {
    if (N == 0)
        throw std::invalid_argument("admissible_n: N must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t n : divisors(N)) {
        std::uint64_t tame = n; // prime-to-p part
        while (tame % field.p == 0)
            tame /= field.p;
        if ((field.q - 1) % tame == 0)
            out.push_back(n);
    }
    return out;
}

bool ReprLabel::operator<(const ReprLabel& o) const {
    if (orbit_rep < o.orbit_rep)
        return true;
    if (o.orbit_rep < orbit_rep)
        return false;
    return r < o.r;
}

ReprLabel mu_label(const ExtQuotPoint& x) {
    Isotropy iso = x.point.isotropy();
    // the element lies in the subgroup generated by gamma^{n/m}; write it
    // as a power
    if (x.k() % iso.generator != 0)
        throw std::logic_error("mu_label: element outside the isotropy subgroup");
    return ReprLabel{x.point.canonical(), x.k() / iso.generator};
}

const ProjectivePoint& inf_ch(const ReprLabel& label) {
    return label.orbit_rep;
}

CheckReport check_square(unsigned n, unsigned M) {
    CheckReport report;
    report.n = n;
    report.M = M;
    std::vector<ProjectivePoint> lattice = rational_lattice(n, M);
    report.lattice_size = lattice.size();

    std::set<ProjectivePoint> orbit_reps;
    // orbit of an extended-quotient point keeps its group element, so the
    // orbit key is (canonical representative, k)
    std::map<std::pair<ProjectivePoint, unsigned>, ReprLabel> ext_orbits;
    std::set<ReprLabel> labels;

    auto fail = [&](std::string why) {
        report.pass = false;
        report.witness = std::move(why);
        return report;
    };

    for (const ProjectivePoint& p : lattice) {
        ProjectivePoint rep = p.canonical();
        orbit_reps.insert(rep);
        for (unsigned k = 0; k < n; ++k) {
            if (!p.membership(k).has_value())
                continue;
            ExtQuotPoint x(p, k);
            ReprLabel label = mu_label(x);
            if (!(inf_ch(label) == project(x)))
                return fail("projection mismatch at point " + p.str() + ", k = " +
                            std::to_string(k));
            if (!(label.orbit_rep == rep))
                return fail("label not constant on the orbit of " + p.str());
            auto [it, inserted] = ext_orbits.emplace(std::make_pair(rep, k), label);
            if (!inserted && !(it->second == label))
                return fail("label differs across the orbit of " + p.str() + ", k = " +
                            std::to_string(k));
        }
    }

    for (const auto& [key, label] : ext_orbits) {
        auto [it, inserted] = labels.insert(label);
        if (!inserted)
            return fail("mu_label not injective at orbit " + key.first.str());
    }
    report.orbit_count = orbit_reps.size();
    report.label_count = labels.size();

    // fibre cardinality over each orbit equals the isotropy order
    for (const ProjectivePoint& rep : orbit_reps) {
        std::uint64_t fibre = 0;
        for (const auto& [key, label] : ext_orbits)
            if (key.first == rep)
                ++fibre;
        if (fibre != fibre_cardinality(rep))
            return fail("fibre over " + rep.str() + " has " + std::to_string(fibre) +
                        " labels, isotropy order is " + std::to_string(fibre_cardinality(rep)));
    }

    report.pass = true;
    return report;
}

std::vector<ProjectivePoint> elliptic_fixed_points(unsigned ell) {
    if (!is_prime(ell))
        throw std::invalid_argument("elliptic_fixed_points: input is not prime");
    std::vector<ProjectivePoint> out;
    for (unsigned t = 0; t < ell; ++t) {
        std::vector<RationalAngle> raw(ell);
        for (unsigned j = 0; j < ell; ++j)
            raw[j] = RationalAngle(static_cast<std::uint64_t>(j) * t, ell);
        out.push_back(ProjectivePoint::normalize(std::move(raw)));
    }
    return out;
}

} // namespace extq
