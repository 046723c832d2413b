#include "extq/quotient.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace extq {

ProjectivePoint ProjectivePoint::normalize(std::vector<RationalAngle> raw) {
    if (raw.empty())
        throw std::invalid_argument("ProjectivePoint: empty coordinate list");
    RationalAngle first = raw.front();
    if (!first.is_zero())
        for (auto& a : raw)
            a = a - first;
    return ProjectivePoint(std::move(raw));
}

ProjectivePoint ProjectivePoint::shifted(unsigned k) const {
    const unsigned size = n();
    k %= size;
    std::vector<RationalAngle> raw(size);
    for (unsigned j = 0; j < size; ++j)
        raw[j] = angles_[(j + size - k) % size];
    return normalize(std::move(raw));
}

std::optional<RationalAngle> ProjectivePoint::membership(unsigned k) const {
    const unsigned size = n();
    k %= size;
    // raw shift entry j is angles_[j-k]; the point is fixed iff the raw
    // shift exceeds the point by one constant angle, which is then the
    // twist omega with  gamma^k . p = omega . p.
    RationalAngle omega = angles_[(size - k) % size]; // raw[0] - angles_[0]
    for (unsigned j = 1; j < size; ++j)
        if (angles_[(j + size - k) % size] - angles_[j] != omega)
            return std::nullopt;
    return omega;
}

Isotropy ProjectivePoint::isotropy() const {
    const unsigned size = n();
    std::vector<unsigned> fixing;
    for (unsigned k = 0; k < size; ++k)
        if (membership(k).has_value())
            fixing.push_back(k);
    const unsigned m = static_cast<unsigned>(fixing.size());
    if (m == 0 || size % m != 0)
        throw std::logic_error("isotropy: fixing set is not a subgroup");
    const unsigned step = size / m;
    for (unsigned i = 0; i < m; ++i)
        if (fixing[i] != i * step)
            throw std::logic_error("isotropy: fixing set is not generated by n/m");
    return Isotropy{m, step};
}

ProjectivePoint ProjectivePoint::canonical() const {
    ProjectivePoint best = *this;
    for (unsigned k = 1; k < n(); ++k) {
        ProjectivePoint cand = shifted(k);
        if (cand < best)
            best = cand;
    }
    return best;
}

bool ProjectivePoint::operator<(const ProjectivePoint& o) const {
    return std::lexicographical_compare(angles_.begin(), angles_.end(),
                                        o.angles_.begin(), o.angles_.end());
}

std::string ProjectivePoint::str() const {
    std::string out;
    for (unsigned j = 0; j < n(); ++j) {
        if (j > 0)
            out += ',';
        out += angles_[j].is_zero() ? "0" : angles_[j].str();
    }
    return out;
}

ShiftElement::ShiftElement(unsigned nn, unsigned kk) : n(nn), k(kk % nn) {
    if (nn == 0)
        throw std::invalid_argument("ShiftElement: n must be positive");
}

ShiftElement ShiftElement::compose(const ShiftElement& o) const {
    if (n != o.n)
        throw std::invalid_argument("ShiftElement: group mismatch");
    return ShiftElement(n, (k + o.k) % n);
}

ProjectivePoint act(const ShiftElement& e, const ProjectivePoint& p) {
    if (e.n != p.n())
        throw std::invalid_argument("act: dimension mismatch");
    return p.shifted(e.k);
}

ExtQuotPoint::ExtQuotPoint(ProjectivePoint p, unsigned kk)
    : point(std::move(p)), element(point.n(), kk) {
    if (!point.membership(element.k).has_value())
        throw std::invalid_argument("ExtQuotPoint: element does not fix the point");
}

ExtQuotPoint::ExtQuotPoint(ProjectivePoint p, ShiftElement e)
    : point(std::move(p)), element(e) {
    if (element.n != point.n())
        throw std::invalid_argument("ExtQuotPoint: dimension mismatch");
    if (!point.membership(element.k).has_value())
        throw std::invalid_argument("ExtQuotPoint: element does not fix the point");
}

ProjectivePoint parse_point(std::string_view spec) {
    std::vector<RationalAngle> raw;
    std::size_t field = 1;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = spec.find(',', start);
        std::string_view piece = spec.substr(start, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - start);
        try {
            raw.push_back(RationalAngle::parse(piece));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed fraction at field " + std::to_string(field) +
                                        ": '" + std::string(piece) + "'");
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
        ++field;
    }
    return ProjectivePoint::normalize(std::move(raw));
}

std::vector<ProjectivePoint> rational_lattice(unsigned n, unsigned M) {
    if (n == 0 || M == 0)
        throw std::invalid_argument("rational_lattice: n and M must be positive");
    double count = 1;
    for (unsigned i = 1; i < n; ++i)
        count *= M;
    if (count > 8e6)
        throw BoundExceeded("rational_lattice: M^(n-1) too large to enumerate");

    std::vector<ProjectivePoint> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<unsigned> digits(n, 0); // digits[0] stays 0: first angle pinned
    while (true) {
        std::vector<RationalAngle> raw(n);
        for (unsigned j = 1; j < n; ++j)
            raw[j] = RationalAngle(digits[j], M);
        out.push_back(ProjectivePoint::normalize(std::move(raw)));
        unsigned j = n - 1;
        for (;;) {
            if (j == 0)
                return out;
            if (++digits[j] < M)
                break;
            digits[j] = 0;
            --j;
        }
    }
}

ProjectivePoint project(const ExtQuotPoint& x) {
    return x.point.canonical();
}

unsigned fibre_cardinality(const ProjectivePoint& p) {
    return p.isotropy().order;
}

std::string Component::omega_label() const {
    Int j = omega.num() * (Int(d()) / omega.den());
    return j.str() + "/" + std::to_string(d());
}

std::vector<Component> enumerate_components(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("enumerate_components: n must be positive");
    std::vector<Component> out;
    for (unsigned k = 1; k <= n; ++k) {
        const unsigned d = n / static_cast<unsigned>(gcd(n, k));
        for (unsigned j = 0; j < d; ++j)
            out.push_back(Component{n, k, RationalAngle(j, d)});
    }
    return out;
}

std::uint64_t isolated_point_count(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("isolated_point_count: n must be positive");
    return static_cast<std::uint64_t>(n) * totient(n);
}

ProjectivePoint FixedSetDescriptor::instantiate(const std::vector<RationalAngle>& free_angles) const {
    const unsigned g = static_cast<unsigned>(free_indices.size());
    if (free_angles.size() != g)
        throw std::invalid_argument("FixedSetDescriptor: expected one angle per free coordinate");
    std::vector<RationalAngle> raw(n);
    for (unsigned i = 0; i < n; ++i)
        raw[i] = free_angles[rep[i]] - omega.scaled(power[i]);
    return ProjectivePoint::normalize(std::move(raw));
}

ProjectivePoint FixedSetDescriptor::translate_from_untwisted(const ProjectivePoint& p) const {
    if (p.n() != n)
        throw std::invalid_argument("FixedSetDescriptor: dimension mismatch");
    std::vector<RationalAngle> raw(n);
    for (unsigned i = 0; i < n; ++i)
        raw[i] = p.angles()[i] - omega.scaled(power[i]);
    return ProjectivePoint::normalize(std::move(raw));
}

FixedSetDescriptor fixed_set_descriptor(unsigned n, unsigned k, const RationalAngle& omega) {
    if (n == 0 || k == 0 || k > n)
        throw std::invalid_argument("fixed_set_descriptor: need 1 <= k <= n");
    const unsigned g = static_cast<unsigned>(gcd(n, k));
    const unsigned d = n / g;
    if (Int(d) % omega.order() != 0)
        throw std::invalid_argument("fixed_set_descriptor: omega order does not divide " +
                                    std::to_string(d));
    FixedSetDescriptor desc{n, k, omega, {}, {}, {}};
    desc.rep.resize(n);
    desc.power.resize(n);
    for (unsigned i = 0; i < g; ++i) {
        desc.free_indices.push_back(i);
        // walk the +k orbit of residue class i; step t reaches the
        // coordinate forced to omega^{-t} times the free one
        unsigned j = i;
        unsigned t = 0;
        do {
            desc.rep[j] = i;
            desc.power[j] = t;
            j = (j + k) % n;
            ++t;
        } while (j != i);
    }
    return desc;
}

} // namespace extq
