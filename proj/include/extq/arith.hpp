#pragma once

// Exact integer and Q/Z arithmetic. Everything here is pure and total on its
// documented domain; value-level quantities use arbitrary-precision integers
// so nothing can silently overflow.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace extq {

using Int = boost::multiprecision::cpp_int;

/// Thrown when an exhaustive path is asked to exceed its configured bound;
/// callers refuse rather than silently truncate.
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// gcd with the convention gcd(0, b) = b.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Euler totient. Rejects n = 0.
std::uint64_t totient(std::uint64_t n);

/// Ascending list of all divisors of n. Rejects n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Ascending list of the odd divisors of n. Rejects n = 0.
std::vector<std::uint64_t> odd_divisors(std::uint64_t n);

/// Binomial coefficient C(n, j); 0 when j > n.
Int binomial(std::uint64_t n, std::uint64_t j);

bool is_prime(std::uint64_t n);

// An element of Q/Z stored as a reduced fraction num/den with
// 0 <= num < den, representing the root of unity e^{2*pi*i*num/den}.
// The order of the element equals den; the zero angle is 0/1.
class RationalAngle {
public:
    RationalAngle() : num_(0), den_(1) {}
    RationalAngle(Int num, Int den);

    /// Parses "a/b" or a bare integer "a" (which reduces to 0 mod 1).
    static RationalAngle parse(std::string_view text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    const Int& order() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    RationalAngle operator+(const RationalAngle& o) const;
    RationalAngle operator-() const;
    RationalAngle operator-(const RationalAngle& o) const;
    /// Integer multiple m * angle, reduced mod 1. m may be negative.
    RationalAngle scaled(const Int& m) const;

    bool operator==(const RationalAngle& o) const = default;
    bool operator<(const RationalAngle& o) const;

    std::string str() const; // "num/den"

private:
    Int num_;
    Int den_;
};

} // namespace extq
