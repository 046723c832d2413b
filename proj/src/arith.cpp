#include "extq/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace extq {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b);
}

std::uint64_t totient(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("totient: n must be positive");
    std::uint64_t result = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0)
            continue;
        result -= result / p;
        while (m % p == 0)
            m /= p;
    }
    if (m > 1)
        result -= result / m;
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 1; i * i <= n; ++i) {
        if (n % i != 0)
            continue;
        out.push_back(i);
        if (i != n / i)
            out.push_back(n / i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> odd_divisors(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("odd_divisors: n must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t d : divisors(n))
        if (d % 2 == 1)
            out.push_back(d);
    return out;
}

Int binomial(std::uint64_t n, std::uint64_t j) {
    if (j > n)
        return 0;
    j = std::min(j, n - j);
    Int result = 1;
    for (std::uint64_t i = 1; i <= j; ++i) {
        result *= n - j + i;
        result /= i; // exact: result is C(n-j+i, i) at this point
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

RationalAngle::RationalAngle(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ <= 0)
        throw std::invalid_argument("RationalAngle: denominator must be positive");
    num_ %= den_;
    if (num_ < 0)
        num_ += den_;
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0)
        den_ = 1;
}

RationalAngle RationalAngle::parse(std::string_view text) {
    auto parse_int = [](std::string_view s, const char* what) -> Int {
        if (s.empty())
            throw std::invalid_argument(std::string("RationalAngle: empty ") + what);
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            throw std::invalid_argument(std::string("RationalAngle: malformed ") + what);
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument(std::string("RationalAngle: malformed ") + what);
        return Int(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return RationalAngle(parse_int(text, "numerator"), 1);
    Int num = parse_int(text.substr(0, slash), "numerator");
    Int den = parse_int(text.substr(slash + 1), "denominator");
    if (den == 0)
        throw std::invalid_argument("RationalAngle: zero denominator");
    if (den < 0) { // sign lives on the numerator
        den = -den;
        num = -num;
    }
    return RationalAngle(std::move(num), std::move(den));
}

RationalAngle RationalAngle::operator+(const RationalAngle& o) const {
    return RationalAngle(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalAngle RationalAngle::operator-() const {
    return RationalAngle(-num_, den_);
}

RationalAngle RationalAngle::operator-(const RationalAngle& o) const {
    return *this + (-o);
}

RationalAngle RationalAngle::scaled(const Int& m) const {
    return RationalAngle(num_ * m, den_);
}

bool RationalAngle::operator<(const RationalAngle& o) const {
    return num_ * o.den_ < o.num_ * den_;
}

std::string RationalAngle::str() const {
    return num_.str() + "/" + den_.str();
}

} // namespace extq
