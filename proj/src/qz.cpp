#include "decforge/qz.hpp"

#include "decforge/errors.hpp"

#include <numeric>

namespace decforge {

std::int64_t gcd_ll(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t lcm_ll(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

QZ::QZ(std::int64_t n, std::int64_t d) {
    if (d == 0) fail(Err::Precondition, "QZ: zero denominator");
    if (d < 0) {
        d = -d;
        n = -n;
    }
    n %= d;
    if (n < 0) n += d;
    std::int64_t g = gcd_ll(n, d);
    num = n / g;
    den = d / g;
}

QZ QZ::operator+(const QZ& o) const {
    std::int64_t d = lcm_ll(den, o.den);
    return QZ(num * (d / den) + o.num * (d / o.den), d);
}

QZ QZ::operator-() const { return QZ(-num, den); }

QZ QZ::times(std::int64_t k) const {
    // k * (num/den) mod 1; reduce k mod den first to avoid overflow
    std::int64_t kr = k % den;
    if (kr < 0) kr += den;
    return QZ(kr * num, den);
}

bool QZ::operator<(const QZ& o) const {
    // compare num/den < o.num/o.den; denominators stay small here
    return num * o.den < o.num * den;
}

std::string QZ::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

QZ QZ::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return QZ(std::stoll(s), 1);
        std::int64_t n = std::stoll(s.substr(0, slash));
        std::int64_t d = std::stoll(s.substr(slash + 1));
        return QZ(n, d);
    } catch (const std::logic_error&) {
        fail(Err::Precondition, "QZ: cannot parse '" + s + "'");
    }
}

const char* err_name(Err e) {
    switch (e) {
    case Err::Precondition: return "Precondition";
    case Err::BaseMismatch: return "BaseMismatch";
    case Err::GroupTooLarge: return "GroupTooLarge";
    case Err::SumNotZero: return "SumNotZero";
    case Err::ArchimedeanViolation: return "ArchimedeanViolation";
    case Err::NotInBrT: return "NotInBrT";
    case Err::NotInDec: return "NotInDec";
    case Err::SearchExhausted: return "SearchExhausted";
    case Err::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

} // namespace decforge
