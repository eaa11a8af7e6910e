#include "decforge/place.hpp"

#include "decforge/errors.hpp"

#include <algorithm>
#include <tuple>

namespace decforge {

const char* base_name(BaseField b) {
    return b == BaseField::Q ? "Q" : "Q(i)";
}

BaseField parse_base(const std::string& s) {
    if (s == "Q") return BaseField::Q;
    if (s == "Qi" || s == "Q(i)") return BaseField::Qi;
    fail(Err::Precondition, "unknown base field: " + s);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

GaussInt two_squares(std::int64_t p) {
    if (p % 4 != 1 || !is_prime(p))
        fail(Err::Precondition,
             "two_squares needs a prime = 1 mod 4, got " +
                 std::to_string(p));
    std::int64_t a = 0;
    while (a * a <= p) ++a;
    for (--a; 2 * a * a >= p; --a) {
        std::int64_t bb = p - a * a;
        std::int64_t b = 0;
        while (b * b < bb) ++b;
        if (b * b == bb) return {a, b};
    }
    fail(Err::InternalInconsistency,
         "no two-square decomposition found for " + std::to_string(p));
}

Place Place::rational(std::int64_t p) {
    if (!is_prime(p))
        fail(Err::Precondition, std::to_string(p) + " is not prime");
    Place v;
    v.base = BaseField::Q;
    v.kind = PlaceKind::Finite;
    v.p = p;
    return v;
}

Place Place::gaussian(const GaussInt& z) {
    std::int64_t n = z.norm();
    Place v;
    v.base = BaseField::Qi;
    v.kind = PlaceKind::Finite;
    if (n == 2) {
        v.p = 2;
        v.pi = {1, 1};
        v.e = 2;
        v.f = 1;
        return v;
    }
    if (is_prime(n)) { // split prime, norm = p = 1 mod 4
        v.p = n;
        v.e = 1;
        v.f = 1;
        // normalize the associate to re > |im| >= 0, preserving the ideal
        GaussInt w = z;
        for (int k = 0; k < 4; ++k, w = w.times_i(1))
            if (w.re > std::abs(w.im)) {
                v.pi = w;
                return v;
            }
        fail(Err::InternalInconsistency, "no canonical associate of " + z.str());
    }
    // inert: must be an associate of a rational prime p = 3 mod 4
    std::int64_t p = 0;
    if (z.im == 0) p = std::abs(z.re);
    else if (z.re == 0) p = std::abs(z.im);
    if (p == 0 || !is_prime(p) || p % 4 != 3)
        fail(Err::Precondition, z.str() + " is not a gaussian prime");
    v.p = p;
    v.pi = {p, 0};
    v.e = 1;
    v.f = 2;
    return v;
}

Place Place::real_place() {
    Place v;
    v.base = BaseField::Q;
    v.kind = PlaceKind::Real;
    return v;
}

Place Place::complex_place() {
    Place v;
    v.base = BaseField::Qi;
    v.kind = PlaceKind::Complex;
    return v;
}

std::int64_t Place::residue_size() const {
    if (!finite()) fail(Err::Precondition, "archimedean place has no residue field");
    return f == 1 ? p : p * p;
}

std::string Place::str() const {
    if (kind == PlaceKind::Real) return "real";
    if (kind == PlaceKind::Complex) return "complex";
    return base == BaseField::Q ? std::to_string(p) : pi.str();
}

Place Place::parse(BaseField base, const std::string& s) {
    if (s == "real" || s == "complex" || s == "inf" || s == "oo")
        return archimedean_place(base);
    if (base == BaseField::Q) {
        std::size_t pos = 0;
        std::int64_t p = std::stoll(s, &pos);
        if (pos != s.size())
            fail(Err::Precondition, "cannot parse place: " + s);
        return rational(p);
    }
    return gaussian(GaussInt::parse(s));
}

bool Place::operator<(const Place& o) const {
    auto key = [](const Place& v) {
        return std::make_tuple(static_cast<int>(v.kind), v.p, v.pi.re,
                               -v.pi.im);
    };
    return key(*this) < key(o);
}

std::vector<Place> places_above(BaseField base, std::int64_t p) {
    if (!is_prime(p))
        fail(Err::Precondition, std::to_string(p) + " is not prime");
    if (base == BaseField::Q) return {Place::rational(p)};
    if (p == 2) return {Place::gaussian({1, 1})};
    if (p % 4 == 3) return {Place::gaussian({p, 0})};
    GaussInt ab = two_squares(p);
    return {Place::gaussian({ab.re, ab.im}), Place::gaussian({ab.re, -ab.im})};
}

Place archimedean_place(BaseField base) {
    return base == BaseField::Q ? Place::real_place() : Place::complex_place();
}

} // namespace decforge
