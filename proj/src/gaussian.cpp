#include "decforge/gaussian.hpp"

#include "decforge/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace decforge {

namespace {

std::int64_t checked_i64(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        fail(Err::Precondition, std::string("overflow in ") + what);
    return static_cast<std::int64_t>(v);
}

} // namespace

GaussInt GaussInt::operator*(const GaussInt& o) const {
    __int128 r = static_cast<__int128>(re) * o.re -
                 static_cast<__int128>(im) * o.im;
    __int128 i = static_cast<__int128>(re) * o.im +
                 static_cast<__int128>(im) * o.re;
    return {checked_i64(r, "gaussian product"),
            checked_i64(i, "gaussian product")};
}

std::int64_t GaussInt::norm() const {
    __int128 n = static_cast<__int128>(re) * re +
                 static_cast<__int128>(im) * im;
    return checked_i64(n, "gaussian norm");
}

GaussInt GaussInt::times_i(int k) const {
    GaussInt z = *this;
    int r = ((k % 4) + 4) % 4;
    for (int j = 0; j < r; ++j) z = GaussInt{-z.im, z.re};
    return z;
}

bool GaussInt::divide_exact(const GaussInt& o, GaussInt& quotient) const {
    if (o.is_zero()) fail(Err::Precondition, "division by zero gaussian");
    // this * conj(o) must be divisible by norm(o) componentwise
    GaussInt num = *this * o.conj();
    std::int64_t n = o.norm();
    if (num.re % n != 0 || num.im % n != 0) return false;
    quotient = {num.re / n, num.im / n};
    return true;
}

std::string GaussInt::str() const {
    if (im == 0) return std::to_string(re);
    std::string s;
    if (re != 0) s += std::to_string(re);
    if (im > 0 && re != 0) s += "+";
    if (im == -1)
        s += "-";
    else if (im != 1)
        s += std::to_string(im);
    s += "i";
    return s;
}

GaussInt GaussInt::parse(const std::string& s) {
    // accepted forms: "7", "-3", "i", "-i", "2i", "1+2i", "3-2i", "-1+i"
    const char* p = s.c_str();
    auto read_term = [&](std::int64_t& re, std::int64_t& im) -> bool {
        int sign = 1;
        if (*p == '+') ++p;
        else if (*p == '-') { sign = -1; ++p; }
        if (*p == 'i') {
            ++p;
            im += sign;
            return true;
        }
        if (!std::isdigit(static_cast<unsigned char>(*p))) return false;
        char* end = nullptr;
        std::int64_t v = std::strtoll(p, &end, 10);
        p = end;
        if (*p == 'i') {
            ++p;
            im += sign * v;
        } else {
            re += sign * v;
        }
        return true;
    };
    std::int64_t re = 0, im = 0;
    if (!read_term(re, im))
        fail(Err::Precondition, "cannot parse gaussian integer: " + s);
    if (*p != '\0') {
        if (!read_term(re, im) || *p != '\0')
            fail(Err::Precondition, "cannot parse gaussian integer: " + s);
    }
    return {re, im};
}

} // namespace decforge
