#pragma once

#include <cstdint>
#include <string>

namespace decforge {

// Gaussian integer with exact 64-bit components.  All inputs in this
// project are desk-scale, so no big-integer fallback is needed; overflow in
// norm computations is guarded where products are formed.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    GaussInt() = default;
    GaussInt(std::int64_t r, std::int64_t i) : re(r), im(i) {}

    GaussInt operator+(const GaussInt& o) const {
        return {re + o.re, im + o.im};
    }
    GaussInt operator-(const GaussInt& o) const {
        return {re - o.re, im - o.im};
    }
    GaussInt operator*(const GaussInt& o) const;
    GaussInt conj() const { return {re, -im}; }
    std::int64_t norm() const; // re^2 + im^2, overflow-checked

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }
    GaussInt times_i(int k) const; // multiply by i^k

    // exact division; returns false if o does not divide *this
    bool divide_exact(const GaussInt& o, GaussInt& quotient) const;

    bool operator==(const GaussInt&) const = default;
    std::string str() const; // "3+2i", "2-i", "i", "-1", "7"
    static GaussInt parse(const std::string& s);
};

} // namespace decforge
