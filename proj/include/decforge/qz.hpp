#pragma once

#include <cstdint>
#include <string>

namespace decforge {

// Element of Q/Z as a reduced fraction num/den with 0 <= num < den.
// The zero element is 0/1.  The order of num/den in Q/Z equals den.
struct QZ {
    std::int64_t num = 0;
    std::int64_t den = 1;

    QZ() = default;
    QZ(std::int64_t n, std::int64_t d); // reduces mod 1

    bool is_zero() const { return num == 0; }
    std::int64_t order() const { return den; }

    QZ operator+(const QZ& o) const;
    QZ operator-() const;
    QZ operator-(const QZ& o) const { return *this + (-o); }
    QZ times(std::int64_t k) const;
    bool operator==(const QZ&) const = default;
    bool operator<(const QZ& o) const; // by value in [0,1)

    std::string str() const; // "num/den", zero prints "0/1"
    static QZ parse(const std::string& s);
};

std::int64_t gcd_ll(std::int64_t a, std::int64_t b);
std::int64_t lcm_ll(std::int64_t a, std::int64_t b);

} // namespace decforge
