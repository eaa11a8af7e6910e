#pragma once

#include "decforge/place.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace decforge {

// Nonzero element of the base field, kept in fully factored form: a unit
// power i^k (over Q this means just the sign, k in {0,2}) times a product
// of canonical primes with integer exponents.  Keeping elements factored
// makes valuations, n-th power tests and symbol manipulations exact with
// no coefficient growth.
class FieldElem {
public:
    static FieldElem one(BaseField base);
    static FieldElem from_integer(BaseField base, std::int64_t n);
    static FieldElem from_rational(BaseField base, std::int64_t num,
                                   std::int64_t den);
    static FieldElem from_gauss(const GaussInt& z); // base Q(i)
    // "14", "-3/5", "2+i", "(1+2i)/3", "i"
    static FieldElem parse(BaseField base, const std::string& s);

    BaseField base() const { return base_; }
    int unit_pow() const { return unit_; } // exponent of i, reduced mod 4
    const std::map<Place, int>& factorization() const { return fac_; }
    std::vector<Place> support() const;

    FieldElem operator*(const FieldElem& o) const;
    FieldElem inverse() const;
    FieldElem pow(std::int64_t k) const;

    int valuation(const Place& q) const;
    bool is_one() const { return unit_ == 0 && fac_.empty(); }
    bool positive() const; // base Q only: sign of the element

    // exact n-th power test in the base field, n in {1, 2, 4};
    // n = 4 is only meaningful over Q(i)
    bool is_nth_power_global(std::int64_t n) const;

    std::string str() const;

    bool operator==(const FieldElem&) const = default;
    bool operator<(const FieldElem& o) const;

private:
    FieldElem() = default;
    void push(const Place& q, int e);

    BaseField base_ = BaseField::Q;
    int unit_ = 0;
    std::map<Place, int> fac_; // canonical finite places -> nonzero exponent
};

} // namespace decforge
