#pragma once

#include "decforge/element.hpp"

#include <cstdint>

namespace decforge {

// Element of the residue field F_p (c1 = 0 unless the place is inert, in
// which case the field is F_p(i) = F_{p^2} with i^2 = -1).
struct ResElem {
    std::int64_t c0 = 0;
    std::int64_t c1 = 0;
    bool operator==(const ResElem&) const = default;
};

// Residue-field arithmetic at an odd finite place.  For a split place
// pi = A+Bi the residue map sends i to r = -A/B mod p; for an inert place
// it keeps i as the generator of F_{p^2}.
class ResidueField {
public:
    explicit ResidueField(const Place& q);

    std::int64_t size() const { return qsize_; }
    ResElem one() const { return {1, 0}; }
    bool is_one(const ResElem& x) const { return x.c0 == 1 && x.c1 == 0; }

    ResElem mul(const ResElem& a, const ResElem& b) const;
    ResElem inv(const ResElem& a) const;
    ResElem pow(ResElem a, std::int64_t k) const; // negative k allowed

    ResElem embed_i() const; // image of i; Q(i) places only
    ResElem reduce_int(std::int64_t n) const;
    ResElem reduce_gauss(const GaussInt& z) const;

    // image of a in F_q^*; requires v_q(a) = 0
    ResElem residue_unit(const FieldElem& a) const;

private:
    Place q_;
    std::int64_t p_ = 0;
    std::int64_t qsize_ = 0;
    std::int64_t r_ = 0; // sqrt(-1) mod p chosen by the split uniformizer
};

// Exact local n-th power test at a place q of the base field of a.
// n in {1, 2, 4}; n = 4 only over Q(i).  Tame places use the residue-field
// criterion; the wild places (p = 2) an exhaustive root search in the
// truncated local ring at precision m = 2*e*v_2(n) + 1.
bool is_nth_power_local(const FieldElem& a, std::int64_t n, const Place& q);

// modular helpers shared with the symbol code
std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m);
std::int64_t mod_inv(std::int64_t a, std::int64_t m);

// (1+i)-adic valuation of an exact nonzero Gaussian integer; for zero
// returns `cap`
int dyadic_valuation(GaussInt z, int cap);

} // namespace decforge
