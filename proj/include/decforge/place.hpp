#pragma once

#include "decforge/gaussian.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace decforge {

enum class BaseField { Q, Qi };

const char* base_name(BaseField b);          // "Q" / "Q(i)"
BaseField parse_base(const std::string& s);  // "Q", "Qi", "Q(i)"

enum class PlaceKind { Finite, Real, Complex };

// A place of the base field.  Finite places are canonicalized: over Q the
// place is the rational prime p; over Q(i) it is the Gaussian prime pi
// normalized so that re > |im| >= 0 (so 2+i and 2-i name the two places
// above 5, 1+i the place above 2, and 3 the inert place above 3).
struct Place {
    BaseField base = BaseField::Q;
    PlaceKind kind = PlaceKind::Finite;
    std::int64_t p = 0; // residue characteristic
    GaussInt pi{0, 0};  // uniformizer, Q(i) only
    int e = 1;          // ramification index over Q
    int f = 1;          // residue degree over Q

    static Place rational(std::int64_t p);
    static Place gaussian(const GaussInt& z); // any prime associate accepted
    static Place real_place();
    static Place complex_place();

    bool finite() const { return kind == PlaceKind::Finite; }
    std::int64_t residue_size() const; // p^f for finite places

    std::string str() const;
    // parse "5", "2+i", "1+i", "real", "complex" in the given base
    static Place parse(BaseField base, const std::string& s);

    bool operator==(const Place&) const = default;
    bool operator<(const Place& o) const;
};

// All places of the base field above the rational prime p, in canonical
// order (for a split prime, the uniformizer with positive imaginary part
// comes first).
std::vector<Place> places_above(BaseField base, std::int64_t p);

// The unique archimedean place (real for Q, complex for Q(i)).
Place archimedean_place(BaseField base);

// Deterministic decomposition p = a^2 + b^2 with a > b > 0, for p = 1 mod 4.
GaussInt two_squares(std::int64_t p);

bool is_prime(std::int64_t n);

} // namespace decforge
