#pragma once

#include "decforge/brauer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace decforge {

// Coset in Q^2/Z^2, the value group quotient available over k((x))((y)).
struct GammaCoset {
    QZ x;
    QZ y;

    std::int64_t order() const { return lcm_ll(x.order(), y.order()); }
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
    bool operator==(const GammaCoset&) const = default;
    bool operator<(const GammaCoset& o) const {
        return x == o.x ? y < o.y : x < o.x;
    }
};

// Finite subgroup of Q^2/Z^2 generated by value cosets.  Cleared to a common
// denominator it becomes a subgroup of (Z/D)^2 and all structure questions
// reduce to lattice normal forms.
class ValueLattice {
public:
    ValueLattice() = default; // trivial
    explicit ValueLattice(std::vector<GammaCoset> gens);

    const std::vector<GammaCoset>& generators() const { return gens_; }
    std::vector<std::int64_t> invariant_factors() const;
    std::vector<GammaCoset> elements() const; // sorted
    std::int64_t order() const;
    bool contains(const GammaCoset& c) const;

private:
    std::vector<GammaCoset> gens_;
    std::int64_t den_ = 1;          // common denominator D
    std::optional<Subgroup> sub_;   // subgroup of (Z/D)^2 when D > 1
};

// u * x^xe * y^ye with u a nonzero element of k = Q(i)
struct LaurentMonomial {
    FieldElem u;
    std::int64_t xe = 0;
    std::int64_t ye = 0;
};

// symbol algebra of degree n over k((x))((y)) with monomial slots
struct LaurentSymbol {
    std::int64_t n;
    LaurentMonomial a;
    LaurentMonomial b;
};

struct LaurentAlgebra {
    std::vector<LaurentSymbol> factors;
};

// value group modulo Gamma_F: each slot u x^al y^be of a degree-n factor
// contributes the coset (al/n, be/n)
ValueLattice value_group(const LaurentAlgebra& a);

std::vector<std::int64_t> quotient_invariants(const ValueLattice& v);

// square-class representatives of the slot units whose monomial part is a
// square; these residues generate the residue extension of the semiramified
// part.  Sorted without duplicates.
std::vector<FieldElem> residue_squareclasses(const LaurentAlgebra& a);

struct ObstructionReport {
    ValueLattice gamma;                        // value group of the forced
    std::vector<std::int64_t> gamma_invariants;//   presentation (13x^2, 5y^2)
    std::vector<GammaCoset> gamma_cosets;
    bool value_group_ok = false;               // invariants come out [2,2]
    std::vector<FieldElem> residues;           // square classes {5, 13}
    bool residues_ok = false;
    BrauerClass candidate =
        BrauerClass::trivial(BaseField::Qi);   // class of the quartic symbol
    bool obstruction = false;                  // d1 - candidate is not in Dec
};

// Tests whether d1 can be a single quartic symbol algebra split by
// L = Q(i)(sqrt 5, sqrt 13): any such presentation is forced (by its value
// group and residues) to the shape A(13 x^2, 5 y^2), whose generic-fiber
// class is the quartic symbol (13, 5); d1 is obstructed exactly when the
// difference fails the decomposability test.
ObstructionReport single_symbol_obstruction(const BrauerClass& d1,
                                            const KummerExtension& l);

} // namespace decforge
