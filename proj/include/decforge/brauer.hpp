#pragma once

#include "decforge/kummer.hpp"
#include "decforge/qz.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace decforge {

// Element of Br(F) for F = Q or Q(i): the finite vector of local invariants
// with sum zero in Q/Z.  Only nonzero entries are stored; real entries are
// restricted to {0, 1/2} and complex places carry nothing.  Exponent equals
// index here, so all index reasoning happens on entry orders.
class BrauerClass {
public:
    static BrauerClass trivial(BaseField base);
    static BrauerClass from_invariants(BaseField base,
                                       const std::map<Place, QZ>& entries);

    BaseField base() const { return base_; }
    const std::map<Place, QZ>& invariants() const { return inv_; }
    QZ invariant(const Place& q) const; // zero when absent
    std::vector<Place> support() const;

    BrauerClass operator+(const BrauerClass& o) const;
    BrauerClass operator-() const;
    std::int64_t exponent() const;
    bool is_trivial() const { return inv_.empty(); }

    bool operator==(const BrauerClass&) const = default;
    bool operator<(const BrauerClass& o) const; // for deterministic sets

private:
    BrauerClass() = default;
    BaseField base_ = BaseField::Q;
    std::map<Place, QZ> inv_;
};

// order(inv_q) | [K_q : F_q] at every support place
bool is_split_by(const BrauerClass& c, const KummerExtension& k);

// order(inv_q) | gcd(t, |G_q|) at every support place; t defaults to the
// exponent of the Galois group (pass another t for Br_n relative groups)
bool is_in_br_t_relative(const BrauerClass& c, const KummerExtension& k,
                         std::int64_t t = 0);

// order(inv_q) | exp(G_q) at every support place
bool is_in_dec(const BrauerClass& c, const KummerExtension& k);

// Component of the quotient Br_t(K/F)/Dec(K/F) at one bad place: the coset
// of inv_q inside (1/d_q)Z/Z modulo (1/c_q)Z/Z, stored as its unique
// representative r/d_q with 0 <= r < d_q/c_q.
struct SesComponent {
    Place place;
    std::int64_t c_q = 1;
    std::int64_t d_q = 1;
    QZ coset;
    bool operator==(const SesComponent&) const = default;
};

struct SesQuotientElement {
    std::vector<SesComponent> components; // bad places in canonical order
    bool is_zero() const;
    bool operator==(const SesQuotientElement&) const = default;
};

SesQuotientElement ses_image(const BrauerClass& c, const KummerExtension& k);

// the whole finite quotient group, in lexicographic order
std::vector<SesQuotientElement> ses_quotient_elements(const KummerExtension& k);

// Explicit preimage: the prescribed coset representatives at the bad places
// and one balancing invariant at a Chebotarev place of full local degree.
BrauerClass ses_preimage(const SesQuotientElement& target,
                         const KummerExtension& k,
                         std::int64_t bound = 1000000);

// Split c into classes A_i with A_i split by the cyclic subfield of the
// i-th annihilator character; the A_i sum to c exactly.
std::vector<BrauerClass> decompose_into_cyclic(const BrauerClass& c,
                                               const KummerExtension& k,
                                               std::int64_t bound = 1000000);

struct SymbolAlgebra {
    FieldElem a;
    FieldElem b;
    std::int64_t n; // 2, or 4 over Q(i)
};

// Hasse invariants of the symbol algebra: tame entries from the residue of
// (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)}, the real entry from signs, and the
// wild entry by reciprocity (cross-checked against the direct dyadic
// formula over Q).
BrauerClass symbol_to_class(const SymbolAlgebra& s);

// For L = Q(i)(sqrt 5, sqrt 13): of the two order-4 classes supported on
// the places above 5 and 13, return the one that stays outside Dec(L/k)
// even after twisting by the quartic symbol class of (13, 5).
BrauerClass extd1_select(const KummerExtension& l);

} // namespace decforge
