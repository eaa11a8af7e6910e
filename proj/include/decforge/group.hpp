#pragma once

#include "decforge/qz.hpp"
#include "decforge/znlattice.hpp"

#include <cstdint>
#include <vector>

namespace decforge {

using Elem = std::vector<std::int64_t>;

// Finite abelian group in invariant factor form: factors t_1 >= t_2 >= ...
// with t_{i+1} | t_i and every factor > 1.  Any input factor list is
// normalized (e.g. [6,4] becomes [12,2]); elements are integer tuples in the
// normalized coordinates, reduced componentwise.  Orders above 2^20 are
// rejected.
class FinAbGroup {
  public:
    FinAbGroup() = default; // trivial group
    explicit FinAbGroup(const std::vector<std::int64_t>& factors);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::int64_t order() const;
    std::int64_t exponent() const { return factors_.empty() ? 1 : factors_[0]; }

    Elem zero() const { return Elem(factors_.size(), 0); }
    Elem reduce(Elem g) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    std::int64_t element_order(const Elem& g) const;
    std::vector<Elem> elements() const; // all of G, lексicographic

    bool operator==(const FinAbGroup&) const = default;

  private:
    std::vector<std::int64_t> factors_;
};

// Subgroup of a FinAbGroup, stored as the integer lattice M with
// diag(t_i) <= M <= Z^n, in canonical Hermite form; H = M / diag(t_i).
// All queries are exact lattice arithmetic, so equality of subgroups is
// equality of the canonical matrices.
class Subgroup {
  public:
    Subgroup(FinAbGroup parent, const std::vector<Elem>& gens);
    static Subgroup trivial(const FinAbGroup& g);
    static Subgroup full(const FinAbGroup& g);

    const FinAbGroup& parent() const { return parent_; }
    const ZMat& lattice() const { return lat_; } // HNF rows

    std::int64_t order() const;
    std::int64_t exponent() const;
    bool is_cyclic() const { return invariant_factors().size() <= 1; }
    // invariant factors of H itself, normalized descending
    std::vector<std::int64_t> invariant_factors() const;
    bool contains(const Elem& g) const;
    std::vector<Elem> elements() const;
    // reduced nonzero HNF rows; a canonical generating set
    std::vector<Elem> canonical_generators() const;
    // lexicographically least element of maximal order (cyclic H only)
    Elem canonical_generator() const;

    bool operator==(const Subgroup& o) const {
        return parent_ == o.parent_ && lat_ == o.lat_;
    }

  private:
    FinAbGroup parent_;
    ZMat lat_;
};

Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup meet(const Subgroup& a, const Subgroup& b);

// invariant factors of G/H, normalized descending
std::vector<std::int64_t> quotient_invariant_factors(const Subgroup& h);

// Character of G, determined by one value per invariant-factor generator;
// the value at generator i must have order dividing t_i.
struct Character {
    FinAbGroup parent;
    std::vector<QZ> values;

    Character(FinAbGroup g, std::vector<QZ> vals);
    static Character from_tuple(const FinAbGroup& g, const Elem& a);
    Elem tuple() const; // a_i with values a_i / t_i
    QZ eval(const Elem& g) const;
    std::int64_t order() const;
    bool operator==(const Character&) const = default;
};

// Annihilator of H under the perfect pairing G x G^ -> Q/Z fixed by the
// invariant-factor basis (the character dual to generator i sends it to
// 1/t_i).  The result lives in G^, which we identify with G itself through
// that basis, so the returned subgroup has the same parent.
Subgroup perp(const Subgroup& h);

struct PrimaryDecomposition {
    std::vector<Subgroup> h; // cyclic of order exp(G), joint join = G
    Subgroup d;              // complement: H_i join D = G, H_i meet D = 1
};

// For G = Z_t x Z_{t2} x ... x Z_{tn}: H_1 = <e_1>, H_i = <e_1 - e_i>,
// D = <e_2, ..., e_n>.  Requires G nontrivial.
PrimaryDecomposition primary_decomposition_with_complement(const FinAbGroup& g);

struct PerpDecomposition {
    std::vector<Subgroup> k; // G/K_i cyclic of order exp(G), meet of all = 1
    Subgroup d_prime;        // cyclic of order exp(G), K_i meet D' = 1
};

// Dual construction: K_i = perp(H_i), D' = perp(D) computed in G^.
PerpDecomposition perp_decomposition(const FinAbGroup& g);

// lcm of |G/K_i| for subgroups with cyclic quotients and trivial joint meet;
// always equals exp(G), and that identity is re-checked internally.
std::int64_t lcm_of_cyclic_quotients(const FinAbGroup& g,
                                     const std::vector<Subgroup>& ks);

} // namespace decforge
