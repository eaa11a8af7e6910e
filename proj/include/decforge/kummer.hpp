#pragma once

#include "decforge/element.hpp"
#include "decforge/group.hpp"
#include "decforge/local.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace decforge {

struct KummerGen {
    FieldElem a;
    std::int64_t n; // 2 or 4; 4 only over Q(i)
};

// Abelian Kummer extension K = F(a_1^{1/n_1}, ..., a_k^{1/n_k}) of F = Q or
// Q(i), with Gal(K/F) identified with prod Z/n_i through the generators.
// Characters are handled as elements of the (normalized) Galois group; the
// character chi with generator coordinates c_i has order
// n_chi = lcm n_i/gcd(c_i, n_i) and cuts out the cyclic subfield
// F(a_chi^{1/n_chi}) with a_chi = prod a_i^{c_i n_chi / n_i}.
class KummerExtension {
public:
    KummerExtension(BaseField base, std::vector<KummerGen> gens);

    BaseField base() const { return base_; }
    const std::vector<KummerGen>& gens() const { return gens_; }
    const FinAbGroup& galois_group() const { return g_; }
    std::int64_t exponent() const { return g_.exponent(); }

    // coordinates of a character element over the original generators
    std::vector<std::int64_t> char_to_gen_coords(const Elem& chi) const;
    std::int64_t char_order(const Elem& chi) const;
    FieldElem kummer_element(const Elem& chi) const;

    // rational primes that can ramify: 2, divisors of the n_i, and the
    // residue characteristics of the supports of the a_i
    std::set<std::int64_t> ramified_candidates() const;

private:
    BaseField base_;
    std::vector<KummerGen> gens_;
    FinAbGroup g_;
    std::vector<std::size_t> perm_; // group coordinate -> generator index
};

// G_q = Gal(K_q/F_q), computed as the annihilator of the characters whose
// cyclic field splits completely at q.
Subgroup decomposition_group(const KummerExtension& k, const Place& q);

// [L_chi,q : F_q] = n_chi / max{m | n_chi : a_chi in (F_q^*)^m}
std::int64_t local_degree_cyclic(const KummerExtension& k, const Elem& chi,
                                 const Place& q);

struct LocalData {
    Place place;
    Subgroup g_q;
    std::int64_t c_q; // exponent of G_q
    std::int64_t d_q; // gcd(t, |G_q|)
    bool is_bad;      // c_q < d_q
};

LocalData local_data(const KummerExtension& k, const Place& q);

// all bad places, found by scanning the ramified candidates; complete
// because unramified decomposition groups are cyclic
std::vector<LocalData> bad_primes(const KummerExtension& k);

// Least unramified place (by residue characteristic, then canonical order)
// outside `exclude` where every given character has local degree
// target_order.  Wild and possibly-ramified places are skipped.
Place chebotarev_find_prime(const KummerExtension& k,
                            const std::vector<Elem>& characters,
                            std::int64_t target_order,
                            const std::set<Place>& exclude,
                            std::int64_t bound = 1000000);

} // namespace decforge
