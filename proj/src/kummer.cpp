#include "decforge/kummer.hpp"

#include "decforge/errors.hpp"

#include <algorithm>
#include <numeric>

namespace decforge {

KummerExtension::KummerExtension(BaseField base, std::vector<KummerGen> gens)
    : base_(base), gens_(std::move(gens)) {
    if (gens_.empty())
        fail(Err::Precondition, "a Kummer extension needs at least one generator");
    std::vector<std::int64_t> factors;
    for (const KummerGen& g : gens_) {
        if (g.n != 2 && g.n != 4)
            fail(Err::Precondition, "generator orders must be 2 or 4");
        if (g.n == 4 && base_ != BaseField::Qi)
            fail(Err::Precondition,
                 "order-4 generators need a 4th root of unity in the base");
        if (g.a.base() != base_)
            fail(Err::BaseMismatch, "generator from the wrong base field");
        factors.push_back(g.n);
    }
    g_ = FinAbGroup(factors);

    // invariant factors of prod Z/n_i with n_i in {2,4} are the n_i sorted
    // descending; record which generator each group coordinate came from
    perm_.resize(gens_.size());
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    std::stable_sort(perm_.begin(), perm_.end(), [&](std::size_t a, std::size_t b) {
        return gens_[a].n > gens_[b].n;
    });
    for (std::size_t j = 0; j < perm_.size(); ++j)
        if (g_.factors()[j] != gens_[perm_[j]].n)
            fail(Err::InternalInconsistency, "generator orders do not normalize");

    // independence: no nontrivial character may have a globally trivial
    // cyclic field, i.e. [K:F] really is prod n_i
    for (const Elem& chi : g_.elements()) {
        if (chi == g_.zero()) continue;
        if (kummer_element(chi).is_nth_power_global(char_order(chi)))
            fail(Err::Precondition,
                 "dependent generators: a nontrivial Kummer element is a "
                 "global power");
    }
}

std::vector<std::int64_t>
KummerExtension::char_to_gen_coords(const Elem& chi) const {
    Elem r = g_.reduce(chi);
    std::vector<std::int64_t> c(gens_.size(), 0);
    for (std::size_t j = 0; j < perm_.size(); ++j) c[perm_[j]] = r[j];
    return c;
}

std::int64_t KummerExtension::char_order(const Elem& chi) const {
    return g_.element_order(chi);
}

FieldElem KummerExtension::kummer_element(const Elem& chi) const {
    std::vector<std::int64_t> c = char_to_gen_coords(chi);
    std::int64_t n = char_order(chi);
    FieldElem a = FieldElem::one(base_);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        std::int64_t e = c[i] * n;
        if (e % gens_[i].n != 0)
            fail(Err::InternalInconsistency, "non-integral Kummer exponent");
        a = a * gens_[i].a.pow(e / gens_[i].n);
    }
    return a;
}

std::set<std::int64_t> KummerExtension::ramified_candidates() const {
    std::set<std::int64_t> ps{2};
    for (const KummerGen& g : gens_)
        for (const Place& q : g.a.support()) ps.insert(q.p);
    return ps;
}

Subgroup decomposition_group(const KummerExtension& k, const Place& q) {
    const FinAbGroup& g = k.galois_group();
    std::vector<Elem> split_chars;
    for (const Elem& chi : g.elements())
        if (is_nth_power_local(k.kummer_element(chi), k.char_order(chi), q))
            split_chars.push_back(chi);
    return perp(Subgroup(g, split_chars));
}

std::int64_t local_degree_cyclic(const KummerExtension& k, const Elem& chi,
                                 const Place& q) {
    std::int64_t n = k.char_order(chi);
    FieldElem a = k.kummer_element(chi);
    for (std::int64_t m = n; m > 1; m /= 2)
        if (is_nth_power_local(a, m, q)) return n / m;
    return n;
}

LocalData local_data(const KummerExtension& k, const Place& q) {
    Subgroup gq = decomposition_group(k, q);
    std::int64_t c = gq.exponent();
    std::int64_t d = gcd_ll(k.exponent(), gq.order());
    return {q, gq, c, d, c < d};
}

std::vector<LocalData> bad_primes(const KummerExtension& k) {
    std::vector<LocalData> out;
    for (std::int64_t p : k.ramified_candidates())
        for (const Place& q : places_above(k.base(), p)) {
            LocalData ld = local_data(k, q);
            if (ld.is_bad) out.push_back(ld);
        }
    return out;
}

Place chebotarev_find_prime(const KummerExtension& k,
                            const std::vector<Elem>& characters,
                            std::int64_t target_order,
                            const std::set<Place>& exclude,
                            std::int64_t bound) {
    if (bound < 2) fail(Err::Precondition, "search bound must be at least 2");
    std::set<std::int64_t> skip = k.ramified_candidates();
    for (std::int64_t p = 3; p <= bound; p += 2) {
        if (!is_prime(p) || skip.count(p)) continue;
        for (const Place& q : places_above(k.base(), p)) {
            if (exclude.count(q)) continue;
            bool ok = true;
            for (const Elem& chi : characters)
                if (local_degree_cyclic(k, chi, q) != target_order) {
                    ok = false;
                    break;
                }
            if (ok) return q;
        }
    }
    fail(Err::SearchExhausted,
         "no qualifying prime below " + std::to_string(bound));
}

} // namespace decforge
