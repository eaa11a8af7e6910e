#include "decforge/henselian.hpp"

#include "decforge/errors.hpp"

#include <algorithm>
#include <set>

namespace decforge {

ValueLattice::ValueLattice(std::vector<GammaCoset> gens)
    : gens_(std::move(gens)) {
    for (const GammaCoset& g : gens_) den_ = lcm_ll(den_, g.order());
    if (den_ == 1) return;
    FinAbGroup ambient({den_, den_});
    std::vector<Elem> elems;
    for (const GammaCoset& g : gens_)
        elems.push_back({g.x.num * (den_ / g.x.den),
                         g.y.num * (den_ / g.y.den)});
    sub_.emplace(ambient, elems);
}

std::vector<std::int64_t> ValueLattice::invariant_factors() const {
    return sub_ ? sub_->invariant_factors() : std::vector<std::int64_t>{};
}

std::vector<GammaCoset> ValueLattice::elements() const {
    if (!sub_) return {GammaCoset{}};
    std::vector<GammaCoset> out;
    for (const Elem& e : sub_->elements())
        out.push_back({QZ(e[0], den_), QZ(e[1], den_)});
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t ValueLattice::order() const { return sub_ ? sub_->order() : 1; }

bool ValueLattice::contains(const GammaCoset& c) const {
    if (!sub_) return c.order() == 1;
    if (den_ % c.order() != 0) return false;
    return sub_->contains(
        {c.x.num * (den_ / c.x.den), c.y.num * (den_ / c.y.den)});
}

namespace {

void check_algebra(const LaurentAlgebra& a) {
    if (a.factors.empty())
        fail(Err::Precondition, "algebra needs at least one factor");
    for (const LaurentSymbol& s : a.factors) {
        if (s.n != 2 && s.n != 4)
            fail(Err::Precondition, "factor degree must be 2 or 4");
        if (s.a.u.base() != BaseField::Qi || s.b.u.base() != BaseField::Qi)
            fail(Err::Precondition, "slot units must lie in Q(i)");
    }
}

FieldElem square_class_rep(const FieldElem& u) {
    FieldElem r = FieldElem::one(BaseField::Qi);
    if (u.unit_pow() % 2 != 0) r = r * FieldElem::from_gauss({0, 1});
    for (const auto& [q, e] : u.factorization())
        if (e % 2 != 0) r = r * FieldElem::from_gauss(q.pi);
    return r;
}

} // namespace

ValueLattice value_group(const LaurentAlgebra& a) {
    check_algebra(a);
    std::vector<GammaCoset> gens;
    for (const LaurentSymbol& s : a.factors) {
        gens.push_back({QZ(s.a.xe, s.n), QZ(s.a.ye, s.n)});
        gens.push_back({QZ(s.b.xe, s.n), QZ(s.b.ye, s.n)});
    }
    return ValueLattice(std::move(gens));
}

std::vector<std::int64_t> quotient_invariants(const ValueLattice& v) {
    return v.invariant_factors();
}

std::vector<FieldElem> residue_squareclasses(const LaurentAlgebra& a) {
    check_algebra(a);
    std::set<FieldElem> reps;
    for (const LaurentSymbol& s : a.factors)
        for (const LaurentMonomial* m : {&s.a, &s.b})
            if (m->xe % 2 == 0 && m->ye % 2 == 0)
                reps.insert(square_class_rep(m->u));
    return {reps.begin(), reps.end()};
}

ObstructionReport single_symbol_obstruction(const BrauerClass& d1,
                                            const KummerExtension& l) {
    FieldElem f5 = FieldElem::from_integer(BaseField::Qi, 5);
    FieldElem f13 = FieldElem::from_integer(BaseField::Qi, 13);
    bool shape = l.base() == BaseField::Qi && l.gens().size() == 2 &&
                 l.gens()[0].n == 2 && l.gens()[1].n == 2;
    if (shape) {
        const FieldElem& a0 = l.gens()[0].a;
        const FieldElem& a1 = l.gens()[1].a;
        shape = (a0 == f5 && a1 == f13) || (a0 == f13 && a1 == f5);
    }
    if (!shape)
        fail(Err::Precondition,
             "obstruction is specific to Q(i)(sqrt 5, sqrt 13)");
    if (d1.base() != BaseField::Qi)
        fail(Err::BaseMismatch, "class lives over the wrong field");

    // a single symbol split by L and with residue field L must present as
    // A(13 x^2, 5 y^2) after value-group normalization
    LaurentAlgebra forced{{{4, {f13, 2, 0}, {f5, 0, 2}}}};

    ObstructionReport rep;
    rep.gamma = value_group(forced);
    rep.gamma_invariants = quotient_invariants(rep.gamma);
    rep.gamma_cosets = rep.gamma.elements();
    rep.value_group_ok =
        rep.gamma_invariants == std::vector<std::int64_t>{2, 2} &&
        rep.gamma_cosets ==
            std::vector<GammaCoset>{{QZ(), QZ()},
                                    {QZ(), QZ(1, 2)},
                                    {QZ(1, 2), QZ()},
                                    {QZ(1, 2), QZ(1, 2)}};
    rep.residues = residue_squareclasses(forced);
    rep.residues_ok =
        rep.residues == std::vector<FieldElem>({f5, f13}) ||
        rep.residues == std::vector<FieldElem>({f13, f5});
    rep.candidate = symbol_to_class({f13, f5, 4});
    rep.obstruction = !is_in_dec(d1 + (-rep.candidate), l);
    return rep;
}

} // namespace decforge
