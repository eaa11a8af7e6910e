#include "decforge/brauer.hpp"

#include "decforge/errors.hpp"

#include <algorithm>

namespace decforge {

BrauerClass BrauerClass::trivial(BaseField base) {
    BrauerClass c;
    c.base_ = base;
    return c;
}

BrauerClass BrauerClass::from_invariants(BaseField base,
                                         const std::map<Place, QZ>& entries) {
    BrauerClass c = trivial(base);
    QZ total;
    for (const auto& [q, v] : entries) {
        if (q.base != base)
            fail(Err::BaseMismatch, "invariant at a place of the wrong field");
        if (v.is_zero()) continue;
        if (q.kind == PlaceKind::Complex)
            fail(Err::ArchimedeanViolation,
                 "complex places carry no Brauer invariant");
        if (q.kind == PlaceKind::Real && v.order() > 2)
            fail(Err::ArchimedeanViolation,
                 "real invariants live in (1/2)Z/Z, got " + v.str());
        c.inv_.emplace(q, v);
        total = total + v;
    }
    if (!total.is_zero())
        fail(Err::SumNotZero, "local invariants sum to " + total.str());
    return c;
}

QZ BrauerClass::invariant(const Place& q) const {
    auto it = inv_.find(q);
    return it == inv_.end() ? QZ() : it->second;
}

std::vector<Place> BrauerClass::support() const {
    std::vector<Place> out;
    out.reserve(inv_.size());
    for (const auto& [q, v] : inv_) out.push_back(q);
    return out;
}

BrauerClass BrauerClass::operator+(const BrauerClass& o) const {
    if (base_ != o.base_)
        fail(Err::BaseMismatch, "cannot add classes over different fields");
    BrauerClass c = *this;
    for (const auto& [q, v] : o.inv_) {
        QZ s = c.invariant(q) + v;
        if (s.is_zero()) c.inv_.erase(q);
        else c.inv_[q] = s;
    }
    return c;
}

BrauerClass BrauerClass::operator-() const {
    BrauerClass c = *this;
    for (auto& [q, v] : c.inv_) v = -v;
    return c;
}

std::int64_t BrauerClass::exponent() const {
    std::int64_t e = 1;
    for (const auto& [q, v] : inv_) e = lcm_ll(e, v.order());
    return e;
}

bool BrauerClass::operator<(const BrauerClass& o) const {
    if (base_ != o.base_) return base_ < o.base_;
    return std::lexicographical_compare(inv_.begin(), inv_.end(),
                                        o.inv_.begin(), o.inv_.end());
}

namespace {

void check_same_base(const BrauerClass& c, const KummerExtension& k) {
    if (c.base() != k.base())
        fail(Err::BaseMismatch, "class and extension over different fields");
}

} // namespace

bool is_split_by(const BrauerClass& c, const KummerExtension& k) {
    check_same_base(c, k);
    for (const auto& [q, v] : c.invariants())
        if (decomposition_group(k, q).order() % v.order() != 0) return false;
    return true;
}

bool is_in_br_t_relative(const BrauerClass& c, const KummerExtension& k,
                         std::int64_t t) {
    check_same_base(c, k);
    if (t == 0) t = k.exponent();
    if (t < 1) fail(Err::Precondition, "relative exponent must be positive");
    for (const auto& [q, v] : c.invariants())
        if (gcd_ll(t, decomposition_group(k, q).order()) % v.order() != 0)
            return false;
    return true;
}

bool is_in_dec(const BrauerClass& c, const KummerExtension& k) {
    check_same_base(c, k);
    for (const auto& [q, v] : c.invariants())
        if (decomposition_group(k, q).exponent() % v.order() != 0)
            return false;
    return true;
}

bool SesQuotientElement::is_zero() const {
    for (const SesComponent& s : components)
        if (!s.coset.is_zero()) return false;
    return true;
}

SesQuotientElement ses_image(const BrauerClass& c, const KummerExtension& k) {
    if (!is_in_br_t_relative(c, k))
        fail(Err::NotInBrT, "class is not in the relative Brauer group");
    SesQuotientElement out;
    for (const LocalData& ld : bad_primes(k)) {
        QZ v = c.invariant(ld.place);
        // v = r / d_q with r = v.num * (d_q / v.den); reduce mod 1/c_q
        std::int64_t r = v.num * (ld.d_q / v.den);
        out.components.push_back(
            {ld.place, ld.c_q, ld.d_q, QZ(r % (ld.d_q / ld.c_q), ld.d_q)});
    }
    return out;
}

std::vector<SesQuotientElement>
ses_quotient_elements(const KummerExtension& k) {
    std::vector<LocalData> bad = bad_primes(k);
    std::vector<std::int64_t> sizes;
    for (const LocalData& ld : bad) sizes.push_back(ld.d_q / ld.c_q);
    std::vector<std::int64_t> idx(bad.size(), 0);
    std::vector<SesQuotientElement> out;
    while (true) {
        SesQuotientElement e;
        for (std::size_t j = 0; j < bad.size(); ++j)
            e.components.push_back(
                {bad[j].place, bad[j].c_q, bad[j].d_q, QZ(idx[j], bad[j].d_q)});
        out.push_back(e);
        std::size_t j = bad.size();
        while (j > 0 && ++idx[j - 1] == sizes[j - 1]) idx[--j] = 0;
        if (j == 0) break;
    }
    return out;
}

BrauerClass ses_preimage(const SesQuotientElement& target,
                         const KummerExtension& k, std::int64_t bound) {
    std::vector<LocalData> bad = bad_primes(k);
    if (target.components.size() != bad.size())
        fail(Err::Precondition, "target does not match the bad places");
    std::map<Place, QZ> entries;
    QZ total;
    for (std::size_t j = 0; j < bad.size(); ++j) {
        const SesComponent& s = target.components[j];
        if (!(s.place == bad[j].place) || s.c_q != bad[j].c_q ||
            s.d_q != bad[j].d_q)
            fail(Err::Precondition, "target component mismatch at " +
                                        s.place.str());
        if (bad[j].d_q % s.coset.den != 0)
            fail(Err::Precondition, "coset order does not divide d_q");
        std::int64_t r = s.coset.num * (bad[j].d_q / s.coset.den);
        r %= bad[j].d_q / bad[j].c_q; // canonical representative
        QZ v(r, bad[j].d_q);
        if (!v.is_zero()) {
            entries[s.place] = v;
            total = total + v;
        }
    }
    if (!total.is_zero()) {
        PrimaryDecomposition pd =
            primary_decomposition_with_complement(k.galois_group());
        std::vector<Elem> chars;
        for (const Subgroup& h : pd.h) chars.push_back(h.canonical_generator());
        Place pstar =
            chebotarev_find_prime(k, chars, k.exponent(), {}, bound);
        entries[pstar] = -total;
    }
    BrauerClass c = BrauerClass::from_invariants(k.base(), entries);
    SesQuotientElement check = ses_image(c, k);
    for (std::size_t j = 0; j < bad.size(); ++j) {
        std::int64_t r = target.components[j].coset.num *
                         (bad[j].d_q / target.components[j].coset.den) %
                         (bad[j].d_q / bad[j].c_q);
        if (!(check.components[j].coset == QZ(r, bad[j].d_q)))
            fail(Err::InternalInconsistency, "preimage does not hit target");
    }
    return c;
}

std::vector<BrauerClass> decompose_into_cyclic(const BrauerClass& c,
                                               const KummerExtension& k,
                                               std::int64_t bound) {
    check_same_base(c, k);
    if (!is_in_dec(c, k))
        fail(Err::NotInDec, "class is not in the decomposable subgroup");
    PrimaryDecomposition pd =
        primary_decomposition_with_complement(k.galois_group());
    std::vector<Elem> chars;
    for (const Subgroup& h : pd.h) chars.push_back(h.canonical_generator());
    std::size_t n = chars.size();

    // local step: hand every invariant to the last character whose cyclic
    // field is locally big enough (the degrees are powers of two with lcm
    // equal to exp(G_q), so one of them always accommodates)
    std::vector<std::map<Place, QZ>> parts(n);
    for (const auto& [q, v] : c.invariants()) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i)
            if (local_degree_cyclic(k, chars[i], q) % v.order() == 0) pick = i;
        if (pick == n)
            fail(Err::InternalInconsistency,
                 "no cyclic factor accommodates the invariant at " + q.str());
        parts[pick][q] = v;
    }

    // global step: close each piece up to sum zero at one common place of
    // full local degree
    std::vector<QZ> sums(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [q, v] : parts[i]) sums[i] = sums[i] + v;
    bool need_balance = false;
    for (const QZ& s : sums) need_balance = need_balance || !s.is_zero();
    if (need_balance) {
        std::vector<Place> sup = c.support();
        std::set<Place> excl(sup.begin(), sup.end());
        Place pstar =
            chebotarev_find_prime(k, chars, k.exponent(), excl, bound);
        for (std::size_t i = 0; i < n; ++i)
            if (!sums[i].is_zero()) parts[i][pstar] = -sums[i];
    }

    std::vector<BrauerClass> out;
    BrauerClass total = BrauerClass::trivial(c.base());
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(BrauerClass::from_invariants(c.base(), parts[i]));
        total = total + out.back();
    }
    if (!(total == c))
        fail(Err::InternalInconsistency, "cyclic pieces do not re-sum");
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [q, v] : out[i].invariants())
            if (local_degree_cyclic(k, chars[i], q) % v.order() != 0)
                fail(Err::InternalInconsistency,
                     "cyclic piece exceeds its local degree");
    return out;
}

namespace {

// discrete log of the tame symbol value in the canonical mu_n
std::int64_t tame_dlog(const FieldElem& a, const FieldElem& b,
                       std::int64_t n, const Place& q) {
    int va = a.valuation(q), vb = b.valuation(q);
    FieldElem u = FieldElem::from_integer(a.base(), -1)
                      .pow(static_cast<std::int64_t>(va) * vb) *
                  a.pow(vb) * b.pow(-va);
    ResidueField f(q);
    ResElem s = f.pow(f.residue_unit(u), (f.size() - 1) / n);
    ResElem zeta = n == 2 ? f.reduce_int(-1) : f.embed_i();
    ResElem z = f.one();
    for (std::int64_t j = 0; j < n; ++j) {
        if (z == s) return j;
        z = f.mul(z, zeta);
    }
    fail(Err::InternalInconsistency,
         "tame symbol fell outside mu_" + std::to_string(n));
}

int mod8_of_unit(const FieldElem& u) {
    int r = u.positive() ? 1 : 7;
    for (const auto& [q, e] : u.factorization()) {
        if (q.p == 2) fail(Err::InternalInconsistency, "unit has even part");
        int p8 = static_cast<int>(q.p % 8);
        if (e % 2 != 0) r = r * p8 % 8;
    }
    return r;
}

// direct quadratic Hilbert symbol at the place 2 of Q
QZ dyadic_hilbert_q(const FieldElem& a, const FieldElem& b) {
    Place two = Place::rational(2);
    std::int64_t al = a.valuation(two), be = b.valuation(two);
    FieldElem u = a * FieldElem::from_integer(BaseField::Q, 2).pow(-al);
    FieldElem w = b * FieldElem::from_integer(BaseField::Q, 2).pow(-be);
    int u8 = mod8_of_unit(u), w8 = mod8_of_unit(w);
    auto eps = [](int x) { return (x % 4 == 3) ? 1 : 0; };
    auto omg = [](int x) { return (x == 3 || x == 5) ? 1 : 0; };
    std::int64_t bit =
        (eps(u8) * eps(w8) + al * omg(w8) + be * omg(u8)) % 2;
    return QZ(bit, 2);
}

} // namespace

BrauerClass symbol_to_class(const SymbolAlgebra& s) {
    if (s.n != 2 && s.n != 4)
        fail(Err::Precondition, "symbol degree must be 2 or 4");
    if (s.a.base() != s.b.base())
        fail(Err::BaseMismatch, "symbol entries over different fields");
    BaseField base = s.a.base();
    if (s.n == 4 && base != BaseField::Qi)
        fail(Err::Precondition, "quartic symbols need i in the base field");

    std::map<Place, QZ> inv;
    std::set<Place> odd_support;
    for (const FieldElem* x : {&s.a, &s.b})
        for (const Place& q : x->support())
            if (q.p != 2) odd_support.insert(q);

    QZ total;
    for (const Place& q : odd_support) {
        QZ v(tame_dlog(s.a, s.b, s.n, q), s.n);
        if (!v.is_zero()) {
            inv[q] = v;
            total = total + v;
        }
    }
    if (base == BaseField::Q && !s.a.positive() && !s.b.positive()) {
        inv[Place::real_place()] = QZ(1, 2);
        total = total + QZ(1, 2);
    }

    QZ wild = -total;
    if (base == BaseField::Q) {
        QZ direct = dyadic_hilbert_q(s.a, s.b);
        if (!(direct == wild))
            fail(Err::InternalInconsistency,
                 "reciprocity fill disagrees with the dyadic formula");
    }
    if (!wild.is_zero())
        inv[base == BaseField::Q ? Place::rational(2)
                                 : Place::gaussian({1, 1})] = wild;
    return BrauerClass::from_invariants(base, inv);
}

BrauerClass extd1_select(const KummerExtension& l) {
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
             "selection is specific to Q(i)(sqrt 5, sqrt 13)");

    std::vector<Place> ps = places_above(BaseField::Qi, 5);
    std::vector<Place> qs = places_above(BaseField::Qi, 13);
    BrauerClass a = BrauerClass::from_invariants(
        BaseField::Qi, {{ps[0], QZ(1, 4)}, {ps[1], QZ(1, 4)},
                        {qs[0], QZ(1, 4)}, {qs[1], QZ(1, 4)}});
    BrauerClass b = BrauerClass::from_invariants(
        BaseField::Qi,
        {{ps[0], QZ(1, 4)}, {ps[1], QZ(1, 4)}, {qs[0], QZ(1, 2)}});

    // both classes have exponent 4, live in Br_4(L/k), avoid Dec, and stay
    // inequivalent mod Dec
    for (const BrauerClass* c : {&a, &b}) {
        if (c->exponent() != 4 || !is_in_br_t_relative(*c, l, 4) ||
            is_in_dec(*c, l))
            fail(Err::InternalInconsistency, "base classes lost their shape");
    }
    if (is_in_dec(a + (-b), l))
        fail(Err::InternalInconsistency, "A and B merged modulo Dec");

    BrauerClass s = symbol_to_class({f13, f5, 4});
    bool a_dec = is_in_dec(a + (-s), l);
    bool b_dec = is_in_dec(b + (-s), l);
    if (a_dec && b_dec)
        fail(Err::InternalInconsistency,
             "both candidates became decomposable after the twist");
    return a_dec ? b : a;
}

} // namespace decforge
