#include "decforge/verify.hpp"

#include "decforge/errors.hpp"
#include "decforge/henselian.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>

namespace decforge {

namespace {

// accumulates named expectations; remembers the first failure
struct Checker {
    bool ok = true;
    std::string first_fail;
    int count = 0;

    void expect(bool cond, const std::string& what) {
        ++count;
        if (!cond && ok) {
            ok = false;
            first_fail = what;
        }
    }
};

CheckResult finish(const std::string& name, const Checker& c,
                   const std::string& summary) {
    if (c.ok)
        return {name, true, summary + " (" + std::to_string(c.count) +
                                " assertions)"};
    return {name, false, c.first_fail};
}

CheckResult guarded(const std::string& name,
                    CheckResult (*body)()) {
    try {
        return body();
    } catch (const DomainError& e) {
        return {name, false, std::string(err_name(e.kind())) + ": " + e.what()};
    } catch (const std::exception& e) { return {name, false, e.what()}; }
}

FieldElem gq(std::int64_t n) { return FieldElem::from_integer(BaseField::Q, n); }
FieldElem gqi(std::int64_t n) {
    return FieldElem::from_integer(BaseField::Qi, n);
}

// --- criterion 1: the bad-place example ---------------------------------

CheckResult check_bad_place_example() {
    Checker c;
    KummerExtension k(BaseField::Qi, {{gqi(5), 2}, {gqi(14), 4}});
    c.expect(k.galois_group().factors() == std::vector<std::int64_t>{4, 2},
             "G is Z4 x Z2");
    c.expect(k.galois_group().order() == 8, "|G| = 8");
    c.expect(k.exponent() == 4, "t = 4");

    std::vector<LocalData> bad = bad_primes(k);
    std::vector<Place> p5 = places_above(BaseField::Qi, 5);
    c.expect(bad.size() == 2, "exactly two bad places");
    for (std::size_t i = 0; i < bad.size() && i < 2; ++i) {
        c.expect(bad[i].place == p5[i], "bad places lie above 5");
        c.expect(bad[i].g_q.invariant_factors() ==
                     std::vector<std::int64_t>{2, 2},
                 "G_q is Z2 x Z2");
        c.expect(bad[i].c_q == 2 && bad[i].d_q == 4, "c_q = 2 < 4 = d_q");
    }
    return finish("bad places of the quartic example", c,
                  "both places above 5, G_q = Z2 x Z2, c = 2, d = 4");
}

// --- criterion 2: the biquadratic factor classes -------------------------

CheckResult check_factor_classes() {
    Checker c;
    KummerExtension l(BaseField::Qi, {{gqi(5), 2}, {gqi(13), 2}});
    std::vector<Place> p5 = places_above(BaseField::Qi, 5);
    std::vector<Place> p13 = places_above(BaseField::Qi, 13);
    for (const Place& q : {p5[0], p5[1], p13[0], p13[1]})
        c.expect(decomposition_group(l, q).order() == 4,
                 "local degree 4 at " + q.str());

    BrauerClass a = BrauerClass::from_invariants(
        BaseField::Qi, {{p5[0], QZ(1, 4)}, {p5[1], QZ(1, 4)},
                        {p13[0], QZ(1, 4)}, {p13[1], QZ(1, 4)}});
    BrauerClass b = BrauerClass::from_invariants(
        BaseField::Qi,
        {{p5[0], QZ(1, 4)}, {p5[1], QZ(1, 4)}, {p13[0], QZ(1, 2)}});
    for (const BrauerClass* x : {&a, &b}) {
        c.expect(x->exponent() == 4, "exponent 4");
        c.expect(is_split_by(*x, l), "split by L");
        c.expect(is_in_br_t_relative(*x, l, 4), "lies in Br_4(L/k)");
        c.expect(!is_in_dec(*x, l), "not decomposable");
    }
    c.expect(!is_in_dec(a + (-b), l), "A - B not decomposable");
    c.expect((a + a).exponent() == 2 && is_in_dec(a + a, l),
             "2A is decomposable");
    return finish("biquadratic factor classes", c,
                  "A, B of exponent 4 outside Dec, A - B nontrivial mod Dec");
}

// --- criterion 3: the single-symbol obstruction --------------------------

CheckResult check_obstruction() {
    Checker c;
    KummerExtension l(BaseField::Qi, {{gqi(5), 2}, {gqi(13), 2}});
    BrauerClass d1 = extd1_select(l);
    BrauerClass s = symbol_to_class({gqi(13), gqi(5), 4});
    c.expect(!is_in_dec(d1 + (-s), l), "D1 - [sym] outside Dec");

    FieldElem one = FieldElem::one(BaseField::Qi);
    LaurentAlgebra alg{{{2, {gqi(5), 0, 0}, {one, 1, 0}},
                        {2, {gqi(13), 0, 0}, {one, 0, 1}}}};
    c.expect(quotient_invariants(value_group(alg)) ==
                 std::vector<std::int64_t>{2, 2},
             "value group of the semiramified product is Z2 x Z2");

    ObstructionReport rep = single_symbol_obstruction(d1, l);
    c.expect(rep.value_group_ok, "forced presentation value group");
    c.expect(rep.residues_ok, "forced presentation residues");
    c.expect(rep.obstruction, "obstruction verdict");
    return finish("single symbol obstruction", c,
                  "selected class is no single symbol algebra");
}

// --- criterion 4: quotient round-trip and kernel --------------------------

CheckResult check_ses() {
    Checker c;
    KummerExtension k(BaseField::Qi, {{gqi(5), 2}, {gqi(14), 4}});

    std::vector<SesQuotientElement> all = ses_quotient_elements(k);
    c.expect(all.size() == 4, "quotient has four elements");
    for (const SesQuotientElement& e : all) {
        BrauerClass x = ses_preimage(e, k);
        c.expect(ses_image(x, k) == e, "round-trip through a preimage");
        c.expect(is_in_dec(x, k) == e.is_zero(), "kernel = Dec on preimages");
    }

    std::vector<Place> pool = places_above(BaseField::Qi, 5);
    for (std::int64_t p : {3, 13, 17})
        for (const Place& q : places_above(BaseField::Qi, p))
            pool.push_back(q);
    std::vector<std::int64_t> dq;
    for (const Place& q : pool) dq.push_back(local_data(k, q).d_q);
    PrimaryDecomposition pd =
        primary_decomposition_with_complement(k.galois_group());
    std::vector<Elem> chars;
    for (const Subgroup& h : pd.h) chars.push_back(h.canonical_generator());
    Place pstar = chebotarev_find_prime(
        k, chars, 4, std::set<Place>(pool.begin(), pool.end()));

    std::mt19937_64 rng(0xac5e55ed);
    int nonzero = 0;
    for (int i = 0; i < 200; ++i) {
        std::map<Place, QZ> entries;
        QZ total;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            QZ v(static_cast<std::int64_t>(rng() % dq[j]), dq[j]);
            if (v.is_zero()) continue;
            entries[pool[j]] = v;
            total = total + v;
        }
        if (!total.is_zero()) entries[pstar] = -total;
        BrauerClass x = BrauerClass::from_invariants(BaseField::Qi, entries);
        c.expect(is_in_br_t_relative(x, k), "corpus class lies in Br_t");
        c.expect(ses_image(x, k).is_zero() == is_in_dec(x, k),
                 "image vanishes exactly on Dec");
        nonzero += !ses_image(x, k).is_zero();
    }
    c.expect(nonzero > 50, "corpus reaches nonzero quotient elements");
    return finish("quotient round-trip and kernel", c,
                  "4 preimages round-trip; kernel = Dec on 200 classes");
}

// --- criterion 5: multiquadratic decomposition ----------------------------

CheckResult check_multiquadratic() {
    Checker c;
    std::mt19937_64 rng(0xdec0b10cULL);
    std::vector<std::int64_t> qpool = {-1, 2,  -2, 3, -3, 5, -5,
                                       6,  7,  10, 11, 13, 15, 21};
    std::vector<FieldElem> gipool = {gqi(2),  gqi(3),  gqi(5),
                                     gqi(7),  gqi(11), gqi(13),
                                     FieldElem::from_gauss({0, 1}),
                                     FieldElem::from_gauss({1, 1}),
                                     FieldElem::from_gauss({2, 1}),
                                     FieldElem::from_gauss({3, 2})};
    std::vector<std::int64_t> primes = {3, 5, 7, 11, 13, 17, 19, 23, 29};

    int built_q = 0, built_qi = 0, decomposed = 0;
    while (built_q + built_qi < 50) {
        bool over_q = built_q < 30;
        BaseField base = over_q ? BaseField::Q : BaseField::Qi;
        std::size_t ngen = 1 + rng() % 3;
        std::vector<KummerGen> gens;
        if (over_q) {
            std::shuffle(qpool.begin(), qpool.end(), rng);
            for (std::size_t i = 0; i < ngen; ++i)
                gens.push_back({gq(qpool[i]), 2});
        } else {
            std::shuffle(gipool.begin(), gipool.end(), rng);
            for (std::size_t i = 0; i < ngen; ++i)
                gens.push_back({gipool[i], 2});
        }
        std::optional<KummerExtension> ext;
        try {
            ext.emplace(base, gens);
        } catch (const DomainError&) { continue; }
        (over_q ? built_q : built_qi) += 1;

        c.expect(bad_primes(*ext).empty(), "multiquadratic has no bad places");

        std::vector<Place> pool;
        for (std::int64_t p : primes)
            for (const Place& q : places_above(base, p))
                if (local_data(*ext, q).d_q == 2) pool.push_back(q);
        if (base == BaseField::Q &&
            local_data(*ext, Place::real_place()).d_q == 2)
            pool.push_back(Place::real_place());
        if (pool.size() < 2) continue;

        PrimaryDecomposition pd =
            primary_decomposition_with_complement(ext->galois_group());
        for (int rep = 0; rep < 4; ++rep) {
            std::shuffle(pool.begin(), pool.end(), rng);
            std::size_t len = 2 + 2 * (rng() % (pool.size() / 2));
            std::map<Place, QZ> entries;
            for (std::size_t i = 0; i < len; ++i)
                entries[pool[i]] = QZ(1, 2);
            BrauerClass x =
                BrauerClass::from_invariants(base, entries);
            c.expect(is_in_br_t_relative(x, *ext, 2), "class lies in Br_2");
            c.expect(is_in_dec(x, *ext), "class is decomposable");

            std::vector<BrauerClass> parts = decompose_into_cyclic(x, *ext);
            c.expect(parts.size() == pd.h.size(), "one piece per factor");
            BrauerClass sum = BrauerClass::trivial(base);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                sum = sum + parts[i];
                Elem chi = pd.h[i].canonical_generator();
                for (const auto& [q, v] : parts[i].invariants())
                    c.expect(local_degree_cyclic(*ext, chi, q) % v.order() ==
                                 0,
                             "piece respects its local degrees");
            }
            c.expect(sum == x, "pieces re-sum exactly");
            ++decomposed;
        }
    }
    c.expect(decomposed >= 200, "at least 200 decompositions");
    return finish("multiquadratic decomposition", c,
                  "50 extensions without bad places; " +
                      std::to_string(decomposed) + " exact decompositions");
}

// --- criterion 6: quaternion symbol oracles -------------------------------

const std::vector<char>& square_bitmap(std::int64_t m) {
    static std::map<std::int64_t, std::vector<char>> cache;
    auto it = cache.find(m);
    if (it == cache.end()) {
        std::vector<char> sq(m, 0);
        for (std::int64_t x = 0; x < m; ++x) sq[x * x % m] = 1;
        it = cache.emplace(m, std::move(sq)).first;
    }
    return it->second;
}

// z^2 = a x^2 + b y^2 over Q_p, p odd, decided exactly mod p^6 (square
// scaling brings the valuations into {0,1}; a projective zero then sits in
// a unit stratum, and nonzero residues certify squareness in Z_p)
bool conic_solvable(std::int64_t a, std::int64_t b, std::int64_t p) {
    while (a % (p * p) == 0) a /= p * p;
    while (b % (p * p) == 0) b /= p * p;
    std::int64_t m = p * p * p;
    m *= m;
    const std::vector<char>& sq = square_bitmap(m);
    std::int64_t am = ((a % m) + m) % m, bm = ((b % m) + m) % m;
    for (std::int64_t y = 0; y < m; ++y) {
        std::int64_t s = (am + bm * (y * y % m)) % m;
        if (s != 0 && sq[s]) return true;
    }
    for (std::int64_t x = 0; x < m; ++x) {
        std::int64_t s = (bm + am * (x * x % m)) % m;
        if (s != 0 && sq[s]) return true;
    }
    return false;
}

QZ dyadic_oracle(std::int64_t a, std::int64_t b) {
    int al = 0, be = 0;
    while (a % 2 == 0) { a /= 2; ++al; }
    while (b % 2 == 0) { b /= 2; ++be; }
    int u = static_cast<int>(((a % 8) + 8) % 8);
    int w = static_cast<int>(((b % 8) + 8) % 8);
    int eps_u = (u == 3 || u == 7), eps_w = (w == 3 || w == 7);
    int omg_u = (u == 3 || u == 5), omg_w = (w == 3 || w == 5);
    return QZ((eps_u * eps_w + al * omg_w + be * omg_u) % 2, 2);
}

CheckResult check_symbols() {
    Checker c;
    std::mt19937_64 rng(0x5bb01e5 * 7);
    std::uniform_int_distribution<std::int64_t> pick(-50, 50);
    int done = 0;
    while (done < 500) {
        std::int64_t a = pick(rng), b = pick(rng);
        if (a == 0 || b == 0) continue;
        // spread the valuations at the oracle primes and at 2
        if (done % 4 == 1) a *= 9;
        if (done % 4 == 2) b *= 5;
        if (done % 4 == 3) { a *= 2; b *= 4; }
        BrauerClass x = symbol_to_class({gq(a), gq(b), 2});
        QZ sum;
        for (const auto& [q, v] : x.invariants()) sum = sum + v;
        c.expect(sum.is_zero(), "invariants sum to zero");
        for (std::int64_t p : {3, 5, 7})
            c.expect(x.invariant(Place::rational(p)).is_zero() ==
                         conic_solvable(a, b, p),
                     "tame entry matches the conic oracle");
        c.expect(x.invariant(Place::rational(2)) == dyadic_oracle(a, b),
                 "reciprocity fill matches the dyadic formula");
        ++done;
    }
    return finish("quaternion symbol oracles", c,
                  "500 symbols against conic and dyadic oracles");
}

// --- criterion 7: group decomposition postconditions ----------------------

void visit_group(Checker& c, const std::vector<std::int64_t>& factors) {
    FinAbGroup g(factors);
    std::int64_t t = g.exponent();

    PrimaryDecomposition pd = primary_decomposition_with_complement(g);
    Subgroup acc = Subgroup::trivial(g);
    for (const Subgroup& h : pd.h) {
        c.expect(h.is_cyclic() && h.order() == t,
                 "primary part cyclic of order exp(G)");
        c.expect(join(h, pd.d) == Subgroup::full(g), "H_i + D = G");
        c.expect(meet(h, pd.d) == Subgroup::trivial(g), "H_i meet D = 1");
        acc = join(acc, h);
    }
    c.expect(acc == Subgroup::full(g), "primary parts generate G");

    PerpDecomposition pp = perp_decomposition(g);
    Subgroup m = Subgroup::full(g);
    for (const Subgroup& k : pp.k) {
        c.expect(quotient_invariant_factors(k) ==
                     std::vector<std::int64_t>{t},
                 "G/K_i cyclic of order exp(G)");
        c.expect(meet(k, pp.d_prime) == Subgroup::trivial(g),
                 "K_i meet D' = 1");
        m = meet(m, k);
    }
    c.expect(m == Subgroup::trivial(g), "the K_i intersect trivially");
    c.expect(pp.d_prime.is_cyclic() && pp.d_prime.order() == t,
             "D' cyclic of order exp(G)");
    c.expect(lcm_of_cyclic_quotients(g, pp.k) == t,
             "lcm of cyclic quotients is exp(G)");
}

void enum_factor_chains(Checker& c, std::vector<std::int64_t>& cur,
                        std::int64_t prod, std::int64_t cap) {
    if (!cur.empty()) visit_group(c, cur);
    std::int64_t head = cur.empty() ? cap : cur.back();
    for (std::int64_t t = 2; t <= head; ++t) {
        if (!cur.empty() && cur.back() % t != 0) continue;
        if (prod * t > cap) continue;
        cur.push_back(t);
        enum_factor_chains(c, cur, prod * t, cap);
        cur.pop_back();
    }
}

CheckResult check_group_postconditions() {
    Checker c;
    std::vector<std::int64_t> cur;
    enum_factor_chains(c, cur, 1, 64);
    return finish("group decomposition postconditions", c,
                  "all abelian groups of order <= 64");
}

} // namespace

std::vector<CheckResult> run_verify_suite() {
    std::vector<std::pair<const char*, CheckResult (*)()>> checks = {
        {"bad places of the quartic example", check_bad_place_example},
        {"biquadratic factor classes", check_factor_classes},
        {"single symbol obstruction", check_obstruction},
        {"quotient round-trip and kernel", check_ses},
        {"multiquadratic decomposition", check_multiquadratic},
        {"quaternion symbol oracles", check_symbols},
        {"group decomposition postconditions", check_group_postconditions},
    };
    std::vector<CheckResult> out;
    for (const auto& [name, fn] : checks) out.push_back(guarded(name, fn));
    return out;
}

} // namespace decforge
