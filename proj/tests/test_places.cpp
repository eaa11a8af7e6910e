#include "doctest.h"

#include "decforge/element.hpp"
#include "decforge/errors.hpp"
#include "decforge/local.hpp"
#include "decforge/place.hpp"
#include "decforge/qz.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

using namespace decforge;

namespace {

// ---------------------------------------------------------------------
// independent truncated-ring oracles (deliberately reimplemented from
// scratch; the library must agree with these, not the other way around)
// ---------------------------------------------------------------------

std::int64_t omul(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<__int128>(a) * b % m;
}

std::int64_t opow(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1;
    b %= m;
    if (b < 0) b += m;
    for (; e; e >>= 1, b = omul(b, b, m))
        if (e & 1) r = omul(r, b, m);
    return r;
}

std::int64_t oinv(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
    while (r1) {
        std::int64_t q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        s0 -= q * s1; std::swap(s0, s1);
    }
    REQUIRE(r0 == 1);
    return ((s0 % m) + m) % m;
}

std::int64_t ipow6(std::int64_t p) {
    std::int64_t r = 1;
    for (int j = 0; j < 6; ++j) r *= p;
    return r;
}

// Hensel lift of sqrt(-1) modulo p^6, seeded by brute force mod p
std::int64_t lift_sqrt_minus_one(std::int64_t p, std::int64_t seed_mod_p) {
    std::int64_t P = ipow6(p);
    std::int64_t r = seed_mod_p;
    for (int j = 0; j < 6; ++j) {
        std::int64_t f = (omul(r, r, P) + 1) % P;
        r = (r - omul(f, oinv(2 * r % P, P), P) % P + P) % P;
    }
    REQUIRE((omul(r, r, P) + 1) % P == 0);
    return r;
}

// bitmap of n-th powers of units modulo p^6
std::vector<bool> power_bitmap(std::int64_t p, int n) {
    std::int64_t P = ipow6(p);
    std::vector<bool> bm(static_cast<std::size_t>(P), false);
    for (std::int64_t x = 1; x < P; ++x) {
        if (x % p == 0) continue;
        std::int64_t y = omul(x, x, P);
        if (n == 4) y = omul(y, y, P);
        bm[static_cast<std::size_t>(y)] = true;
    }
    return bm;
}

// pair arithmetic in Z[i]/p^k for the inert oracle
struct OPair { std::int64_t a, b; };
OPair opmul(OPair x, OPair y, std::int64_t m) {
    return {((omul(x.a, y.a, m) - omul(x.b, y.b, m)) % m + m) % m,
            (omul(x.a, y.b, m) + omul(x.b, y.a, m)) % m};
}
OPair oppow(OPair x, std::int64_t e, std::int64_t m) {
    OPair r{1, 0};
    for (; e; e >>= 1, x = opmul(x, x, m))
        if (e & 1) r = opmul(r, x, m);
    return r;
}
OPair opinv(OPair x, std::int64_t m) {
    std::int64_t n = (omul(x.a, x.a, m) + omul(x.b, x.b, m)) % m;
    std::int64_t ni = oinv(n, m);
    return {omul(x.a, ni, m), omul((m - x.b) % m, ni, m)};
}

// set of n-th powers of units of Z[i]/3^6, index a*P+b
std::vector<bool> inert_power_set(int n) {
    std::int64_t P = ipow6(3);
    std::vector<bool> bm(static_cast<std::size_t>(P * P), false);
    for (std::int64_t a = 0; a < P; ++a)
        for (std::int64_t b = 0; b < P; ++b) {
            if (a % 3 == 0 && b % 3 == 0) continue;
            OPair y = oppow({a, b}, n, P);
            bm[static_cast<std::size_t>(y.a * P + y.b)] = true;
        }
    return bm;
}

// test-local (1+i)-adic valuation of an exact pair
int oval2(std::int64_t a, std::int64_t b, int cap) {
    if (a == 0 && b == 0) return cap;
    int v = 0;
    while ((a + b) % 2 == 0) {
        std::int64_t na = (a + b) / 2, nb = (b - a) / 2;
        a = na; b = nb; ++v;
    }
    return v;
}

// dyadic oracle over Q(i): search roots mod 2^K, threshold m
bool oracle_dyadic_qi(OPair u, int n) {
    int m = n == 2 ? 5 : 9;
    int K = n == 2 ? 4 : 6; // coarser than the library uses on purpose
    std::int64_t M = std::int64_t{1} << K;
    for (std::int64_t a = 0; a < M; ++a)
        for (std::int64_t b = (a + 1) % 2; b < M; b += 2) {
            OPair y = oppow({a, b}, n, M);
            if (oval2(((y.a - u.a) % M + M) % M, ((y.b - u.b) % M + M) % M,
                      2 * K) >= m)
                return true;
        }
    return false;
}

// dyadic oracle over Q: squares of odd numbers modulo 32
bool oracle_dyadic_q(std::int64_t u) {
    u = ((u % 32) + 32) % 32;
    for (std::int64_t x = 1; x < 32; x += 2)
        if (omul(x, x, 32) == u) return true;
    return false;
}

// integer n-th root oracle for the global test over Q
bool is_perfect_power(std::int64_t v, int n) {
    if (v <= 0) return false;
    for (std::int64_t r = 1;; ++r) {
        std::int64_t pw = 1;
        for (int j = 0; j < n && pw <= v; ++j) pw *= r;
        if (pw == v) return true;
        if (pw > v) return false;
    }
}

// box-search oracle: is z an n-th power in Z[i]?  Any root x has
// |x components| <= norm(z)^(1/4) for n >= 2.
bool gauss_is_power(const GaussInt& z, int n) {
    std::int64_t lim = 1;
    while (lim * lim * lim * lim < z.norm()) ++lim;
    ++lim;
    for (std::int64_t a = -lim; a <= lim; ++a)
        for (std::int64_t b = -lim; b <= lim; ++b) {
            GaussInt x{a, b}, y{1, 0};
            for (int j = 0; j < n; ++j) y = y * x;
            if (y == z) return true;
        }
    return false;
}

std::int64_t rnd_pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace

// ---------------------------------------------------------------------

TEST_CASE("gaussian integer arithmetic and parsing") {
    GaussInt z{3, -2};
    CHECK(z.str() == "3-2i");
    CHECK(GaussInt::parse("3-2i") == z);
    CHECK(GaussInt::parse("-i") == GaussInt{0, -1});
    CHECK(GaussInt::parse("i") == GaussInt{0, 1});
    CHECK(GaussInt::parse("7") == GaussInt{7, 0});
    CHECK(GaussInt::parse("-1+i") == GaussInt{-1, 1});
    CHECK(GaussInt::parse("2i") == GaussInt{0, 2});
    CHECK((GaussInt{1, 1} * GaussInt{1, -1}) == GaussInt{2, 0});
    CHECK(GaussInt{2, 1}.norm() == 5);
    CHECK(GaussInt{1, 0}.times_i(3) == GaussInt{0, -1});

    GaussInt q;
    CHECK(GaussInt{5, 0}.divide_exact({2, 1}, q));
    CHECK(q == GaussInt{2, -1});
    CHECK_FALSE(GaussInt{3, 0}.divide_exact({2, 1}, q));
    CHECK_THROWS_AS(GaussInt::parse("2+3j"), DomainError);
}

TEST_CASE("two-square decompositions are deterministic") {
    CHECK(two_squares(5) == GaussInt{2, 1});
    CHECK(two_squares(13) == GaussInt{3, 2});
    CHECK(two_squares(17) == GaussInt{4, 1});
    CHECK(two_squares(29) == GaussInt{5, 2});
    CHECK(two_squares(37) == GaussInt{6, 1});
    CHECK(two_squares(41) == GaussInt{5, 4});
    CHECK(two_squares(97) == GaussInt{9, 4});
    CHECK_THROWS_AS(two_squares(7), DomainError);
    CHECK_THROWS_AS(two_squares(15), DomainError);
}

TEST_CASE("places above rational primes") {
    auto v5 = places_above(BaseField::Qi, 5);
    REQUIRE(v5.size() == 2);
    CHECK(v5[0].pi == GaussInt{2, 1});
    CHECK(v5[1].pi == GaussInt{2, -1});
    CHECK(v5[0] < v5[1]);
    CHECK(v5[0].e == 1);
    CHECK(v5[0].f == 1);
    CHECK(v5[0].residue_size() == 5);

    auto v2 = places_above(BaseField::Qi, 2);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].pi == GaussInt{1, 1});
    CHECK(v2[0].e == 2);
    CHECK(v2[0].f == 1);

    auto v7 = places_above(BaseField::Qi, 7);
    REQUIRE(v7.size() == 1);
    CHECK(v7[0].f == 2);
    CHECK(v7[0].residue_size() == 49);

    auto q5 = places_above(BaseField::Q, 5);
    REQUIRE(q5.size() == 1);
    CHECK(q5[0].p == 5);

    // partition: sum of e*f over places above p equals [Q(i):Q] = 2
    for (std::int64_t p = 2; p < 200; ++p) {
        if (!is_prime(p)) continue;
        int total = 0;
        for (const Place& q : places_above(BaseField::Qi, p)) total += q.e * q.f;
        CHECK(total == 2);
    }

    CHECK(archimedean_place(BaseField::Q).kind == PlaceKind::Real);
    CHECK(archimedean_place(BaseField::Qi).kind == PlaceKind::Complex);
}

TEST_CASE("gaussian place canonicalization") {
    // all associates of 2-i name the same place
    Place q = Place::gaussian({2, -1});
    CHECK(Place::gaussian({1, 2}) == q);   // i*(2-i)
    CHECK(Place::gaussian({-2, 1}) == q);  // -(2-i)
    CHECK(Place::gaussian({-1, -2}) == q);
    CHECK(q.pi == GaussInt{2, -1});
    CHECK(Place::gaussian({0, 3}).pi == GaussInt{3, 0});
    CHECK(Place::gaussian({0, -7}).p == 7);
    CHECK_THROWS_AS(Place::gaussian({3, 1}), DomainError);  // norm 10
    CHECK_THROWS_AS(Place::gaussian({5, 0}), DomainError);  // 5 splits
    CHECK_THROWS_AS(Place::gaussian({0, 0}), DomainError);

    CHECK(Place::parse(BaseField::Qi, "2+i").pi == GaussInt{2, 1});
    CHECK(Place::parse(BaseField::Qi, "1+i").e == 2);
    CHECK(Place::parse(BaseField::Q, "13").p == 13);
    CHECK(Place::parse(BaseField::Q, "real").kind == PlaceKind::Real);
    CHECK_THROWS_AS(Place::parse(BaseField::Q, "6"), DomainError);

    // ordering: finite by residue characteristic, conjugates by imaginary
    // part, archimedean last
    Place a = Place::gaussian({2, 1}), b = Place::gaussian({2, -1});
    Place c = Place::gaussian({3, 0}), d = Place::complex_place();
    CHECK(a < b);
    CHECK(c < a);
    CHECK(a < d);
}

TEST_CASE("field elements factor, multiply, and print") {
    FieldElem f14 = FieldElem::from_integer(BaseField::Qi, 14);
    CHECK(f14.unit_pow() == 3);
    CHECK(f14.valuation(Place::gaussian({1, 1})) == 2);
    CHECK(f14.valuation(Place::gaussian({7, 0})) == 1);
    CHECK(f14.factorization().size() == 2);
    CHECK(f14.str() == "14");

    FieldElem f5 = FieldElem::from_integer(BaseField::Qi, 5);
    CHECK(f5.valuation(Place::gaussian({2, 1})) == 1);
    CHECK(f5.valuation(Place::gaussian({2, -1})) == 1);
    CHECK(FieldElem::from_gauss({2, 1}) * FieldElem::from_gauss({2, -1}) == f5);

    FieldElem r = FieldElem::parse(BaseField::Qi, "(1+2i)/3");
    CHECK(r.unit_pow() == 1); // 1+2i = i*(2-i)
    CHECK(r.valuation(Place::gaussian({2, -1})) == 1);
    CHECK(r.valuation(Place::gaussian({3, 0})) == -1);
    CHECK(r.str() == "(1+2i)/3");

    FieldElem q = FieldElem::parse(BaseField::Q, "-20/9");
    CHECK_FALSE(q.positive());
    CHECK(q.valuation(Place::rational(2)) == 2);
    CHECK(q.valuation(Place::rational(5)) == 1);
    CHECK(q.valuation(Place::rational(3)) == -2);
    CHECK(q.str() == "-20/9");
    CHECK(q * q.inverse() == FieldElem::one(BaseField::Q));
    CHECK(q.pow(3).valuation(Place::rational(3)) == -6);

    CHECK(FieldElem::from_integer(BaseField::Qi, -1).unit_pow() == 2);
    CHECK(FieldElem::parse(BaseField::Qi, "i").unit_pow() == 1);
    CHECK_THROWS_AS(FieldElem::from_integer(BaseField::Q, 0), DomainError);
    CHECK_THROWS_AS(FieldElem::parse(BaseField::Q, "2+i"), DomainError);
    CHECK_THROWS_AS(
        FieldElem::from_integer(BaseField::Q, 3) *
            FieldElem::from_integer(BaseField::Qi, 3),
        DomainError);
}

TEST_CASE("global n-th power tests match brute oracles") {
    // over Q: reduced fractions, both parts must be perfect powers
    std::mt19937_64 rng(20260815);
    for (int it = 0; it < 200; ++it) {
        std::int64_t num = rnd_pick(rng, 1, 400);
        std::int64_t den = rnd_pick(rng, 1, 40);
        std::int64_t g = gcd_ll(num, den);
        num /= g; den /= g;
        bool neg = rng() % 2;
        FieldElem a = FieldElem::from_rational(BaseField::Q,
                                               neg ? -num : num, den);
        bool expect = !neg && is_perfect_power(num, 2) && is_perfect_power(den, 2);
        CHECK(a.is_nth_power_global(2) == expect);
    }
    CHECK(FieldElem::from_integer(BaseField::Q, 16).is_nth_power_global(4));
    CHECK_FALSE(FieldElem::from_integer(BaseField::Q, -4).is_nth_power_global(4));
    CHECK_FALSE(FieldElem::from_integer(BaseField::Q, -1).is_nth_power_global(2));

    // over Q(i): gaussian integers against an exact box search
    for (int it = 0; it < 120; ++it) {
        GaussInt z{rnd_pick(rng, -12, 12), rnd_pick(rng, -12, 12)};
        if (z.is_zero()) continue;
        int n = rng() % 2 ? 2 : 4;
        FieldElem a = FieldElem::from_gauss(z);
        CHECK(a.is_nth_power_global(n) == gauss_is_power(z, n));
    }
    // -4 = (1+i)^4 is a fourth power in Q(i) but not in Q
    CHECK(FieldElem::from_integer(BaseField::Qi, -4).is_nth_power_global(4));
    CHECK(FieldElem::from_integer(BaseField::Qi, -1).is_nth_power_global(2));
    CHECK_FALSE(FieldElem::parse(BaseField::Qi, "i").is_nth_power_global(2));
    CHECK_THROWS_AS(
        FieldElem::from_integer(BaseField::Q, 5).is_nth_power_global(3),
        DomainError);
}

TEST_CASE("residue fields embed i through the chosen uniformizer") {
    ResidueField F1(Place::gaussian({2, 1}));
    CHECK(F1.embed_i() == ResElem{3, 0}); // -2/1 mod 5
    ResidueField F2(Place::gaussian({2, -1}));
    CHECK(F2.embed_i() == ResElem{2, 0});
    ResidueField F3(Place::gaussian({3, 2}));
    CHECK(F3.embed_i() == ResElem{5, 0}); // -3/2 mod 13
    ResidueField F4(Place::gaussian({3, -2}));
    CHECK(F4.embed_i() == ResElem{8, 0});
    ResidueField F5(Place::gaussian({3, 0}));
    CHECK(F5.embed_i() == ResElem{0, 1});
    CHECK(F5.size() == 9);

    // residue of 13 at the place 2+i
    CHECK(F1.residue_unit(FieldElem::from_integer(BaseField::Qi, 13)) ==
          ResElem{3, 0});
    // residue of (1+i)^2 * i = 2i^2 = -2 at 2+i: -2 mod 5
    FieldElem t = FieldElem::from_gauss({1, 1}).pow(2) *
                  FieldElem::parse(BaseField::Qi, "i");
    CHECK(F1.residue_unit(t) == ResElem{3, 0});
    CHECK_THROWS_AS(
        F1.residue_unit(FieldElem::from_integer(BaseField::Qi, 5)),
        DomainError);

    // F_9 arithmetic: (1+i)(1-i) = 2, i^2 = -1
    CHECK(F5.mul({1, 1}, {1, 2}) == ResElem{2, 0});
    CHECK(F5.mul({0, 1}, {0, 1}) == ResElem{2, 0});
    CHECK(F5.is_one(F5.mul({1, 1}, F5.inv({1, 1}))));
    CHECK(F5.is_one(F5.pow({1, 1}, 8))); // unit group has order 8
}

TEST_CASE("tame local power tests agree with truncated-ring oracles") {
    std::mt19937_64 rng(777001);

    // --- over Q at p in {3,5,7}, n = 2: 250 samples
    const std::int64_t qpool[] = {2, 3, 5, 7, 11, 13};
    int counts_q[3] = {90, 90, 70};
    const std::int64_t qprimes[3] = {3, 5, 7};
    for (int pi = 0; pi < 3; ++pi) {
        std::int64_t p = qprimes[pi];
        std::int64_t P = ipow6(p);
        std::vector<bool> bm = power_bitmap(p, 2);
        Place q = Place::rational(p);
        for (int it = 0; it < counts_q[pi]; ++it) {
            FieldElem a = FieldElem::one(BaseField::Q);
            std::int64_t img = 1;
            if (rng() % 2) {
                a = FieldElem::from_integer(BaseField::Q, -1);
                img = P - 1;
            }
            for (std::int64_t b : qpool) {
                if (b == p) continue;
                int e = static_cast<int>(rnd_pick(rng, -2, 3));
                if (!e) continue;
                a = a * FieldElem::from_integer(BaseField::Q, b).pow(e);
                img = omul(img, e > 0 ? opow(b, e, P) : oinv(opow(b, -e, P), P), P);
            }
            int vp = static_cast<int>(rnd_pick(rng, -2, 3));
            a = a * FieldElem::from_integer(BaseField::Q, p).pow(vp);
            bool expect = vp % 2 == 0 && bm[static_cast<std::size_t>(img)];
            CHECK(is_nth_power_local(a, 2, q) == expect);
        }
    }

    // --- over Q(i) at split places, via the Hensel embedding i -> r
    struct SplitCfg { GaussInt pi; int n; int count; };
    const SplitCfg cfgs[] = {
        {{2, 1}, 2, 70}, {{2, -1}, 2, 30}, {{3, 2}, 2, 40}, {{3, 2}, 4, 60}};
    const GaussInt gpool[] = {{2, 1}, {2, -1}, {3, 2}, {3, -2},
                              {1, 1}, {7, 0},  {3, 0}};
    std::map<std::pair<std::int64_t, int>, std::vector<bool>> bitmap_cache;
    for (const SplitCfg& cfg : cfgs) {
        Place q = Place::gaussian(cfg.pi);
        std::int64_t p = q.p;
        std::int64_t P = ipow6(p);
        auto key = std::make_pair(p, cfg.n);
        if (!bitmap_cache.count(key)) bitmap_cache[key] = power_bitmap(p, cfg.n);
        const std::vector<bool>& bm = bitmap_cache[key];
        // embedding sends i to the root of -1 vanishing on the uniformizer
        std::int64_t r0 = 0;
        for (std::int64_t c = 1; c < p; ++c)
            if ((c * c + 1) % p == 0 &&
                (q.pi.re + q.pi.im * c) % p == 0) { r0 = c; break; }
        REQUIRE(r0 != 0);
        std::int64_t r = lift_sqrt_minus_one(p, r0);
        auto embed = [&](const GaussInt& z) {
            return ((z.re % P + omul(((z.im % P) + P) % P, r, P)) % P + P) % P;
        };
        for (int it = 0; it < cfg.count; ++it) {
            FieldElem a = FieldElem::parse(BaseField::Qi, "i")
                              .pow(static_cast<std::int64_t>(rng() % 4));
            std::int64_t img = embed(GaussInt{1, 0}.times_i(a.unit_pow()));
            for (const GaussInt& g : gpool) {
                if (Place::gaussian(g) == q) continue;
                int e = static_cast<int>(rnd_pick(rng, -2, 2));
                if (!e) continue;
                a = a * FieldElem::from_gauss(g).pow(e);
                std::int64_t gi = embed(g);
                img = omul(img, e > 0 ? opow(gi, e, P) : oinv(opow(gi, -e, P), P), P);
            }
            int vp = static_cast<int>(rnd_pick(rng, -2, 3));
            a = a * FieldElem::from_gauss(cfg.pi).pow(vp);
            bool expect =
                vp % cfg.n == 0 && bm[static_cast<std::size_t>(img)];
            CHECK(is_nth_power_local(a, cfg.n, q) == expect);
        }
    }

    // --- inert place 3 of Q(i): exact pair arithmetic mod 3^6
    {
        Place q = Place::gaussian({3, 0});
        std::int64_t P = ipow6(3);
        std::vector<bool> s2 = inert_power_set(2);
        std::vector<bool> s4 = inert_power_set(4);
        const GaussInt gpool3[] = {{2, 1}, {2, -1}, {1, 1}, {7, 0}, {3, 2}};
        for (int it = 0; it < 50; ++it) {
            int n = it % 2 ? 2 : 4;
            FieldElem a = FieldElem::parse(BaseField::Qi, "i")
                              .pow(static_cast<std::int64_t>(rng() % 4));
            OPair img = oppow({0, 1}, a.unit_pow(), P);
            for (const GaussInt& g : gpool3) {
                int e = static_cast<int>(rnd_pick(rng, -2, 2));
                if (!e) continue;
                a = a * FieldElem::from_gauss(g).pow(e);
                OPair gi{((g.re % P) + P) % P, ((g.im % P) + P) % P};
                OPair gp = oppow(gi, std::abs(e), P);
                img = opmul(img, e > 0 ? gp : opinv(gp, P), P);
            }
            int vp = static_cast<int>(rnd_pick(rng, -1, 2));
            a = a * FieldElem::from_integer(BaseField::Qi, 3).pow(vp);
            const std::vector<bool>& bm = n == 2 ? s2 : s4;
            bool expect = vp % n == 0 &&
                          bm[static_cast<std::size_t>(img.a * P + img.b)];
            CHECK(is_nth_power_local(a, n, q) == expect);
        }
    }
}

TEST_CASE("known local power values") {
    Place p5a = Place::gaussian({2, 1});
    // 2 is not a square in the residue field at 2+i
    CHECK_FALSE(is_nth_power_local(FieldElem::from_integer(BaseField::Qi, 2),
                                   2, p5a));
    // 4 = 2^2 is
    CHECK(is_nth_power_local(FieldElem::from_integer(BaseField::Qi, 4), 2, p5a));
    // 14 = 4 mod 5 is a square but not a fourth power at 2+i
    FieldElem f14 = FieldElem::from_integer(BaseField::Qi, 14);
    CHECK(is_nth_power_local(f14, 2, p5a));
    CHECK_FALSE(is_nth_power_local(f14, 4, p5a));
    // i has order 4 in F_5^*, so it is a square nowhere above 5
    FieldElem fi = FieldElem::parse(BaseField::Qi, "i");
    CHECK_FALSE(is_nth_power_local(fi, 2, p5a));
    CHECK_FALSE(is_nth_power_local(fi, 2, Place::gaussian({2, -1})));
    // 13 = 3 mod 5 is not a square at 2+i
    CHECK_FALSE(is_nth_power_local(FieldElem::from_integer(BaseField::Qi, 13),
                                   2, p5a));
    // every unit of F_p is a square in F_{p^2}
    Place p3 = Place::gaussian({3, 0});
    CHECK(is_nth_power_local(FieldElem::from_integer(BaseField::Qi, 2), 2, p3));
    CHECK(is_nth_power_local(FieldElem::from_integer(BaseField::Qi, 5), 2, p3));
    // 5 is a fourth power in F_49 (its order 6 divides 48/4)
    Place p7 = Place::gaussian({7, 0});
    CHECK(is_nth_power_local(FieldElem::from_integer(BaseField::Qi, 5), 4, p7));

    // archimedean places
    CHECK(is_nth_power_local(FieldElem::from_integer(BaseField::Q, -3), 2,
                             Place::real_place()) == false);
    CHECK(is_nth_power_local(FieldElem::from_integer(BaseField::Q, 3), 2,
                             Place::real_place()));
    CHECK(is_nth_power_local(FieldElem::from_integer(BaseField::Qi, -3), 2,
                             Place::complex_place()));

    CHECK_THROWS_AS(is_nth_power_local(fi, 3, p5a), DomainError);
    CHECK_THROWS_AS(
        is_nth_power_local(FieldElem::from_integer(BaseField::Q, 5), 4,
                           Place::rational(3)),
        DomainError);
    CHECK_THROWS_AS(
        is_nth_power_local(FieldElem::from_integer(BaseField::Q, 5), 2, p5a),
        DomainError);
}

TEST_CASE("dyadic power tests: frozen values and oracle agreement") {
    Place d = Place::rational(2);
    auto qz = [](std::int64_t n) { return FieldElem::from_integer(BaseField::Q, n); };
    CHECK(is_nth_power_local(qz(17), 2, d));       // 17 = 1 mod 8
    CHECK_FALSE(is_nth_power_local(qz(3), 2, d));
    CHECK_FALSE(is_nth_power_local(qz(2), 2, d));  // odd valuation
    CHECK(is_nth_power_local(qz(-7), 2, d));       // -7 = 1 mod 8
    CHECK_FALSE(is_nth_power_local(qz(12), 2, d)); // 4*3
    CHECK(is_nth_power_local(qz(4), 2, d));

    Place w = Place::gaussian({1, 1});
    auto gz = [](std::int64_t n) { return FieldElem::from_integer(BaseField::Qi, n); };
    FieldElem fi = FieldElem::parse(BaseField::Qi, "i");
    CHECK_FALSE(is_nth_power_local(gz(5), 2, w));
    CHECK_FALSE(is_nth_power_local(gz(13), 2, w));
    CHECK(is_nth_power_local(gz(65), 2, w));  // 65 = 1 mod 64
    CHECK(is_nth_power_local(gz(-1), 2, w));  // -1 = i^2
    CHECK_FALSE(is_nth_power_local(fi, 2, w));
    CHECK_FALSE(is_nth_power_local(gz(2), 2, w)); // 2 = -i(1+i)^2, -i not square
    CHECK(is_nth_power_local(FieldElem::from_gauss({0, 2}), 2, w)); // 2i=(1+i)^2
    CHECK(is_nth_power_local(gz(-4), 4, w));  // -4 = (1+i)^4
    CHECK_FALSE(is_nth_power_local(fi, 4, w));
    CHECK(is_nth_power_local(gz(17), 2, w));  // 17 = 1 mod 16

    // random agreement with the coarser independent search
    std::mt19937_64 rng(424242);
    const GaussInt pool[] = {{2, 1}, {2, -1}, {3, 2}, {3, -2}, {3, 0}, {7, 0}};
    for (int it = 0; it < 80; ++it) {
        int n = it % 2 ? 2 : 4;
        std::int64_t M = std::int64_t{1} << (n == 2 ? 4 : 6);
        FieldElem a = fi.pow(static_cast<std::int64_t>(rng() % 4));
        OPair img = oppow({0, 1}, a.unit_pow(), M);
        for (const GaussInt& g : pool) {
            int e = static_cast<int>(rnd_pick(rng, -1, 2));
            if (!e) continue;
            a = a * FieldElem::from_gauss(g).pow(e);
            OPair gi{((g.re % M) + M) % M, ((g.im % M) + M) % M};
            OPair gp = oppow(gi, std::abs(e), M);
            img = opmul(img, e > 0 ? gp : opinv(gp, M), M);
        }
        int v = 2 * static_cast<int>(rnd_pick(rng, 0, 2)); // even shifts only
        FieldElem shifted = a * FieldElem::from_gauss({1, 1}).pow(v);
        bool lib = is_nth_power_local(shifted, n, w);
        bool expect = v % n == 0 ? oracle_dyadic_qi(img, n) : false;
        CHECK(lib == expect);
    }
    for (std::int64_t u = -39; u < 40; u += 2) {
        bool lib = is_nth_power_local(qz(u), 2, d);
        CHECK(lib == oracle_dyadic_q(u));
    }
}
