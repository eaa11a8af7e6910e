#include "decforge/local.hpp"

#include "decforge/errors.hpp"
#include "decforge/qz.hpp"

#include <cstdlib>

namespace decforge {

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m) {
    if (e < 0) return mod_pow(mod_inv(b, m), -e, m);
    std::int64_t r = 1 % m;
    b = ((b % m) + m) % m;
    while (e) {
        if (e & 1) r = static_cast<__int128>(r) * b % m;
        b = static_cast<__int128>(b) * b % m;
        e >>= 1;
    }
    return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
    while (r1) {
        std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) fail(Err::Precondition, "element not invertible mod modulus");
    return ((s0 % m) + m) % m;
}

ResidueField::ResidueField(const Place& q) : q_(q) {
    if (!q.finite() || q.p == 2)
        fail(Err::Precondition, "residue arithmetic is for odd finite places");
    p_ = q.p;
    qsize_ = q.residue_size();
    if (q.base == BaseField::Qi && q.f == 1) {
        // i = -A/B mod p at the split place A+Bi
        r_ = mod_inv(((q.pi.im % p_) + p_) % p_, p_);
        r_ = static_cast<__int128>(((-q.pi.re % p_) + p_) % p_) * r_ % p_;
        if (static_cast<__int128>(r_) * r_ % p_ != p_ - 1)
            fail(Err::InternalInconsistency, "bad residue of i at " + q.str());
    }
}

ResElem ResidueField::mul(const ResElem& a, const ResElem& b) const {
    if (q_.f == 1)
        return {static_cast<std::int64_t>(
                    static_cast<__int128>(a.c0) * b.c0 % p_),
                0};
    __int128 c0 = static_cast<__int128>(a.c0) * b.c0 -
                  static_cast<__int128>(a.c1) * b.c1;
    __int128 c1 = static_cast<__int128>(a.c0) * b.c1 +
                  static_cast<__int128>(a.c1) * b.c0;
    return {static_cast<std::int64_t>(((c0 % p_) + p_) % p_),
            static_cast<std::int64_t>(((c1 % p_) + p_) % p_)};
}

ResElem ResidueField::inv(const ResElem& a) const {
    if (q_.f == 1) return {mod_inv(a.c0, p_), 0};
    // conjugate over norm in F_p(i)
    std::int64_t n =
        static_cast<std::int64_t>((static_cast<__int128>(a.c0) * a.c0 +
                                   static_cast<__int128>(a.c1) * a.c1) %
                                  p_);
    std::int64_t ni = mod_inv(n, p_);
    return {static_cast<std::int64_t>(static_cast<__int128>(a.c0) * ni % p_),
            static_cast<std::int64_t>(
                static_cast<__int128>(((-a.c1 % p_) + p_) % p_) * ni % p_)};
}

ResElem ResidueField::pow(ResElem a, std::int64_t k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    ResElem r = one();
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

ResElem ResidueField::embed_i() const {
    if (q_.base != BaseField::Qi)
        fail(Err::Precondition, "no i in the residue field of a place of Q");
    return q_.f == 1 ? ResElem{r_, 0} : ResElem{0, 1};
}

ResElem ResidueField::reduce_int(std::int64_t n) const {
    return {((n % p_) + p_) % p_, 0};
}

ResElem ResidueField::reduce_gauss(const GaussInt& z) const {
    ResElem re = reduce_int(z.re);
    ResElem im = reduce_int(z.im);
    return {(re.c0 + mul(im, embed_i()).c0) % p_,
            q_.f == 2 ? im.c0 : 0};
}

ResElem ResidueField::residue_unit(const FieldElem& a) const {
    if (a.base() != q_.base)
        fail(Err::BaseMismatch, "residue of an element of the wrong field");
    ResElem r = one();
    if (a.base() == BaseField::Qi) r = pow(embed_i(), a.unit_pow());
    else if (a.unit_pow() == 2) r = reduce_int(-1);
    for (const auto& [v, e] : a.factorization()) {
        if (v == q_)
            fail(Err::Precondition,
                 "residue of a non-unit at " + q_.str());
        ResElem pi = v.base == BaseField::Q ? reduce_int(v.p)
                                            : reduce_gauss(v.pi);
        r = mul(r, pow(pi, e));
    }
    return r;
}

int dyadic_valuation(GaussInt z, int cap) {
    if (z.is_zero()) return cap;
    int v = 0;
    while ((z.re + z.im) % 2 == 0) {
        // z / (1+i) = ((re+im) + (im-re) i) / 2
        z = GaussInt{(z.re + z.im) / 2, (z.im - z.re) / 2};
        ++v;
        if (z.is_zero())
            fail(Err::InternalInconsistency, "valuation loop hit zero");
    }
    return v;
}

namespace {

// unit part of a reduced modulo 2^K, as an exact Gaussian representative
GaussInt dyadic_unit_mod(const FieldElem& a, const Place& q, int K) {
    std::int64_t M = std::int64_t{1} << K;
    auto redc = [&](const GaussInt& z) {
        return GaussInt{((z.re % M) + M) % M, ((z.im % M) + M) % M};
    };
    auto gmul = [&](const GaussInt& x, const GaussInt& y) {
        return redc(x * y);
    };
    auto ginv = [&](const GaussInt& z) {
        std::int64_t n = ((z.norm() % M) + M) % M;
        std::int64_t ni = mod_inv(n, M); // norm is odd for units
        return redc(GaussInt{z.re * ni % M, -z.im % M * ni % M});
    };
    auto gpow = [&](GaussInt b, int e) {
        if (e < 0) {
            b = ginv(b);
            e = -e;
        }
        GaussInt r{1, 0};
        b = redc(b);
        while (e) {
            if (e & 1) r = gmul(r, b);
            b = gmul(b, b);
            e >>= 1;
        }
        return r;
    };
    GaussInt u = redc(GaussInt{1, 0}.times_i(a.unit_pow()));
    for (const auto& [v, e] : a.factorization()) {
        if (v == q) continue; // the uniformizer power was stripped upstream
        u = gmul(u, gpow(v.pi, e));
    }
    return u;
}

bool wild_test_qi(const FieldElem& unit_part, const Place& q, int n) {
    // precision m = 2*e*v_2(n)+1 at the place (1+i); representatives are
    // taken mod 2^K with 2K >= m, which decides v >= m exactly
    int m = n == 2 ? 5 : 9;
    int K = n == 2 ? 3 : 5;
    std::int64_t M = std::int64_t{1} << K;
    GaussInt u = dyadic_unit_mod(unit_part, q, K);
    for (std::int64_t x0 = 0; x0 < M; ++x0)
        for (std::int64_t x1 = (x0 + 1) % 2; x1 < M; x1 += 2) {
            GaussInt x{x0, x1};
            GaussInt xn{1, 0};
            for (int j = 0; j < n; ++j) {
                xn = xn * x;
                xn = GaussInt{xn.re % M, xn.im % M};
            }
            GaussInt w{(xn.re - u.re) % M, (xn.im - u.im) % M};
            if (dyadic_valuation(w, 2 * K) >= m) return true;
        }
    return false;
}

bool wild_test_q(const FieldElem& unit_part) {
    // squares of units in Z_2 are exactly 1 mod 8
    std::int64_t u = unit_part.positive() ? 1 : 7;
    for (const auto& [v, e] : unit_part.factorization()) {
        if (v.p == 2) continue; // stripped uniformizer
        u = u * mod_pow(v.p, e, 8) % 8;
    }
    for (std::int64_t x = 1; x < 8; x += 2)
        if ((x * x - u) % 8 == 0) return true;
    return false;
}

} // namespace

bool is_nth_power_local(const FieldElem& a, std::int64_t n, const Place& q) {
    if (n != 1 && n != 2 && n != 4)
        fail(Err::Precondition, "power test only for n in {1,2,4}");
    if (a.base() != q.base)
        fail(Err::BaseMismatch, "power test at a place of the wrong field");
    if (n == 4 && a.base() == BaseField::Q)
        fail(Err::Precondition, "quartic tests need i in the base field");
    if (n == 1) return true;
    if (q.kind == PlaceKind::Complex) return true;
    if (q.kind == PlaceKind::Real) return a.positive();

    int v = a.valuation(q);
    if (v % n != 0) return false;
    FieldElem pi = q.base == BaseField::Q ? FieldElem::from_integer(q.base, q.p)
                                          : FieldElem::from_gauss(q.pi);
    FieldElem u = a * pi.pow(-v);

    if (q.p != 2) { // tame
        ResidueField F(q);
        std::int64_t g = gcd_ll(n, F.size() - 1);
        return F.is_one(F.pow(F.residue_unit(u), (F.size() - 1) / g));
    }
    return q.base == BaseField::Q ? wild_test_q(u) : wild_test_qi(u, q, static_cast<int>(n));
}

} // namespace decforge
