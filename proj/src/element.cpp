#include "decforge/element.hpp"

#include "decforge/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace decforge {

namespace {

// trial-division factorization of a positive 64-bit integer
std::vector<std::pair<std::int64_t, int>> factor_int(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

} // namespace

void FieldElem::push(const Place& q, int e) {
    if (e == 0) return;
    auto it = fac_.find(q);
    if (it == fac_.end()) {
        fac_.emplace(q, e);
    } else {
        it->second += e;
        if (it->second == 0) fac_.erase(it);
    }
}

FieldElem FieldElem::one(BaseField base) {
    FieldElem a;
    a.base_ = base;
    return a;
}

FieldElem FieldElem::from_integer(BaseField base, std::int64_t n) {
    if (n == 0) fail(Err::Precondition, "field elements must be nonzero");
    FieldElem a = one(base);
    if (n < 0) {
        a.unit_ = 2; // -1 = i^2
        n = -n;
    }
    for (auto [p, e] : factor_int(n)) {
        if (base == BaseField::Q) {
            a.push(Place::rational(p), e);
            continue;
        }
        if (p == 2) {
            // 2 = -i (1+i)^2
            a.unit_ = (a.unit_ + 3 * e) % 4;
            a.push(Place::gaussian({1, 1}), 2 * e);
        } else if (p % 4 == 1) {
            GaussInt ab = two_squares(p);
            a.push(Place::gaussian(ab), e);
            a.push(Place::gaussian(ab.conj()), e);
        } else {
            a.push(Place::gaussian({p, 0}), e);
        }
    }
    return a;
}

FieldElem FieldElem::from_rational(BaseField base, std::int64_t num,
                                   std::int64_t den) {
    return from_integer(base, num) * from_integer(base, den).inverse();
}

FieldElem FieldElem::from_gauss(const GaussInt& z) {
    if (z.is_zero()) fail(Err::Precondition, "field elements must be nonzero");
    FieldElem a = one(BaseField::Qi);
    GaussInt w = z;
    for (auto [p, e] : factor_int(w.norm())) {
        std::vector<GaussInt> divisors;
        if (p == 2) {
            divisors.push_back({1, 1});
        } else if (p % 4 == 1) {
            GaussInt ab = two_squares(p);
            divisors.push_back(ab);
            divisors.push_back(ab.conj());
        } else {
            divisors.push_back({p, 0});
        }
        (void)e;
        for (const GaussInt& d : divisors) {
            int cnt = 0;
            GaussInt quot;
            while (w.divide_exact(d, quot)) {
                w = quot;
                ++cnt;
            }
            if (cnt) a.push(Place::gaussian(d), cnt);
        }
    }
    if (!w.is_unit())
        fail(Err::InternalInconsistency, "incomplete factorization of " + z.str());
    int k = 0;
    GaussInt u{1, 0};
    while (!(u == w)) {
        u = u.times_i(1);
        if (++k > 3)
            fail(Err::InternalInconsistency, "unit not a power of i");
    }
    a.unit_ = k;
    return a;
}

FieldElem FieldElem::parse(BaseField base, const std::string& s) {
    auto strip = [](std::string t) {
        if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
            t = t.substr(1, t.size() - 2);
        if (t.empty()) fail(Err::Precondition, "empty field element");
        return t;
    };
    auto term = [&](const std::string& t) {
        if (base == BaseField::Q) {
            std::size_t pos = 0;
            std::int64_t v = std::stoll(t, &pos);
            if (pos != t.size())
                fail(Err::Precondition, "cannot parse element of Q: " + t);
            return from_integer(base, v);
        }
        return from_gauss(GaussInt::parse(t));
    };
    // split "num/den" at the top level (not inside parentheses)
    int depth = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] == '(') ++depth;
        else if (s[j] == ')') --depth;
        else if (s[j] == '/' && depth == 0)
            return term(strip(s.substr(0, j))) *
                   term(strip(s.substr(j + 1))).inverse();
    }
    return term(strip(s));
}

std::vector<Place> FieldElem::support() const {
    std::vector<Place> out;
    out.reserve(fac_.size());
    for (const auto& [q, e] : fac_) out.push_back(q);
    return out;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (base_ != o.base_)
        fail(Err::BaseMismatch, "cannot multiply elements of different bases");
    FieldElem a = *this;
    a.unit_ = (unit_ + o.unit_) % 4;
    for (const auto& [q, e] : o.fac_) a.push(q, e);
    return a;
}

FieldElem FieldElem::inverse() const { return pow(-1); }

FieldElem FieldElem::pow(std::int64_t k) const {
    FieldElem a = one(base_);
    a.unit_ = static_cast<int>((((unit_ * k) % 4) + 4) % 4);
    for (const auto& [q, e] : fac_) {
        __int128 ee = static_cast<__int128>(e) * k;
        if (ee > INT32_MAX || ee < INT32_MIN)
            fail(Err::Precondition, "exponent overflow in pow");
        a.push(q, static_cast<int>(ee));
    }
    return a;
}

int FieldElem::valuation(const Place& q) const {
    if (!q.finite())
        fail(Err::Precondition, "valuation requires a finite place");
    if (q.base != base_)
        fail(Err::BaseMismatch, "valuation at a place of the wrong field");
    auto it = fac_.find(q);
    return it == fac_.end() ? 0 : it->second;
}

bool FieldElem::positive() const {
    if (base_ != BaseField::Q)
        fail(Err::Precondition, "sign is only defined over Q");
    return unit_ == 0;
}

bool FieldElem::is_nth_power_global(std::int64_t n) const {
    if (n != 1 && n != 2 && n != 4)
        fail(Err::Precondition, "power test only for n in {1,2,4}");
    if (n == 1) return true;
    for (const auto& [q, e] : fac_)
        if (e % n != 0) return false;
    // unit part: over Q the unit is a sign; over Q(i) the n-th powers of
    // units are the i^(n k), so i^u works iff gcd(n,4) divides u
    if (base_ == BaseField::Q) return unit_ == 0;
    return unit_ % (n == 4 ? 4 : 2) == 0;
}

std::string FieldElem::str() const {
    // best effort: multiply out numerator and denominator; fall back to
    // the factored form if that overflows
    try {
        GaussInt num{1, 0}, den{1, 0};
        num = num.times_i(unit_);
        for (const auto& [q, e] : fac_) {
            GaussInt base_pi = base_ == BaseField::Q ? GaussInt{q.p, 0} : q.pi;
            for (int j = 0; j < std::abs(e); ++j) {
                if (e > 0) num = num * base_pi;
                else den = den * base_pi;
            }
        }
        if (base_ == BaseField::Qi && den.im != 0) {
            // clear i from the denominator
            num = num * den.conj();
            GaussInt d2{den.norm(), 0};
            den = d2;
        }
        std::string ns = num.str();
        if (den == GaussInt{1, 0}) return ns;
        if (num.im != 0) ns = "(" + ns + ")";
        return ns + "/" + den.str();
    } catch (const DomainError&) {
        std::string out = unit_ ? "i^" + std::to_string(unit_) : "";
        for (const auto& [q, e] : fac_) {
            if (!out.empty()) out += "*";
            out += "(" + q.str() + ")^" + std::to_string(e);
        }
        return out.empty() ? "1" : out;
    }
}

bool FieldElem::operator<(const FieldElem& o) const {
    if (base_ != o.base_) return base_ < o.base_;
    if (unit_ != o.unit_) return unit_ < o.unit_;
    return std::lexicographical_compare(fac_.begin(), fac_.end(),
                                        o.fac_.begin(), o.fac_.end());
}

} // namespace decforge
