#include "decforge/group.hpp"

#include "decforge/errors.hpp"

#include <algorithm>

namespace decforge {

namespace {
constexpr std::int64_t kOrderCap = 1 << 20;
}

FinAbGroup::FinAbGroup(const std::vector<std::int64_t>& factors) {
    __int128 ord = 1;
    ZMat diag;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 1)
            fail(Err::Precondition, "group factor must be >= 1");
        ord *= factors[i];
        if (ord > kOrderCap) fail(Err::GroupTooLarge, "group order above 2^20");
        ZRow row(factors.size(), 0);
        row[i] = factors[i];
        diag.push_back(std::move(row));
    }
    for (std::int64_t d : smith_invariants(std::move(diag)))
        if (d > 1) factors_.push_back(d);
    std::sort(factors_.rbegin(), factors_.rend());
}

std::int64_t FinAbGroup::order() const {
    std::int64_t n = 1;
    for (std::int64_t t : factors_) n *= t;
    return n;
}

Elem FinAbGroup::reduce(Elem g) const {
    if (g.size() != factors_.size())
        fail(Err::Precondition, "element rank does not match group");
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] %= factors_[i];
        if (g[i] < 0) g[i] += factors_[i];
    }
    return g;
}

Elem FinAbGroup::add(const Elem& a, const Elem& b) const {
    Elem c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return reduce(std::move(c));
}

Elem FinAbGroup::neg(const Elem& a) const {
    Elem c(a);
    for (auto& x : c) x = -x;
    return reduce(std::move(c));
}

std::int64_t FinAbGroup::element_order(const Elem& g) const {
    Elem r = reduce(g);
    std::int64_t o = 1;
    for (std::size_t i = 0; i < r.size(); ++i)
        o = lcm_ll(o, factors_[i] / gcd_ll(factors_[i], r[i]));
    return o;
}

std::vector<Elem> FinAbGroup::elements() const {
    std::vector<Elem> out{zero()};
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::vector<Elem> next;
        next.reserve(out.size() * static_cast<std::size_t>(factors_[i]));
        for (const Elem& e : out)
            for (std::int64_t v = 0; v < factors_[i]; ++v) {
                Elem e2 = e;
                e2[i] = v;
                next.push_back(std::move(e2));
            }
        out = std::move(next);
    }
    return out;
}

Subgroup::Subgroup(FinAbGroup parent, const std::vector<Elem>& gens)
    : parent_(std::move(parent)) {
    std::size_t n = parent_.rank();
    ZMat m;
    for (const Elem& g : gens) m.push_back(parent_.reduce(g));
    for (std::size_t i = 0; i < n; ++i) {
        ZRow row(n, 0);
        row[i] = parent_.factors()[i];
        m.push_back(std::move(row));
    }
    lat_ = hnf_rows(std::move(m));
}

Subgroup Subgroup::trivial(const FinAbGroup& g) { return Subgroup(g, {}); }

Subgroup Subgroup::full(const FinAbGroup& g) {
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        Elem e = g.zero();
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return Subgroup(g, gens);
}

std::int64_t Subgroup::order() const {
    // |M / diag(t)| = prod(t_i) / det(M)
    std::int64_t det = 1;
    for (std::size_t i = 0; i < lat_.size(); ++i) det *= lat_[i][i];
    return parent_.order() / det;
}

std::vector<std::int64_t> Subgroup::invariant_factors() const {
    // Write diag(t) = C * M; then H = M/diag(t) ~ Z^n / rowspace(C).
    std::size_t n = parent_.rank();
    ZMat c;
    for (std::size_t i = 0; i < n; ++i) {
        ZRow v(n, 0);
        v[i] = parent_.factors()[i];
        ZRow x;
        if (!hnf_solve(lat_, v, x))
            fail(Err::InternalInconsistency, "subgroup lattice misses diag");
        c.push_back(std::move(x));
    }
    std::vector<std::int64_t> inv;
    for (std::int64_t d : smith_invariants(std::move(c)))
        if (d > 1) inv.push_back(d);
    std::sort(inv.rbegin(), inv.rend());
    return inv;
}

std::int64_t Subgroup::exponent() const {
    auto inv = invariant_factors();
    return inv.empty() ? 1 : inv[0];
}

bool Subgroup::contains(const Elem& g) const {
    return hnf_contains(lat_, parent_.reduce(g));
}

std::vector<Elem> Subgroup::elements() const {
    // closure of the generators; orders here are small
    std::vector<Elem> gens = canonical_generators();
    std::vector<Elem> out{parent_.zero()};
    std::vector<Elem> frontier = out;
    auto seen = [&](const Elem& e) {
        return std::find(out.begin(), out.end(), e) != out.end();
    };
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (const Elem& e : frontier)
            for (const Elem& g : gens) {
                Elem s = parent_.add(e, g);
                if (!seen(s)) {
                    out.push_back(s);
                    next.push_back(s);
                }
            }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Elem> Subgroup::canonical_generators() const {
    std::vector<Elem> gens;
    for (const ZRow& row : lat_) {
        Elem r = parent_.reduce(row);
        if (std::any_of(r.begin(), r.end(),
                        [](std::int64_t v) { return v != 0; }))
            gens.push_back(std::move(r));
    }
    return gens;
}

Elem Subgroup::canonical_generator() const {
    std::int64_t n = order();
    for (const Elem& e : elements()) // sorted lexicographically
        if (parent_.element_order(e) == n) return e;
    fail(Err::Precondition, "subgroup is not cyclic");
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
    if (!(a.parent() == b.parent()))
        fail(Err::Precondition, "join: different parent groups");
    std::vector<Elem> gens = a.canonical_generators();
    for (const Elem& g : b.canonical_generators()) gens.push_back(g);
    return Subgroup(a.parent(), gens);
}

Subgroup meet(const Subgroup& a, const Subgroup& b) {
    if (!(a.parent() == b.parent()))
        fail(Err::Precondition, "meet: different parent groups");
    // x in A cap B  <=>  x = u*A = v*B; left kernel of [A; -B] gives (u, v).
    const ZMat& ma = a.lattice();
    const ZMat& mb = b.lattice();
    ZMat stacked = ma;
    for (const ZRow& r : mb) {
        ZRow neg(r);
        for (auto& v : neg) v = -v;
        stacked.push_back(std::move(neg));
    }
    ZMat ker = left_kernel(stacked);
    std::vector<Elem> gens;
    for (const ZRow& uv : ker) {
        Elem x(a.parent().rank(), 0);
        for (std::size_t i = 0; i < ma.size(); ++i)
            for (std::size_t j = 0; j < x.size(); ++j)
                x[j] += uv[i] * ma[i][j];
        gens.push_back(a.parent().reduce(std::move(x)));
    }
    return Subgroup(a.parent(), gens);
}

std::vector<std::int64_t> quotient_invariant_factors(const Subgroup& h) {
    // G/H = Z^n / M
    std::vector<std::int64_t> inv;
    for (std::int64_t d : smith_invariants(h.lattice()))
        if (d > 1) inv.push_back(d);
    std::sort(inv.rbegin(), inv.rend());
    return inv;
}

Character::Character(FinAbGroup g, std::vector<QZ> vals)
    : parent(std::move(g)), values(std::move(vals)) {
    if (values.size() != parent.rank())
        fail(Err::Precondition, "character value count must match rank");
    for (std::size_t i = 0; i < values.size(); ++i)
        if (parent.factors()[i] % values[i].order() != 0)
            fail(Err::Precondition,
                 "character value order must divide the invariant factor");
}

Character Character::from_tuple(const FinAbGroup& g, const Elem& a) {
    Elem r = g.reduce(a);
    std::vector<QZ> vals;
    for (std::size_t i = 0; i < r.size(); ++i)
        vals.emplace_back(r[i], g.factors()[i]);
    return Character(g, std::move(vals));
}

Elem Character::tuple() const {
    Elem a(parent.rank(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = values[i].num * (parent.factors()[i] / values[i].den);
    return a;
}

QZ Character::eval(const Elem& g) const {
    Elem r = parent.reduce(g);
    QZ s;
    for (std::size_t i = 0; i < r.size(); ++i) s = s + values[i].times(r[i]);
    return s;
}

std::int64_t Character::order() const {
    std::int64_t o = 1;
    for (const QZ& v : values) o = lcm_ll(o, v.order());
    return o;
}

Subgroup perp(const Subgroup& h) {
    const FinAbGroup& g = h.parent();
    std::size_t n = g.rank();
    if (n == 0) return Subgroup::full(g);
    std::int64_t t = g.exponent();
    const ZMat& m = h.lattice();
    std::size_t kk = m.size();
    // a in H^perp  <=>  for each lattice row m_k:
    //   sum_i a_i m_k[i] (t/t_i) == 0 (mod t);
    // stack [B; t*I] and project its left kernel onto the a-part.
    ZMat s(n + kk, ZRow(kk, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < kk; ++k)
            s[i][k] = (m[k][i] % t) * (t / g.factors()[i]) % t;
    for (std::size_t k = 0; k < kk; ++k) s[n + k][k] = t;
    std::vector<Elem> gens;
    for (const ZRow& row : left_kernel(s))
        gens.push_back(g.reduce(Elem(row.begin(),
                                     row.begin() + static_cast<long>(n))));
    return Subgroup(g, gens);
}

PrimaryDecomposition primary_decomposition_with_complement(
    const FinAbGroup& g) {
    if (g.rank() == 0)
        fail(Err::Precondition, "decomposition requires a nontrivial group");
    PrimaryDecomposition out{{}, Subgroup::trivial(g)};
    Elem e1 = g.zero();
    e1[0] = 1;
    out.h.emplace_back(g, std::vector<Elem>{e1});
    std::vector<Elem> dgens;
    for (std::size_t i = 1; i < g.rank(); ++i) {
        Elem ei = g.zero();
        ei[i] = 1;
        Elem diff = g.add(e1, g.neg(ei));
        out.h.emplace_back(g, std::vector<Elem>{diff});
        dgens.push_back(std::move(ei));
    }
    out.d = Subgroup(g, dgens);
    return out;
}

PerpDecomposition perp_decomposition(const FinAbGroup& g) {
    // G^ shares the invariant factors of G, so build the primary
    // decomposition there and pull back through the annihilator.
    PrimaryDecomposition pd = primary_decomposition_with_complement(g);
    PerpDecomposition out{{}, perp(pd.d)};
    for (const Subgroup& hi : pd.h) out.k.push_back(perp(hi));
    return out;
}

std::int64_t lcm_of_cyclic_quotients(const FinAbGroup& g,
                                     const std::vector<Subgroup>& ks) {
    if (ks.empty()) fail(Err::Precondition, "need at least one subgroup");
    Subgroup common = ks[0];
    std::int64_t l = 1;
    for (const Subgroup& k : ks) {
        if (!(k.parent() == g))
            fail(Err::Precondition, "subgroup of a different group");
        auto q = quotient_invariant_factors(k);
        if (q.size() > 1)
            fail(Err::Precondition, "quotient by subgroup is not cyclic");
        l = lcm_ll(l, q.empty() ? 1 : q[0]);
        common = meet(common, k);
    }
    if (common.order() != 1)
        fail(Err::Precondition, "subgroups do not intersect trivially");
    if (l != g.exponent())
        fail(Err::InternalInconsistency, "cyclic quotient lcm != exponent");
    return l;
}

} // namespace decforge
