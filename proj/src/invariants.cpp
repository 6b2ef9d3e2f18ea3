#include "dunkl/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace dunkl {

bool inv_lex_less(const ExpVec& a, const ExpVec& a_prime) {
    if (a.size() != a_prime.size())
        throw std::domain_error("inv_lex_less: length mismatch");
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != a_prime[i])
            return a[i] > a_prime[i];
    }
    return false;
}

GeneratorSet::GeneratorSet(std::vector<Poly> gens, std::vector<uint32_t> degrees)
    : gens_(std::move(gens)), degrees_(std::move(degrees)) {
    for (size_t i = 0; i + 1 < degrees_.size(); ++i)
        if (degrees_[i] >= degrees_[i + 1])
            throw std::domain_error("GeneratorSet: degrees must be strictly increasing");
    powers_.resize(gens_.size());
}

GeneratorSet GeneratorSet::elementary_symmetric(int n) {
    std::vector<Poly> gens;
    std::vector<uint32_t> degs;
    for (int k = 1; k <= n; ++k) {
        Poly ek(n);
        std::vector<int> idx(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            idx[static_cast<size_t>(i)] = i;
        while (true) {
            Mono m(static_cast<size_t>(n), 0);
            for (int i : idx)
                m[static_cast<size_t>(i)] = 1;
            ek.add_term(m, Scalar(1));
            int i = k - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++idx[static_cast<size_t>(i)];
            for (int t = i + 1; t < k; ++t)
                idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
        }
        gens.push_back(std::move(ek));
        degs.push_back(static_cast<uint32_t>(k));
    }
    return GeneratorSet(std::move(gens), std::move(degs));
}

GeneratorSet GeneratorSet::power_sums(int n) {
    std::vector<Poly> gens;
    std::vector<uint32_t> degs;
    for (int k = 1; k <= n; ++k) {
        Poly pk(n);
        for (int i = 0; i < n; ++i) {
            Mono m(static_cast<size_t>(n), 0);
            m[static_cast<size_t>(i)] = static_cast<uint32_t>(k);
            pk.add_term(m, Scalar(1));
        }
        gens.push_back(std::move(pk));
        degs.push_back(static_cast<uint32_t>(k));
    }
    return GeneratorSet(std::move(gens), std::move(degs));
}

GeneratorSet GeneratorSet::dihedral(const ReflectionGroup& g) {
    int m = g.parameter();
    Poly em(2);
    em.add_term(Mono{static_cast<uint32_t>(m), 0}, Scalar(1));
    em.add_term(Mono{0, static_cast<uint32_t>(m)}, Scalar(1));
    return GeneratorSet({g.e2(), em}, {2, static_cast<uint32_t>(m)});
}

GeneratorSet GeneratorSet::standard_for(const ReflectionGroup& g) {
    if (g.kind() == GroupKind::Symmetric)
        return elementary_symmetric(g.parameter());
    return dihedral(g);
}

uint32_t GeneratorSet::weighted_degree(const ExpVec& a) const {
    uint32_t d = 0;
    for (size_t i = 0; i < a.size(); ++i)
        d += a[i] * degrees_[i];
    return d;
}

Poly GeneratorSet::expand(const ExpVec& a) const {
    if (a.size() != gens_.size())
        throw std::domain_error("GeneratorSet::expand: wrong index length");
    Poly out = Poly::constant(gens_[0].arity(), Scalar(1));
    for (size_t i = 0; i < a.size(); ++i) {
        auto& pw = powers_[i];
        if (pw.empty())
            pw.push_back(Poly::constant(gens_[0].arity(), Scalar(1)));
        while (pw.size() <= a[i])
            pw.push_back(pw.back() * gens_[i]);
        if (a[i] > 0)
            out *= pw[a[i]];
    }
    return out;
}

std::vector<ExpVec> GeneratorSet::monomials_of_weight(uint32_t d) const {
    std::vector<ExpVec> out;
    ExpVec cur(gens_.size(), 0);
    auto rec = [&](auto&& self, size_t pos, uint32_t left) -> void {
        if (pos + 1 == cur.size()) {
            if (left % degrees_[pos] == 0) {
                cur[pos] = left / degrees_[pos];
                out.push_back(cur);
                cur[pos] = 0;
            }
            return;
        }
        for (uint32_t e = 0; e * degrees_[pos] <= left; ++e) {
            cur[pos] = e;
            self(self, pos + 1, left - e * degrees_[pos]);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [](const ExpVec& u, const ExpVec& v) {
        return inv_lex_less(v, u);  // u < v in the inverse-lex order
    });
    return out;
}

const Scalar& CanonicalInvariant::coeff(const ExpVec& a) const {
    for (const auto& [e, c] : expansion)
        if (e == a)
            return c;
    static const Scalar zero;
    return zero;
}

CanonicalInvariant canonical_invariant(const ExpVec& a, const GeneratorSet& gens, const DunklContext& ctx) {
    uint32_t d = gens.weighted_degree(a);
    std::vector<ExpVec> slice = gens.monomials_of_weight(d);
    std::vector<ExpVec> lower;
    for (const ExpVec& u : slice)
        if (inv_lex_less(a, u))
            lower.push_back(u);
    CanonicalInvariant inv;
    inv.index = a;
    Poly target = gens.expand(a);
    if (lower.empty()) {
        inv.expansion = {{a, Scalar(1)}};
        inv.polynomial = target;
        return inv;
    }
    // Gram system over the lower monomials; right-hand side against u^a
    std::vector<Poly> basis;
    for (const ExpVec& u : lower)
        basis.push_back(gens.expand(u));
    basis.push_back(target);
    Matrix g = ctx.gram(basis);
    size_t k = lower.size();
    Matrix gram_low(k, k);
    std::vector<Scalar> rhs(k);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j)
            gram_low.at(i, j) = g.at(i, j);
        rhs[i] = -g.at(i, k);
    }
    SolveResult sol = solve(gram_low, rhs);
    if (sol.status != SolveStatus::Ok)
        throw std::logic_error("canonical_invariant: singular Gram system");
    Poly acc = target;
    for (size_t i = 0; i < k; ++i) {
        if (!sol.x[i].is_zero())
            inv.expansion.push_back({lower[i], sol.x[i]});
        acc += basis[i].scaled(sol.x[i]);
    }
    inv.expansion.push_back({a, Scalar(1)});
    inv.polynomial = acc;
    return inv;
}

CanonicalInvariant elementary_invariant(uint32_t d, const GeneratorSet& gens, const DunklContext& ctx) {
    std::vector<ExpVec> slice = gens.monomials_of_weight(d);
    if (slice.empty())
        throw std::domain_error("elementary_invariant: no invariants in this degree");
    return canonical_invariant(slice.back(), gens, ctx);
}

Poly ebar(int k, int n) {
    GeneratorSet es = GeneratorSet::elementary_symmetric(n);
    Poly e1 = es.gens()[0];
    Poly shift = e1.scaled(Scalar(Rational(-1, n)));
    std::vector<Poly> images;
    for (int i = 0; i < n; ++i)
        images.push_back(Poly::variable(n, i) + shift);
    if (k == 0)
        return Poly::constant(n, Scalar(1));
    return es.gens()[static_cast<size_t>(k - 1)].substituted(images);
}

namespace {

// Delta(z_{i} : i in idxs) expanded as signed exponent assignments:
// prod_{a<b} (z_a - z_b) = sum over permutations sigma of sgn(sigma) *
// prod z_{idxs[t]}^{r-1-sigma(t)}.
void vandermonde_terms(const std::vector<int>& idxs, int arity,
                       const std::function<void(const Mono&, bool)>& emit) {
    size_t r = idxs.size();
    std::vector<uint32_t> perm(r);
    for (size_t i = 0; i < r; ++i)
        perm[i] = static_cast<uint32_t>(i);
    do {
        // parity of perm
        int inversions = 0;
        for (size_t i = 0; i < r; ++i)
            for (size_t j = i + 1; j < r; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        Mono m(static_cast<size_t>(arity), 0);
        for (size_t t = 0; t < r; ++t)
            m[static_cast<size_t>(idxs[t])] = static_cast<uint32_t>(r - 1) - perm[t];
        emit(m, inversions % 2 == 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

Poly vandermonde_poly(const std::vector<int>& idxs, int arity) {
    Poly out(arity);
    vandermonde_terms(idxs, arity, [&](const Mono& m, bool plus) {
        out.add_term(m, Scalar(Rational(plus ? 1 : -1)));
    });
    return out;
}

}  // namespace

Poly iwasaki_mu(int k, int n, const DunklContext& ctx) {
    if (k < 2 || k > n)
        throw std::domain_error("iwasaki_mu: need 2 <= k <= n");
    std::vector<int> block(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        block[static_cast<size_t>(i)] = i;
    Poly delta = vandermonde_poly(block, n);
    Poly out(n);
    for (int s = 1; s <= k; ++s) {
        std::vector<int> rest;
        for (int i = 0; i < k; ++i)
            if (i != s - 1)
                rest.push_back(i);
        // operator Vandermonde applied to delta, sharing prefixes
        std::vector<Mono> monos;
        std::vector<Scalar> signs;
        vandermonde_terms(rest, n, [&](const Mono& m, bool plus) {
            monos.push_back(m);
            signs.push_back(Scalar(Rational(plus ? 1 : -1)));
        });
        Poly op_poly(n);
        for (size_t t = 0; t < monos.size(); ++t)
            op_poly.add_term(monos[t], signs[t]);
        Poly applied = ctx.nabla_poly(op_poly, delta);
        Poly term = Poly::variable(n, s - 1) * applied;
        out += term.scaled(Scalar(Rational(s % 2 == 0 ? 1 : -1)));
    }
    return out;
}

Poly iwasaki_elementary(int k, int n, const DunklContext& ctx) {
    return ctx.group().coset_orbit_sum(k, iwasaki_mu(k, n, ctx));
}

Poly limit_at(const CanonicalInvariant& inv, const std::vector<Rational>& point, const GeneratorSet& gens) {
    Poly out(gens.gens()[0].arity());
    for (const auto& [e, c] : inv.expansion) {
        Cyclotomic v = c.eval(point);  // PoleError propagates
        out += gens.expand(e).scaled(Scalar(v));
    }
    return out;
}

std::vector<Poly> quasiharmonic_space(uint32_t d, uint32_t bound, const GeneratorSet& gens,
                                      const DunklContext& ctx) {
    std::vector<ExpVec> dom = gens.monomials_of_weight(d);
    std::vector<Poly> dom_polys;
    for (const ExpVec& u : dom)
        dom_polys.push_back(gens.expand(u));
    // conditions: nabla_P f = 0 for invariant monomials P, 0 < deg P < bound
    std::vector<Poly> conditions;
    for (uint32_t dp = 1; dp < bound; ++dp)
        for (const ExpVec& u : gens.monomials_of_weight(dp))
            if (gens.weighted_degree(u) > 0)
                conditions.push_back(gens.expand(u));
    // rows: coordinates of nabla_P(u^a) in the full monomial slice
    std::vector<std::vector<Poly>> images(conditions.size());
    size_t rows = 0;
    std::vector<GradedSlice> slices;
    for (size_t ci = 0; ci < conditions.size(); ++ci) {
        const Poly& P = conditions[ci];
        Poly dualP = ctx.group().dualize(P);
        for (const Poly& f : dom_polys)
            images[ci].push_back(ctx.nabla_poly(dualP, f));
        uint32_t deg_out = d - P.degree();
        slices.push_back(GradedSlice::of(ctx.arity(), deg_out));
        rows += slices.back().basis.size();
    }
    Matrix m(rows, dom.size());
    size_t row0 = 0;
    for (size_t ci = 0; ci < conditions.size(); ++ci) {
        const GradedSlice& sl = slices[ci];
        for (size_t j = 0; j < dom.size(); ++j)
            for (const auto& [mo, co] : images[ci][j].terms()) {
                auto idx = sl.index_of(mo);
                if (!idx)
                    throw std::logic_error("quasiharmonic_space: image outside expected slice");
                m.at(row0 + *idx, j) = co;
            }
        row0 += sl.basis.size();
    }
    std::vector<Poly> out;
    for (const auto& v : kernel_basis(m)) {
        Poly f(ctx.arity());
        for (size_t j = 0; j < v.size(); ++j)
            f += dom_polys[j].scaled(v[j]);
        out.push_back(f);
    }
    return out;
}

std::optional<Scalar> proportionality_ratio(const Poly& f, const Poly& g) {
    if (f.is_zero())
        return std::nullopt;
    const auto& [m0, c0] = *f.terms().begin();
    Scalar ratio = g.coeff(m0) / c0;
    if (g != f.scaled(ratio))
        return std::nullopt;
    return ratio;
}

}  // namespace dunkl
