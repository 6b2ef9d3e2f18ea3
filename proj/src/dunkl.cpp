#include "dunkl/dunkl.hpp"

#include <stdexcept>

namespace dunkl {

DunklContext::DunklContext(ReflectionGroup g, MultiplicityFunction m)
    : group_(std::move(g)), mult_(std::move(m)) {
    if (mult_.values.size() != group_.classes().size())
        throw std::domain_error("DunklContext: multiplicity / class count mismatch");
    field_.cyclo_order = group_.cyclo_order();
    field_.params = mult_.param_names;
    laplacian_dual_ = group_.dualize(group_.e2());
    if (group_.kind() == GroupKind::Symmetric) {
        refl_by_dir_.resize(static_cast<size_t>(group_.dim()));
        for (size_t r = 0; r < group_.reflections().size(); ++r) {
            const Reflection& s = group_.reflections()[r];
            refl_by_dir_[static_cast<size_t>(s.a)].push_back(static_cast<int>(r));
            refl_by_dir_[static_cast<size_t>(s.b)].push_back(static_cast<int>(r));
        }
    }
}

Scalar DunklContext::h_c() const {
    Scalar sum;
    for (size_t k = 0; k < group_.classes().size(); ++k) {
        long size = static_cast<long>(group_.classes()[k].size());
        sum += mult_.values[k] * Scalar(Rational(size));
    }
    return sum * Scalar(Rational(2, group_.dim()));
}

Poly DunklContext::divided_difference(const Reflection& s, const Poly& f) const {
    Poly out(f.arity());
    if (group_.kind() == GroupKind::Symmetric) {
        size_t a = static_cast<size_t>(s.a), b = static_cast<size_t>(s.b);
        Mono mm(f.arity() >= 0 ? static_cast<size_t>(f.arity()) : 0);
        for (const auto& [mo, co] : f.terms()) {
            uint32_t p = mo[a], q = mo[b];
            if (p == q)
                continue;
            uint32_t lo = std::min(p, q), d = std::max(p, q) - lo;
            Scalar c = (p > q) ? co : -co;
            mm = mo;
            for (uint32_t t = 0; t < d; ++t) {
                mm[a] = lo + (d - 1 - t);
                mm[b] = lo + t;
                out.add_term(mm, c);
            }
        }
        return out;
    }
    // dihedral: root z - zeta^j w with j = s.a
    long j = s.a;
    uint32_t order = group_.cyclo_order();
    for (const auto& [mo, co] : f.terms()) {
        uint32_t p = mo[0], q = mo[1];
        if (p == q)
            continue;
        uint32_t lo = std::min(p, q), d = std::max(p, q) - lo;
        Scalar base = (p > q) ? co : -(co * Scalar(Cyclotomic::zeta_pow(order, -j * static_cast<long>(d))));
        for (uint32_t t = 0; t < d; ++t) {
            Mono mm{lo + (d - 1 - t), lo + t};
            out.add_term(mm, base * Scalar(Cyclotomic::zeta_pow(order, j * static_cast<long>(t))));
        }
    }
    return out;
}

Poly DunklContext::dunkl_apply(int dir, const Poly& f) const {
    if (f.arity() != group_.dim())
        throw std::domain_error("dunkl_apply: arity mismatch");
    Poly out = f.derivative(dir);
    if (group_.kind() == GroupKind::Symmetric) {
        for (int ri : refl_by_dir_[static_cast<size_t>(dir)]) {
            const Reflection& s = group_.reflections()[static_cast<size_t>(ri)];
            Scalar pair = (dir == s.a) ? Scalar(1) : Scalar(-1);
            const Scalar& cs = class_value(s.class_index);
            out -= divided_difference(s, f).scaled(cs * pair);
        }
        return out;
    }
    uint32_t order = group_.cyclo_order();
    for (const Reflection& s : group_.reflections()) {
        // <y_z, alpha_j> = 1, <y_w, alpha_j> = -zeta^j
        Scalar pair = (dir == 0) ? Scalar(1) : -Scalar(Cyclotomic::zeta_pow(order, s.a));
        const Scalar& cs = class_value(s.class_index);
        Poly dd = divided_difference(s, f);
        if (!dd.is_zero())
            out -= dd.scaled(cs * pair);
    }
    return out;
}

namespace {

// Shared-prefix descent over a set of operator monomials: one Dunkl
// application per distinct prefix. `sink(index, poly)` receives the result
// for monos[index].
void nabla_descent(const DunklContext& ctx, const std::vector<Mono>& monos,
                   const std::vector<size_t>& subset, size_t var, const Poly& cur,
                   const std::function<void(size_t, const Poly&)>& sink) {
    if (var == static_cast<size_t>(ctx.arity())) {
        for (size_t idx : subset)
            sink(idx, cur);
        return;
    }
    // group by exponent at `var`
    std::map<uint32_t, std::vector<size_t>> groups;
    for (size_t idx : subset)
        groups[monos[idx][var]].push_back(idx);
    Poly work = cur;
    uint32_t applied = 0;
    for (const auto& [e, sub] : groups) {
        while (applied < e) {
            work = ctx.dunkl_apply(static_cast<int>(var), work);
            ++applied;
        }
        nabla_descent(ctx, monos, sub, var + 1, work, sink);
    }
}

}  // namespace

std::vector<Scalar> DunklContext::moments(const Poly& g, const std::vector<Mono>& monos) const {
    std::vector<Scalar> out(monos.size());
    std::vector<size_t> all(monos.size());
    for (size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    nabla_descent(*this, monos, all, 0, g,
                  [&](size_t idx, const Poly& p) { out[idx] = p.constant_term(); });
    return out;
}

Poly DunklContext::nabla_poly(const Poly& p, const Poly& f) const {
    Poly out(f.arity());
    std::vector<Mono> monos;
    std::vector<Scalar> coeffs;
    for (const auto& [mo, co] : p.terms()) {
        monos.push_back(mo);
        coeffs.push_back(co);
    }
    std::vector<size_t> all(monos.size());
    for (size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    nabla_descent(*this, monos, all, 0, f,
                  [&](size_t idx, const Poly& r) { out += r.scaled(coeffs[idx]); });
    return out;
}

Poly DunklContext::laplacian(const Poly& f) const {
    return nabla_poly(laplacian_dual_, f);
}

Scalar DunklContext::pairing(const Poly& f, const Poly& g) const {
    if (f.arity() != g.arity())
        throw std::domain_error("pairing: arity mismatch");
    Poly fd = group_.dualize(f);
    std::vector<Mono> monos;
    std::vector<Scalar> coeffs;
    for (const auto& [mo, co] : fd.terms()) {
        monos.push_back(mo);
        coeffs.push_back(co);
    }
    std::vector<Scalar> vals = moments(g, monos);
    Scalar acc;
    for (size_t i = 0; i < vals.size(); ++i)
        acc += coeffs[i] * vals[i];
    return acc;
}

Matrix DunklContext::gram(const std::vector<Poly>& basis) const {
    size_t n = basis.size();
    Matrix gm(n, n);
    for (size_t j = 0; j < n; ++j) {
        // one descent per column: union of dual monomials of rows i <= j
        std::vector<Mono> monos;
        std::vector<std::vector<std::pair<size_t, Scalar>>> row_terms(j + 1);
        std::map<Mono, size_t, GradedLexDesc> index;
        for (size_t i = 0; i <= j; ++i) {
            Poly fd = group_.dualize(basis[i]);
            for (const auto& [mo, co] : fd.terms()) {
                auto [it, fresh] = index.try_emplace(mo, monos.size());
                if (fresh)
                    monos.push_back(mo);
                row_terms[i].push_back({it->second, co});
            }
        }
        std::vector<Scalar> vals = moments(basis[j], monos);
        for (size_t i = 0; i <= j; ++i) {
            Scalar acc;
            for (const auto& [idx, co] : row_terms[i])
                acc += co * vals[idx];
            gm.at(i, j) = acc;
            if (i != j)
                gm.at(j, i) = acc;
        }
    }
    return gm;
}

Poly DunklContext::berest_nabla(const Poly& p, const Poly& f) const {
    if (!p.is_homogeneous())
        throw std::domain_error("berest_nabla: p must be homogeneous");
    uint32_t d = p.degree();
    std::vector<Poly> lkf{f};  // L^k f
    for (uint32_t k = 1; k <= d; ++k)
        lkf.push_back(laplacian(lkf.back()));
    Poly acc(f.arity());
    Rational kfact(1), dkfact(1);
    for (uint32_t k = 0; k <= d; ++k) {
        Poly term = p * lkf[k];
        for (uint32_t i = 0; i < d - k; ++i)
            term = laplacian(term);
        // (-1)^k / (k! (d-k)!)
        Rational fk(1), fdk(1);
        for (uint32_t i = 2; i <= k; ++i)
            fk *= Rational(static_cast<long>(i));
        for (uint32_t i = 2; i <= d - k; ++i)
            fdk *= Rational(static_cast<long>(i));
        Rational coef = Rational(k % 2 == 0 ? 1 : -1) / (fk * fdk);
        acc += term.scaled(Scalar(coef));
    }
    Rational half_pow(1);
    for (uint32_t i = 0; i < d; ++i)
        half_pow *= Rational(1, 2);
    return acc.scaled(Scalar(half_pow));
}

HarmonicModel::HarmonicModel(const DunklContext& ctx) : ctx_(&ctx) {
    const ReflectionGroup& g = ctx.group();
    if (g.kind() == GroupKind::Dihedral) {
        reduced_arity_ = 2;
        ell_ = 2;
        h_c_ = ctx.h_c();
        e2_reduced_ = g.e2();
        e2_ambient_ = e2_reduced_;
        return;
    }
    int n = g.parameter();
    reduced_arity_ = n - 1;
    ell_ = n - 1;
    // effective h_c on the reflection representation: (2/(n-1)) * #refl * c = n c
    h_c_ = ctx.class_value(0) * Scalar(Rational(n));
    // embed: y_i -> x_i - e1/n
    Poly e1(n);
    for (int i = 0; i < n; ++i)
        e1 += Poly::variable(n, i);
    Poly shift = e1.scaled(Scalar(Rational(-1, static_cast<long>(n))));
    for (int i = 0; i + 1 < n; ++i)
        embed_images_.push_back(Poly::variable(n, i) + shift);
    // reduce: x_i -> y_i (i < n-1), x_n -> -(y_1 + ... + y_{n-1})
    Poly last(n - 1);
    for (int i = 0; i + 1 < n; ++i) {
        reduce_images_.push_back(Poly::variable(n - 1, i));
        last -= Poly::variable(n - 1, i);
    }
    reduce_images_.push_back(last);
    // e2 of the model: sum_i (x_i - e1/n)^2
    Poly centered_sq(n);
    for (int i = 0; i < n; ++i) {
        Poly xi = Poly::variable(n, i) + shift;
        centered_sq += xi * xi;
    }
    e2_ambient_ = centered_sq;
    e2_reduced_ = reduce(centered_sq);
}

Poly HarmonicModel::embed(const Poly& reduced) const {
    if (embed_images_.empty())
        return reduced;
    return reduced.substituted(embed_images_);
}

Poly HarmonicModel::reduce(const Poly& ambient) const {
    if (reduce_images_.empty())
        return ambient;
    return ambient.substituted(reduce_images_);
}

Poly HarmonicModel::apply_E(const Poly& reduced) const {
    return e2_reduced_ * reduced;
}

Poly HarmonicModel::apply_L(const Poly& reduced) const {
    return reduce(ctx_->laplacian(embed(reduced)));
}

Scalar HarmonicModel::pairing(const Poly& f_reduced, const Poly& g_reduced) const {
    return ctx_->pairing(embed(f_reduced), embed(g_reduced));
}

Scalar HarmonicModel::frobenius_factor(uint32_t d, uint32_t k) const {
    Scalar half_ell = Scalar(Rational(ell_)) * (Scalar(1) - h_c_) * Scalar(Rational(1, 2));
    Rational pre(1);
    for (uint32_t i = 0; i < d; ++i)
        pre *= Rational(2);
    for (uint32_t i = 0; i < k; ++i)
        pre *= Rational(4);
    for (uint32_t i = 1; i <= k; ++i)
        pre *= Rational(static_cast<long>(i));
    Scalar acc(pre);
    for (uint32_t r = 0; r < d + k; ++r)
        acc *= half_ell + Scalar(Rational(static_cast<long>(r)));
    return acc;
}

Scalar HarmonicModel::phi(const Poly& reduced) const {
    Scalar acc;
    for (uint32_t deg : reduced.degrees_present()) {
        if (deg % 2 == 1)
            continue;
        Poly comp = reduced.homogeneous_component(deg);
        uint32_t N = deg / 2;
        Scalar fac = frobenius_factor(0, N);
        if (fac.is_zero())
            throw PoleError("frobenius factor vanishes");
        acc += pairing(e2_reduced_.pow(N), comp) / fac;
    }
    return acc;
}

Poly Sl2Triple::apply_H(const Poly& f) const {
    Scalar shift = Scalar(Rational(model->ell())) * (Scalar(1) - model->h_c()) * Scalar(Rational(1, 2));
    Poly out(f.arity());
    for (const auto& [mo, co] : f.terms()) {
        Scalar eig = Scalar(Rational(static_cast<long>(mono_degree(mo)))) + shift;
        out.add_term(mo, co * eig);
    }
    return out;
}

Matrix op_matrix_on_slice(const std::function<Poly(const Poly&)>& op, int /*arity*/,
                          const GradedSlice& domain, const GradedSlice& codomain) {
    Matrix m(codomain.basis.size(), domain.basis.size());
    for (size_t j = 0; j < domain.basis.size(); ++j) {
        Poly img = op(Poly::monomial(domain.basis[j], Scalar(1)));
        for (const auto& [mo, co] : img.terms()) {
            auto idx = codomain.index_of(mo);
            if (!idx)
                throw std::logic_error("op_matrix_on_slice: image leaves the codomain slice");
            m.at(*idx, j) = co;
        }
    }
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (size_t j = 0; j < b.cols(); ++j)
                if (!b.at(k, j).is_zero())
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

Matrix mat_scaled(const Matrix& a, const Scalar& s) {
    Matrix r(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.at(i, j) * s;
    return r;
}

Matrix mat_identity(size_t n, const Scalar& diag) {
    Matrix r(n, n);
    for (size_t i = 0; i < n; ++i)
        r.at(i, i) = diag;
    return r;
}

bool mat_is_zero(const Matrix& a) {
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_zero())
                return false;
    return true;
}

}  // namespace dunkl
