#include "dunkl/dihedral.hpp"

#include <stdexcept>

namespace dunkl {

namespace {

Poly v_e2() { return Poly::variable(2, 0); }
Poly v_em() { return Poly::variable(2, 1); }

Poly euler_cal(const Poly& f, int m) {
    // (2/m) e2 d/de2 + em d/dem
    return (v_e2() * f.derivative(0)).scaled(Scalar(Rational(2, m))) + v_em() * f.derivative(1);
}

Poly dcal(const Poly& f) {
    return v_em() * f.derivative(1);
}

}  // namespace

Scalar dihedral_C(const DunklContext& ctx) {
    if (ctx.group().classes().size() == 2)
        return ctx.class_value(0) + ctx.class_value(1);
    return Scalar(2) * ctx.class_value(0);
}

Scalar dihedral_delta(const DunklContext& ctx) {
    if (ctx.group().classes().size() == 2)
        return ctx.class_value(1) - ctx.class_value(0);
    return Scalar();
}

Scalar binomial_scalar(const Scalar& x, uint32_t k) {
    Scalar acc(1);
    Rational fact(1);
    for (uint32_t i = 0; i < k; ++i) {
        acc *= x - Scalar(Rational(static_cast<long>(i)));
        fact *= Rational(static_cast<long>(i + 1));
    }
    return acc * Scalar(fact.inverse());
}

Poly laplacian_pde(const Poly& f, int m, const Scalar& C, const Scalar& delta) {
    if (m % 2 == 1 && !delta.is_zero())
        throw std::domain_error("laplacian_pde: odd m requires delta = 0");
    Poly d2_e2 = f.derivative(0).derivative(0);
    Poly d_e2em = f.derivative(0).derivative(1);
    Poly d2_em = f.derivative(1).derivative(1);
    Poly out = v_e2() * d2_e2;
    out += (v_em() * d_e2em).scaled(Scalar(Rational(m)));
    out += (v_e2().pow(static_cast<uint32_t>(m - 1)) * d2_em).scaled(Scalar(Rational(static_cast<long>(m) * m)));
    out += f.derivative(0).scaled(Scalar(1) - Scalar(Rational(m, 2)) * C);
    if (m % 2 == 0 && !delta.is_zero()) {
        Scalar coef = Scalar(Rational(static_cast<long>(m) * m, 2)) * delta;
        out += (v_e2().pow(static_cast<uint32_t>(m / 2 - 1)) * f.derivative(1)).scaled(coef);
    }
    return out;
}

bool viaD_identity_check(const Poly& f, int m, const Scalar& C, const Scalar& delta) {
    Poly em2 = v_em() * v_em();
    Poly lhs = (v_e2() * laplacian_pde(f, m, C, delta) * em2).scaled(Scalar(Rational(4, static_cast<long>(m) * m)));
    Poly E1 = euler_cal(f, m);
    Poly E2 = euler_cal(E1, m);
    Poly D1 = dcal(f);
    Poly D2 = dcal(D1);
    Poly rhs = (E2 - E1.scaled(C)) * em2;
    rhs += (v_e2().pow(static_cast<uint32_t>(m)).scaled(Scalar(4)) - em2) * (D2 - D1);
    rhs += (D1 * em2).scaled(C - Scalar(1));
    if (m % 2 == 0)
        rhs += (v_e2().pow(static_cast<uint32_t>(m / 2)) * v_em() * D1).scaled(Scalar(2) * delta);
    return lhs == rhs;
}

std::vector<Poly> gf_coefficients(int m, int K) {
    if (K < 0)
        throw std::domain_error("gf_coefficients: negative truncation order");
    Scalar c = Scalar::symbol(0);
    std::vector<Poly> out;
    for (int k = 0; k <= K; ++k) {
        // t^k coefficient of sum_j binom(c,j) (em t + e2^m t^2)^j, then
        // divided by binom(c,k)
        Poly acc(2);
        for (int j = (k + 1) / 2; j <= k; ++j) {
            int b = k - j;  // count of e2^m factors; em exponent j - b
            Rational choose(1);
            // binom(j, b)
            for (int i = 0; i < b; ++i)
                choose *= Rational(j - i) / Rational(i + 1);
            Scalar coef = binomial_scalar(c, static_cast<uint32_t>(j)) * Scalar(choose);
            Mono mono{static_cast<uint32_t>(m * b), static_cast<uint32_t>(j - b)};
            acc.add_term(mono, coef);
        }
        Scalar denom = binomial_scalar(c, static_cast<uint32_t>(k));
        out.push_back(acc.scaled(denom.inverse()));
    }
    return out;
}

Poly jacobi_poly(uint32_t k, const Scalar& a, const Scalar& b) {
    // P_k^{(a,b)}(y) = sum_s binom(k+a, s) binom(k+b, k-s) ((y-1)/2)^{k-s} ((y+1)/2)^s
    Poly y = Poly::variable(1, 0);
    Poly ym = (y - Poly::constant(1, Scalar(1))).scaled(Scalar(Rational(1, 2)));
    Poly yp = (y + Poly::constant(1, Scalar(1))).scaled(Scalar(Rational(1, 2)));
    Poly out(1);
    for (uint32_t s = 0; s <= k; ++s) {
        Scalar coef = binomial_scalar(a + Scalar(Rational(static_cast<long>(k))), s) *
                      binomial_scalar(b + Scalar(Rational(static_cast<long>(k))), k - s);
        out += (ym.pow(k - s) * yp.pow(s)).scaled(coef);
    }
    return out;
}

Poly jacobi_operator_apply(const Poly& p, uint32_t k, const Scalar& a, const Scalar& b) {
    Poly y = Poly::variable(1, 0);
    Poly one = Poly::constant(1, Scalar(1));
    Poly out = (one - y * y) * p.derivative(0).derivative(0);
    out += (Poly::constant(1, b - a) - y.scaled(a + b + Scalar(2))) * p.derivative(0);
    Scalar eig = Scalar(Rational(static_cast<long>(k))) * (Scalar(Rational(static_cast<long>(k))) + a + b + Scalar(1));
    out += p.scaled(eig);
    return out;
}

Poly b0k_jacobi(uint32_t k, int m, const Scalar& C, const Scalar& delta) {
    if (m % 2 != 0)
        throw std::domain_error("b0k_jacobi: even m only");
    Scalar half = Scalar(Rational(1, 2));
    Scalar a = -(C + delta + Scalar(1)) * half;
    Scalar b = -(C - delta + Scalar(1)) * half;
    Poly p = jacobi_poly(k, a, b);
    // e2^{mk/2} P(em / (2 e2^{m/2})): y^t -> em^t e2^{m(k-t)/2} / 2^t
    Poly out(2);
    for (const auto& [mo, co] : p.terms()) {
        uint32_t t = mo[0];
        Rational scale(1);
        for (uint32_t i = 0; i < t; ++i)
            scale *= Rational(1, 2);
        Mono mono{static_cast<uint32_t>(m) * (k - t) / 2, t};
        out.add_term(mono, co * Scalar(scale));
    }
    Rational kfact(1);
    for (uint32_t i = 2; i <= k; ++i)
        kfact *= Rational(static_cast<long>(i));
    Rational four_k(1);
    for (uint32_t i = 0; i < k; ++i)
        four_k *= Rational(4);
    Scalar denom = Scalar(four_k) * binomial_scalar(Scalar(Rational(2L * k + 1)) - C, k);
    return out.scaled(Scalar(kfact) / denom);
}


Poly inv_to_zw(const Poly& invpoly, const ReflectionGroup& g) {
    int m = g.parameter();
    Poly e2 = g.e2();
    Poly em(2);
    em.add_term(Mono{static_cast<uint32_t>(m), 0}, Scalar(1));
    em.add_term(Mono{0, static_cast<uint32_t>(m)}, Scalar(1));
    return invpoly.substituted({e2, em});
}

Poly zw_to_inv(const Poly& f, const ReflectionGroup& g) {
    int m = g.parameter();
    Poly work = f;
    Poly out(2);
    while (!work.is_zero()) {
        // strip the term with the highest z-exponent
        auto lead = work.terms().begin();
        for (auto it = work.terms().begin(); it != work.terms().end(); ++it)
            if (it->first[0] > lead->first[0] ||
                (it->first[0] == lead->first[0] && it->first[1] > lead->first[1]))
                lead = it;
        uint32_t p = lead->first[0], q = lead->first[1];
        if (p < q || (p - q) % static_cast<uint32_t>(m) != 0)
            throw std::domain_error("zw_to_inv: not in the invariant ring");
        uint32_t b = (p - q) / static_cast<uint32_t>(m);
        Mono mono{q, b};
        Scalar c = lead->second;
        out.add_term(mono, c);
        work -= inv_to_zw(Poly::monomial(mono, c), g);
    }
    return out;
}

}  // namespace dunkl
