#include "dunkl/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <sstream>

#include "dunkl/dihedral.hpp"

namespace dunkl {

namespace {

struct SuiteCtx {
    VerifyReport report;
    DunklContext ctx;
    VerifyOptions opt;

    SuiteCtx(std::string name, const std::string& default_group, const VerifyOptions& o)
        : ctx(make_ctx(o.group_spec.empty() ? default_group : o.group_spec)), opt(o) {
        report.suite = std::move(name);
    }

    static DunklContext make_ctx(const std::string& spec) {
        ReflectionGroup g = ReflectionGroup::parse_spec(spec);
        return DunklContext(g, MultiplicityFunction::symbolic(g));
    }

    std::string poly_str(const Poly& p) const {
        return p.str(ctx.field(), ctx.group().var_names());
    }
    std::string scalar_str(const Scalar& s) const { return s.str_plain(ctx.field()); }

    void expect_eq(const Poly& got, const Poly& expected, const std::string& input) {
        ++report.cases;
        if (got != expected)
            report.failures.push_back({input, poly_str(expected), poly_str(got)});
    }
    void expect_eq(const Scalar& got, const Scalar& expected, const std::string& input) {
        ++report.cases;
        if (got != expected)
            report.failures.push_back({input, scalar_str(expected), scalar_str(got)});
    }
    void expect(bool ok, const std::string& input, const std::string& expected, const std::string& got) {
        ++report.cases;
        if (!ok)
            report.failures.push_back({input, expected, got});
    }
};

uint32_t default_commute_degree(const ReflectionGroup& g) {
    return g.kind() == GroupKind::Symmetric ? 6u : static_cast<uint32_t>(g.parameter() + 2);
}

Poly random_homogeneous(std::mt19937_64& rng, int arity, uint32_t d) {
    std::uniform_int_distribution<long> coef(-3, 3);
    Poly p(arity);
    for (const Mono& m : GradedSlice::of(arity, d).basis)
        p.add_term(m, Scalar(Rational(coef(rng))));
    if (p.is_zero())
        p = Poly::monomial(GradedSlice::of(arity, d).basis[0], Scalar(1));
    return p;
}

Poly random_poly(std::mt19937_64& rng, int arity, uint32_t max_deg) {
    std::uniform_int_distribution<uint32_t> dd(0, max_deg);
    Poly p = random_homogeneous(rng, arity, dd(rng));
    if (rng() % 2)
        p += random_homogeneous(rng, arity, dd(rng));
    return p;
}

VerifyReport suite_commute(const VerifyOptions& opt) {
    SuiteCtx s("commute", "Sn:4", opt);
    uint32_t maxd = opt.max_degree >= 0 ? static_cast<uint32_t>(opt.max_degree)
                                        : default_commute_degree(s.ctx.group());
    int ar = s.ctx.arity();
    for (uint32_t d = 0; d <= maxd; ++d) {
        for (const Mono& m : GradedSlice::of(ar, d).basis) {
            Poly f = Poly::monomial(m, Scalar(1));
            for (int i = 0; i < ar; ++i)
                for (int j = i + 1; j < ar; ++j) {
                    Poly a = s.ctx.dunkl_apply(i, s.ctx.dunkl_apply(j, f));
                    Poly b = s.ctx.dunkl_apply(j, s.ctx.dunkl_apply(i, f));
                    s.expect(a == b,
                             "commutator directions (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") on " + s.poly_str(f),
                             "0", s.poly_str(a - b));
                }
        }
    }
    return s.report;
}

GradedSlice slice_or_empty(int arity, int d) {
    if (d < 0)
        return GradedSlice{arity, 0, {}};
    return GradedSlice::of(arity, static_cast<uint32_t>(d));
}

VerifyReport suite_sl2(const VerifyOptions& opt) {
    SuiteCtx s("sl2", "I2:4", opt);
    HarmonicModel model(s.ctx);
    Sl2Triple triple(model);
    int ar = model.reduced_arity();
    uint32_t maxd = opt.max_degree >= 0 ? static_cast<uint32_t>(opt.max_degree)
                                        : (s.ctx.group().kind() == GroupKind::Dihedral ? 8u : 6u);
    Scalar shift = Scalar(Rational(model.ell())) * (Scalar(1) - model.h_c()) * Scalar(Rational(1, 2));
    auto H_of = [&](int d, size_t n) {
        return mat_identity(n, Scalar(Rational(d)) + shift);
    };
    auto E = [&](const Poly& f) { return triple.apply_E(f); };
    auto L = [&](const Poly& f) { return triple.apply_L(f); };
    for (uint32_t d = 0; d <= maxd; ++d) {
        GradedSlice below = slice_or_empty(ar, static_cast<int>(d) - 2);
        GradedSlice here = slice_or_empty(ar, static_cast<int>(d));
        GradedSlice above = slice_or_empty(ar, static_cast<int>(d) + 2);
        Matrix E_d = op_matrix_on_slice(E, ar, here, above);
        Matrix E_dm = op_matrix_on_slice(E, ar, below, here);
        Matrix L_d = op_matrix_on_slice(L, ar, here, below);
        Matrix L_dp = op_matrix_on_slice(L, ar, above, here);
        Matrix comm = mat_sub(mat_mul(E_dm, L_d), mat_mul(L_dp, E_d));
        s.expect(mat_is_zero(mat_sub(comm, H_of(static_cast<int>(d), here.basis.size()))),
                 "[E,L] = H on degree " + std::to_string(d) + " slice", "exact matrix identity", "mismatch");
        Matrix HE = mat_sub(mat_mul(H_of(static_cast<int>(d) + 2, above.basis.size()), E_d),
                            mat_mul(E_d, H_of(static_cast<int>(d), here.basis.size())));
        s.expect(mat_is_zero(mat_sub(HE, mat_scaled(E_d, Scalar(2)))),
                 "[H,E] = 2E on degree " + std::to_string(d), "exact matrix identity", "mismatch");
        Matrix HL = mat_sub(mat_mul(H_of(static_cast<int>(d) - 2, below.basis.size()), L_d),
                            mat_mul(L_d, H_of(static_cast<int>(d), here.basis.size())));
        s.expect(mat_is_zero(mat_sub(HL, mat_scaled(L_d, Scalar(-2)))),
                 "[H,L] = -2L on degree " + std::to_string(d), "exact matrix identity", "mismatch");
    }
    // quantitative commutator in the unnormalized scaling:
    // [L, E^k] = 4k E^{k-1} (l(1-h_c)/2 + k - 1 + Euler)
    std::mt19937_64 rng(opt.seed);
    for (uint32_t k = 1; k <= 3; ++k) {
        for (int trial = 0; trial < 3; ++trial) {
            Poly f = random_poly(rng, ar, 3);
            Poly Ekf = f;
            for (uint32_t i = 0; i < k; ++i)
                Ekf = model.apply_E(Ekf);
            Poly lhs = model.apply_L(Ekf);
            Poly LE = model.apply_L(f);
            for (uint32_t i = 0; i < k; ++i)
                LE = model.apply_E(LE);
            lhs -= LE;
            Poly graded(ar);
            for (const auto& [m, co] : f.terms())
                graded.add_term(m, co * (shift + Scalar(Rational(static_cast<long>(k - 1 + mono_degree(m))))));
            for (uint32_t i = 0; i + 1 < k; ++i)
                graded = model.apply_E(graded);
            s.expect(lhs == graded.scaled(Scalar(Rational(4L * k))),
                     "[L, E^" + std::to_string(k) + "] quantitative identity", "exact", "mismatch");
        }
    }
    return s.report;
}

VerifyReport suite_berest(const VerifyOptions& opt) {
    SuiteCtx s("berest", "Sn:3", opt);
    std::mt19937_64 rng(opt.seed);
    int ar = s.ctx.arity();
    std::uniform_int_distribution<uint32_t> dp(1, 3), df(0, 5);
    for (int trial = 0; trial < 25; ++trial) {
        Poly p = random_homogeneous(rng, ar, dp(rng));
        Poly f = random_homogeneous(rng, ar, df(rng));
        Poly via = s.ctx.berest_nabla(p, f);
        Poly direct = s.ctx.nabla_poly(s.ctx.group().dualize(p), f);
        s.expect(via == direct, "alternating-sum route for p = " + s.poly_str(p), s.poly_str(direct),
                 s.poly_str(via));
    }
    return s.report;
}

VerifyReport suite_orthogonality(const VerifyOptions& opt) {
    SuiteCtx s("orthogonality", "I2:5", opt);
    GeneratorSet gens = GeneratorSet::standard_for(s.ctx.group());
    // dihedral slices are singletons below weight 2m; default past that
    uint32_t maxd = opt.max_degree >= 0
                        ? static_cast<uint32_t>(opt.max_degree)
                        : (s.ctx.group().kind() == GroupKind::Dihedral
                               ? static_cast<uint32_t>(2 * s.ctx.group().parameter() + 2)
                               : 6u);
    for (uint32_t d = 1; d <= maxd; ++d) {
        auto slice = gens.monomials_of_weight(d);
        if (slice.empty())
            continue;
        auto bs = canonical_slice(d, gens, s.ctx);
        for (size_t i = 0; i < bs.size(); ++i) {
            for (size_t j = 0; j < slice.size(); ++j) {
                if (!inv_lex_less(bs[i].index, slice[j]))
                    continue;
                Scalar v = s.ctx.pairing(gens.expand(slice[j]), bs[i].polynomial);
                s.expect_eq(v, Scalar(), "triangularity at weight " + std::to_string(d));
            }
            for (size_t j = 0; j < i; ++j) {
                Scalar v = s.ctx.pairing(bs[i].polynomial, bs[j].polynomial);
                s.expect_eq(v, Scalar(), "basis orthogonality at weight " + std::to_string(d));
            }
        }
    }
    return s.report;
}

VerifyReport suite_frobenius(const VerifyOptions& opt) {
    SuiteCtx s("frobenius", "I2:4", opt);
    HarmonicModel model(s.ctx);
    int ar = model.reduced_arity();
    auto harmonic_basis = [&](uint32_t d) {
        GradedSlice dom = GradedSlice::of(ar, d);
        GradedSlice cod = slice_or_empty(ar, static_cast<int>(d) - 2);
        Matrix L = op_matrix_on_slice([&](const Poly& f) { return model.apply_L(f); }, ar, dom, cod);
        std::vector<Poly> out;
        for (const auto& v : kernel_basis(L)) {
            Poly h(ar);
            for (size_t i = 0; i < v.size(); ++i)
                h += Poly::monomial(dom.basis[i], v[i]);
            out.push_back(h);
        }
        return out;
    };
    std::mt19937_64 rng(opt.seed);
    for (uint32_t d : {1u, 2u, 3u}) {
        auto ud = harmonic_basis(d);
        if (ud.empty())
            continue;
        for (uint32_t k = 0; k <= 2; ++k) {
            Poly f = ud[0];
            for (uint32_t i = 0; i < k; ++i)
                f = model.apply_E(f);
            Poly g = random_homogeneous(rng, ar, d + 2 * k);
            Scalar lhs = model.pairing(f, g);
            Scalar rhs = model.phi(f * g) * model.frobenius_factor(d, k);
            s.expect_eq(lhs, rhs, "product formula at (d,k) = (" + std::to_string(d) + "," + std::to_string(k) + ")");
        }
        // orthogonality of e2 * U_d against U_{d+2} (equal total degree,
        // different e2-powers)
        auto up = harmonic_basis(d + 2);
        if (!up.empty())
            s.expect_eq(model.pairing(model.apply_E(ud[0]), up[0]), Scalar(),
                        "orthogonal summands at total degree " + std::to_string(d + 2));
    }
    // phi normalization
    s.expect_eq(model.phi(Poly::constant(ar, Scalar(1))), Scalar(1), "phi(1)");
    for (uint32_t k = 1; k <= 3; ++k)
        s.expect_eq(model.phi(model.e2_reduced().pow(k)), Scalar(1), "phi(e2^" + std::to_string(k) + ")");
    return s.report;
}

VerifyReport suite_kernel(const VerifyOptions& opt) {
    SuiteCtx s("kernel", "I2:3", opt);
    if (s.ctx.group().kind() != GroupKind::Dihedral)
        throw std::domain_error("suite kernel: dihedral groups only");
    int m = s.ctx.group().parameter();
    GeneratorSet gens = GeneratorSet::standard_for(s.ctx.group());
    uint32_t maxd = opt.max_degree >= 0 ? static_cast<uint32_t>(opt.max_degree)
                                        : static_cast<uint32_t>(2 * m + 4);
    for (uint32_t d = 2; d <= maxd; ++d) {
        for (const auto& a : gens.monomials_of_weight(d)) {
            auto b = canonical_invariant(a, gens, s.ctx);
            Poly cur = b.polynomial;
            for (uint32_t i = 0; i <= a[0]; ++i)
                cur = s.ctx.laplacian(cur);
            s.expect(cur.is_zero(), "L^{a1+1} kills b_(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ")",
                     "0", s.poly_str(cur));
            auto b0 = canonical_invariant({0, a[1]}, gens, s.ctx);
            s.expect_eq(b.polynomial, gens.expand({a[0], 0}) * b0.polynomial,
                        "e2-factorization of b_(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ")");
        }
    }
    return s.report;
}

DunklContext equal_ctx(const ReflectionGroup& g) {
    return DunklContext(g, MultiplicityFunction::symbolic_equal(g));
}

VerifyReport suite_gf(const VerifyOptions& opt) {
    VerifyOptions o = opt;
    if (o.group_spec.empty())
        o.group_spec = "I2:5";
    ReflectionGroup g = ReflectionGroup::parse_spec(o.group_spec);
    if (g.kind() != GroupKind::Dihedral)
        throw std::domain_error("suite gf: dihedral groups only");
    DunklContext ctx = equal_ctx(g);
    VerifyReport rep;
    rep.suite = "gf";
    int m = g.parameter();
    int K = o.order >= 0 ? o.order : 3;
    GeneratorSet gens = GeneratorSet::standard_for(g);
    auto bs = gf_coefficients(m, K);
    Field f = ctx.field();
    for (int k = 0; k <= K; ++k) {
        auto bc = canonical_invariant({0, static_cast<uint32_t>(k)}, gens, ctx);
        Poly bc_inv(2);
        for (const auto& [e, coef] : bc.expansion)
            bc_inv.add_term(Mono{e[0], e[1]}, coef);
        ++rep.cases;
        if (bc_inv != bs[static_cast<size_t>(k)])
            rep.failures.push_back({"b_(0," + std::to_string(k) + ") for m = " + std::to_string(m),
                                    bs[static_cast<size_t>(k)].str(f, {"e2", "em"}),
                                    bc_inv.str(f, {"e2", "em"})});
    }
    return rep;
}

VerifyReport suite_jacobi(const VerifyOptions& opt) {
    SuiteCtx s("jacobi", "I2:4", opt);
    if (s.ctx.group().kind() != GroupKind::Dihedral || s.ctx.group().parameter() % 2 != 0)
        throw std::domain_error("suite jacobi: even-order dihedral groups only");
    int m = s.ctx.group().parameter();
    // operator annihilation with free symbolic parameters
    Scalar a = Scalar::symbol(0), b = Scalar::symbol(1);
    for (uint32_t k = 0; k <= 4; ++k) {
        Poly jp = jacobi_poly(k, a, b);
        s.expect(jacobi_operator_apply(jp, k, a, b).is_zero(),
                 "hypergeometric operator annihilates P_" + std::to_string(k), "0", "nonzero");
    }
    // closed form against the canonical invariants over Q(c1, c2)
    GeneratorSet gens = GeneratorSet::standard_for(s.ctx.group());
    Scalar c1 = Scalar::symbol(0), c2 = Scalar::symbol(1);
    Scalar C = c1 + c2, delta = c2 - c1;
    int K = opt.order >= 0 ? opt.order : 3;
    for (uint32_t k = 1; k <= static_cast<uint32_t>(K); ++k) {
        Poly bj = b0k_jacobi(k, m, C, delta);
        Scalar lead = bj.coeff(Mono{0, k});
        Poly monic = bj.scaled(lead.inverse());
        auto bc = canonical_invariant({0, k}, gens, s.ctx);
        Poly bc_inv(2);
        for (const auto& [e, coef] : bc.expansion)
            bc_inv.add_term(Mono{e[0], e[1]}, coef);
        s.expect(monic == bc_inv, "closed form for b_(0," + std::to_string(k) + "), m = " + std::to_string(m),
                 bc_inv.str(s.ctx.field(), {"e2", "em"}), monic.str(s.ctx.field(), {"e2", "em"}));
        s.report.notes.push_back("b_(0," + std::to_string(k) + ") closed-form leading scalar: " +
                                 s.scalar_str(lead));
    }
    return s.report;
}

VerifyReport suite_limit(const VerifyOptions& opt) {
    SuiteCtx s("limit", "Sn:4", opt);
    if (s.ctx.group().kind() != GroupKind::Symmetric)
        throw std::domain_error("suite limit: symmetric groups only");
    int n = s.ctx.group().parameter();
    GeneratorSet gens = GeneratorSet::standard_for(s.ctx.group());
    for (int k = 2; k <= n; ++k) {
        auto ekc = elementary_invariant(static_cast<uint32_t>(k), gens, s.ctx);
        try {
            Poly lim = limit_at(ekc, {Rational(1, n)}, gens);
            s.expect_eq(lim, ebar(k, n), "limit of e_" + std::to_string(k) + "^(c) at c = 1/" + std::to_string(n));
            s.report.notes.push_back("limit of e_" + std::to_string(k) + "^(c) is ebar_" + std::to_string(k));
        } catch (const PoleError& e) {
            ++s.report.cases;
            s.report.failures.push_back({"limit of e_" + std::to_string(k) + "^(c)", "no pole", e.what()});
        }
    }
    return s.report;
}

VerifyReport suite_iwasaki(const VerifyOptions& opt) {
    SuiteCtx s("iwasaki", "Sn:3", opt);
    if (s.ctx.group().kind() != GroupKind::Symmetric)
        throw std::domain_error("suite iwasaki: symmetric groups only");
    int n = s.ctx.group().parameter();
    GeneratorSet gens = GeneratorSet::standard_for(s.ctx.group());
    for (int k = 2; k <= n; ++k) {
        Poly F = iwasaki_elementary(k, n, s.ctx);
        Poly ekc = elementary_invariant(static_cast<uint32_t>(k), gens, s.ctx).polynomial;
        auto ratio = proportionality_ratio(ekc, F);
        s.expect(ratio.has_value() && !ratio->is_zero(),
                 "orbit-sum formula for k = " + std::to_string(k) + ", n = " + std::to_string(n),
                 "nonzero multiple of the canonical elementary invariant", ratio ? "zero ratio" : "not proportional");
        if (ratio)
            s.report.notes.push_back("k = " + std::to_string(k) + ": orbit sum = (" + s.scalar_str(*ratio) +
                                     ") * e_k^(c)");
    }
    return s.report;
}

VerifyReport suite_nablapr(const VerifyOptions& opt) {
    SuiteCtx s("nablapr", "Sn:4", opt);
    if (s.ctx.group().kind() != GroupKind::Symmetric)
        throw std::domain_error("suite nablapr: symmetric groups only");
    int n = s.ctx.group().parameter();
    Scalar c = Scalar::symbol(0);
    for (int k = 1; k <= n; ++k) {
        Poly ek = ebar(k, n);
        for (int r = 1; r <= k; ++r) {
            Poly pr(n);
            for (int i = 0; i < n; ++i) {
                Mono m(static_cast<size_t>(n), 0);
                m[static_cast<size_t>(i)] = static_cast<uint32_t>(r);
                pr.add_term(m, Scalar(1));
            }
            Poly got = s.ctx.nabla_poly(pr, ek);
            Scalar omc = Scalar(1) - Scalar(Rational(n)) * c;
            Scalar pw(1);
            for (int i = 0; i < r; ++i)
                pw *= omc;
            Rational fac(r % 2 == 0 ? 1 : -1), nr(1);
            for (int t = 1; t <= r; ++t)
                fac *= Rational(n - k + t);
            for (int t = 0; t < r; ++t)
                nr *= Rational(n);
            Scalar coef = Scalar(fac) * (pw - omc) / (Scalar(nr) * c);
            s.expect_eq(got, ebar(k - r, n).scaled(coef),
                        "power-sum reduction (k,r) = (" + std::to_string(k) + "," + std::to_string(r) + ")");
        }
    }
    return s.report;
}

VerifyReport suite_phic_poly(const VerifyOptions& opt) {
    VerifyOptions o = opt;
    if (o.group_spec.empty())
        o.group_spec = "I2:3";
    ReflectionGroup g = ReflectionGroup::parse_spec(o.group_spec);
    VerifyReport rep;
    rep.suite = "phic-poly";
    std::mt19937_64 rng(o.seed);
    uint32_t maxd = o.max_degree >= 0 ? static_cast<uint32_t>(o.max_degree) : 6u;
    std::uniform_int_distribution<long> coef(-3, 3);
    if (g.kind() == GroupKind::Dihedral) {
        DunklContext ctx = equal_ctx(g);
        GeneratorSet gens = GeneratorSet::standard_for(g);
        Scalar divisor = Scalar(1) - ctx.h_c();
        Field f = ctx.field();
        int made = 0;
        for (uint32_t d = 2; made < 20; d = (d >= maxd ? 2 : d + 1)) {
            auto ms = gens.monomials_of_weight(d);
            if (ms.empty())
                continue;
            auto rnd_inv = [&] {
                Poly u(2);
                for (const auto& a : ms)
                    u += gens.expand(a).scaled(Scalar(Rational(coef(rng))));
                if (u.is_zero())
                    u = gens.expand(ms[0]);
                return u;
            };
            Poly u = rnd_inv(), v = rnd_inv();
            Scalar q = ctx.pairing(u, v) / divisor;
            ++rep.cases;
            if (!q.is_polynomial())
                rep.failures.push_back({"pair of weight " + std::to_string(d), "parameter polynomial",
                                        q.str(f)});
            ++made;
        }
        return rep;
    }
    // S_n in mean-centered variables with the 1 - nc divisor
    DunklContext ctx(g, MultiplicityFunction::symbolic(g));
    int n = g.parameter();
    Scalar divisor = Scalar(1) - Scalar(Rational(n)) * Scalar::symbol(0);
    Field f = ctx.field();
    // generators ebar_2..ebar_n with degrees 2..n
    std::vector<Poly> gens;
    for (int k = 2; k <= n; ++k)
        gens.push_back(ebar(k, n));
    auto monomials_of = [&](uint32_t d) {
        std::vector<Poly> out;
        std::vector<uint32_t> exps(gens.size(), 0);
        auto rec = [&](auto&& self, size_t pos, uint32_t left) -> void {
            if (pos == gens.size()) {
                if (left == 0) {
                    Poly m = Poly::constant(n, Scalar(1));
                    for (size_t i = 0; i < gens.size(); ++i)
                        for (uint32_t t = 0; t < exps[i]; ++t)
                            m *= gens[i];
                    out.push_back(m);
                }
                return;
            }
            uint32_t dk = static_cast<uint32_t>(pos + 2);
            for (uint32_t e = 0; e * dk <= left; ++e) {
                exps[pos] = e;
                self(self, pos + 1, left - e * dk);
            }
            exps[pos] = 0;
        };
        rec(rec, 0, d);
        return out;
    };
    int made = 0;
    for (uint32_t d = 2; made < 20; d = (d >= maxd ? 2 : d + 1)) {
        auto ms = monomials_of(d);
        if (ms.empty())
            continue;
        auto rnd_inv = [&] {
            Poly u(n);
            for (const auto& mp : ms)
                u += mp.scaled(Scalar(Rational(coef(rng))));
            if (u.is_zero())
                u = ms[0];
            return u;
        };
        Poly u = rnd_inv(), v = rnd_inv();
        Scalar q = ctx.pairing(u, v) / divisor;
        ++rep.cases;
        if (!q.is_polynomial())
            rep.failures.push_back({"mean-centered pair of degree " + std::to_string(d),
                                    "parameter polynomial", q.str(f)});
        ++made;
    }
    return rep;
}

using SuiteFn = VerifyReport (*)(const VerifyOptions&);

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> reg = {
        {"commute", suite_commute},  {"sl2", suite_sl2},
        {"berest", suite_berest},    {"orthogonality", suite_orthogonality},
        {"frobenius", suite_frobenius}, {"kernel", suite_kernel},
        {"gf", suite_gf},            {"jacobi", suite_jacobi},
        {"limit", suite_limit},      {"iwasaki", suite_iwasaki},
        {"nablapr", suite_nablapr},  {"phic-poly", suite_phic_poly},
    };
    return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, fn] : registry())
            v.push_back(k);
        return v;
    }();
    return names;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& opt) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw std::domain_error("unknown verification suite '" + name + "'");
    return it->second(opt);
}

std::vector<VerifyReport> run_suites(const std::vector<std::string>& names, const VerifyOptions& opt,
                                     bool parallel) {
    std::vector<VerifyReport> out;
    if (parallel && names.size() > 1) {
        std::vector<std::future<VerifyReport>> futs;
        for (const auto& n : names)
            futs.push_back(std::async(std::launch::async, [n, opt] { return run_suite(n, opt); }));
        for (auto& f : futs)
            out.push_back(f.get());
    } else {
        for (const auto& n : names)
            out.push_back(run_suite(n, opt));
    }
    std::sort(out.begin(), out.end(),
              [](const VerifyReport& a, const VerifyReport& b) { return a.suite < b.suite; });
    return out;
}

std::vector<CanonicalInvariant> canonical_slice(uint32_t weight, const GeneratorSet& gens,
                                                const DunklContext& ctx) {
    std::vector<ExpVec> slice = gens.monomials_of_weight(weight);
    std::vector<Poly> basis;
    for (const auto& a : slice)
        basis.push_back(gens.expand(a));
    Matrix g = ctx.gram(basis);
    std::vector<CanonicalInvariant> out;
    for (size_t i = 0; i < slice.size(); ++i) {
        CanonicalInvariant inv;
        inv.index = slice[i];
        if (i == 0) {
            inv.expansion = {{slice[0], Scalar(1)}};
            inv.polynomial = basis[0];
            out.push_back(std::move(inv));
            continue;
        }
        Matrix sub(i, i);
        std::vector<Scalar> rhs(i);
        for (size_t r = 0; r < i; ++r) {
            for (size_t c = 0; c < i; ++c)
                sub.at(r, c) = g.at(r, c);
            rhs[r] = -g.at(r, i);
        }
        SolveResult sol = solve(sub, rhs);
        if (sol.status != SolveStatus::Ok)
            throw std::logic_error("canonical_slice: singular Gram system");
        Poly acc = basis[i];
        for (size_t r = 0; r < i; ++r) {
            if (!sol.x[r].is_zero())
                inv.expansion.push_back({slice[r], sol.x[r]});
            acc += basis[r].scaled(sol.x[r]);
        }
        inv.expansion.push_back({slice[i], Scalar(1)});
        inv.polynomial = acc;
        out.push_back(std::move(inv));
    }
    return out;
}

}  // namespace dunkl
