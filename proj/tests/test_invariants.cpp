#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/invariants.hpp"

using namespace dunkl;

namespace {

DunklContext sym_ctx(int n) {
    auto g = ReflectionGroup::symmetric(n);
    return DunklContext(g, MultiplicityFunction::symbolic(g));
}
DunklContext dih_equal_ctx(int m) {
    auto g = ReflectionGroup::dihedral(m);
    return DunklContext(g, MultiplicityFunction::symbolic_equal(g));
}

Scalar c_sym() { return Scalar::symbol(0); }

Scalar ratpoly(std::initializer_list<std::pair<int, long>> num, std::initializer_list<std::pair<int, long>> den) {
    auto build = [](std::initializer_list<std::pair<int, long>> l) {
        ParamPoly p;
        for (auto [e, v] : l) {
            PExp pe;
            pe.e[0] = static_cast<uint32_t>(e);
            p.add_term(pe, Cyclotomic(Rational(v)));
        }
        return p;
    };
    return Scalar::fraction(build(num), build(den));
}

}  // namespace

TEST_CASE("inverse lexicographic order") {
    CHECK(inv_lex_less({0, 1}, {2, 0}));        // (2,0) < (0,1)
    CHECK(!inv_lex_less({0, 1}, {0, 1}));       // irreflexive
    CHECK(!inv_lex_less({1, 0, 0}, {0, 0, 1})); // (0,0,1) is not < (1,0,0)
    CHECK(inv_lex_less({0, 0, 1}, {1, 0, 0}));
    CHECK_THROWS_AS(inv_lex_less({1}, {1, 2}), std::domain_error);
    // strict total order on a sample slice
    GeneratorSet gens = GeneratorSet::elementary_symmetric(3);
    auto ms = gens.monomials_of_weight(4);
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = 0; j < ms.size(); ++j) {
            bool lt = inv_lex_less(ms[j], ms[i]);  // ms[i] < ms[j]
            bool gt = inv_lex_less(ms[i], ms[j]);
            CHECK(((i == j && !lt && !gt) || (i != j && lt != gt)));
        }
}

TEST_CASE("monomials_of_weight enumeration and order") {
    GeneratorSet g3 = GeneratorSet::elementary_symmetric(3);
    auto ms = g3.monomials_of_weight(3);
    CHECK(ms == std::vector<ExpVec>{{3, 0, 0}, {1, 1, 0}, {0, 0, 1}});
    CHECK(g3.monomials_of_weight(0) == std::vector<ExpVec>{{0, 0, 0}});
    auto d5 = ReflectionGroup::dihedral(5);
    GeneratorSet g5 = GeneratorSet::dihedral(d5);
    CHECK(g5.monomials_of_weight(10) == std::vector<ExpVec>{{5, 0}, {0, 2}});
    // expansion sanity: u^(1,1) = e1*e2 in S_2
    GeneratorSet g2 = GeneratorSet::elementary_symmetric(2);
    CHECK(g2.expand({1, 1}) == g2.gens()[0] * g2.gens()[1]);
}

TEST_CASE("canonical invariants: dihedral closed cases") {
    for (int m : {3, 4, 5}) {
        auto ctx = dih_equal_ctx(m);
        GeneratorSet gens = GeneratorSet::dihedral(ctx.group());
        // b_{(a1,0)} = e2^{a1}
        for (uint32_t a1 : {1u, 2u, 3u}) {
            auto b = canonical_invariant({a1, 0}, gens, ctx);
            CHECK(b.polynomial == gens.expand({a1, 0}));
        }
        // b_{(0,1)} = e_m
        auto b01 = canonical_invariant({0, 1}, gens, ctx);
        CHECK(b01.polynomial == gens.expand({0, 1}));
        // b_{(0,2)} = e_m^2 + (2/(c-1)) e2^m
        auto b02 = canonical_invariant({0, 2}, gens, ctx);
        Scalar expect = ratpoly({{0, 2}}, {{1, 1}, {0, -1}});
        CHECK(b02.coeff({static_cast<uint32_t>(m), 0}) == expect);
        CHECK(b02.coeff({0, 2}) == Scalar(1));
        CHECK(b02.expansion.size() == 2);
    }
}

TEST_CASE("indices below every competitor come out monic with no tail") {
    auto ctx = sym_ctx(3);
    GeneratorSet gens = GeneratorSet::elementary_symmetric(3);
    auto b = canonical_invariant({2, 0, 0}, gens, ctx);
    CHECK(b.polynomial == gens.expand({2, 0, 0}));
    CHECK(b.expansion.size() == 1);
}

TEST_CASE("elementary invariants for S_n match the printed expansions") {
    // e2^(c) = ebar_2 for all c (n = 3)
    {
        auto ctx = sym_ctx(3);
        GeneratorSet gens = GeneratorSet::elementary_symmetric(3);
        auto e2c = elementary_invariant(2, gens, ctx);
        CHECK(e2c.polynomial == ebar(2, 3));
        auto e3c = elementary_invariant(3, gens, ctx);
        CHECK(e3c.polynomial == ebar(3, 3));
    }
    // e4^(c) for n = 4: (1/4)(1-4c)/(12c-5) ebar2^2 + ebar4, with the frozen
    // coefficient table in the elementary-monomial basis
    {
        auto ctx = sym_ctx(4);
        GeneratorSet gens = GeneratorSet::elementary_symmetric(4);
        auto e4c = elementary_invariant(4, gens, ctx);
        CHECK(e4c.index == ExpVec{0, 0, 0, 1});
        Scalar q = ratpoly({{0, 1}, {1, -4}}, {{1, 48}, {0, -20}});
        Poly eb2 = ebar(2, 4);
        CHECK(e4c.polynomial == eb2 * eb2.scaled(q) + ebar(4, 4));
        CHECK(e4c.coeff({0, 2, 0, 0}) == q);
        CHECK(e4c.coeff({1, 0, 1, 0}) == Scalar(Rational(-1, 4)));
        CHECK(e4c.coeff({2, 1, 0, 0}) == ratpoly({{1, 3}, {0, -1}}, {{1, 24}, {0, -10}}));
        CHECK(e4c.coeff({4, 0, 0, 0}) == ratpoly({{0, 3}, {1, -9}}, {{1, 384}, {0, -160}}));
    }
}

TEST_CASE("triangularity and orthogonality re-verified") {
    auto ctx = sym_ctx(3);
    GeneratorSet gens = GeneratorSet::elementary_symmetric(3);
    for (uint32_t d : {2u, 3u, 4u}) {
        auto slice = gens.monomials_of_weight(d);
        std::vector<CanonicalInvariant> bs;
        for (const auto& a : slice)
            bs.push_back(canonical_invariant(a, gens, ctx));
        for (size_t i = 0; i < slice.size(); ++i) {
            // (u^{a'}, b_a) = 0 for a' < a
            for (const auto& ap : slice)
                if (inv_lex_less(bs[i].index, ap))
                    CHECK(ctx.pairing(gens.expand(ap), bs[i].polynomial).is_zero());
            // (b_a, b_{a'}) = 0 for a != a'
            for (size_t j = 0; j < i; ++j)
                CHECK(ctx.pairing(bs[i].polynomial, bs[j].polynomial).is_zero());
        }
    }
}

TEST_CASE("generator independence: elementary vs power sums") {
    auto ctx = sym_ctx(3);
    GeneratorSet el = GeneratorSet::elementary_symmetric(3);
    GeneratorSet ps = GeneratorSet::power_sums(3);
    for (uint32_t d = 2; d <= 6; ++d) {
        for (const auto& a : el.monomials_of_weight(d)) {
            auto b1 = canonical_invariant(a, el, ctx);
            auto b2 = canonical_invariant(a, ps, ctx);
            auto ratio = proportionality_ratio(b1.polynomial, b2.polynomial);
            REQUIRE(ratio.has_value());
            CHECK(!ratio->is_zero());
        }
    }
}

TEST_CASE("ebar") {
    CHECK(ebar(1, 3).is_zero());
    Poly d = Poly::variable(2, 0) - Poly::variable(2, 1);
    CHECK(ebar(2, 2) == (d * d).scaled(Scalar(Rational(-1, 4))));
    for (int k : {2, 3}) {
        Poly e = ebar(k, 4);
        auto g = ReflectionGroup::symmetric(4);
        for (const Reflection& s : g.reflections())
            CHECK(g.act(s, e) == e);
        Poly div(4);
        for (int i = 0; i < 4; ++i)
            div += e.derivative(i);
        CHECK(div.is_zero());
    }
}

TEST_CASE("iwasaki formula") {
    auto ctx2 = sym_ctx(2);
    Poly d = Poly::variable(2, 0) - Poly::variable(2, 1);
    CHECK(iwasaki_mu(2, 2, ctx2) == -(d * d));
    // degree assertion
    auto ctx4 = sym_ctx(4);
    for (int k = 2; k <= 4; ++k)
        CHECK(iwasaki_mu(k, 4, ctx4).degree() == static_cast<uint32_t>(k));
    // n=2: coset sum of mu_2 is -4 ebar_2, and e_2^(c) = ebar_2
    CHECK(iwasaki_elementary(2, 2, ctx2) == ebar(2, 2).scaled(Scalar(4)));
    // n=3: proportional to the canonical elementary invariants, with the
    // ratios frozen from an independent computation
    auto ctx3 = sym_ctx(3);
    GeneratorSet gens = GeneratorSet::elementary_symmetric(3);
    Poly f2 = iwasaki_elementary(2, 3, ctx3);
    auto r2 = proportionality_ratio(elementary_invariant(2, gens, ctx3).polynomial, f2);
    REQUIRE(r2.has_value());
    CHECK(*r2 == Scalar(6));
    Poly f3 = iwasaki_elementary(3, 3, ctx3);
    auto r3 = proportionality_ratio(elementary_invariant(3, gens, ctx3).polynomial, f3);
    REQUIRE(r3.has_value());
    CHECK(*r3 == Scalar(27) * (Scalar(2) * c_sym() - Scalar(1)));
}

TEST_CASE("degrees without invariants are rejected") {
    auto ctx = dih_equal_ctx(5);
    GeneratorSet gens = GeneratorSet::dihedral(ctx.group());
    CHECK_THROWS_AS(elementary_invariant(1, gens, ctx), std::domain_error);
    CHECK_THROWS_AS(elementary_invariant(3, gens, ctx), std::domain_error);
    CHECK(elementary_invariant(7, gens, ctx).index == ExpVec{1, 1});
}

TEST_CASE("limits at the singular value") {
    auto ctx = sym_ctx(4);
    GeneratorSet gens = GeneratorSet::elementary_symmetric(4);
    auto e4c = elementary_invariant(4, gens, ctx);
    CHECK(limit_at(e4c, {Rational(1, 4)}, gens) == ebar(4, 4));
    CHECK_THROWS_AS(limit_at(e4c, {Rational(5, 12)}, gens), PoleError);
    // dihedral b_{(0,2)} at c = 1 has the 2/(c-1) coefficient
    auto dctx = dih_equal_ctx(3);
    GeneratorSet dgens = GeneratorSet::dihedral(dctx.group());
    auto b02 = canonical_invariant({0, 2}, dgens, dctx);
    CHECK_THROWS_AS(limit_at(b02, {Rational(1)}, dgens), PoleError);
    CHECK(limit_at(b02, {Rational(0)}, dgens) ==
          dgens.expand({0, 2}) - dgens.expand({3, 0}).scaled(Scalar(2)));
}

TEST_CASE("coefficients are regular at h_c = 1") {
    // S_4 at c = 1/4 and I2(5) at c = 1/5: no canonical coefficient poles
    auto ctx = sym_ctx(4);
    GeneratorSet gens = GeneratorSet::elementary_symmetric(4);
    for (uint32_t d = 2; d <= 5; ++d)
        for (const auto& a : gens.monomials_of_weight(d)) {
            auto b = canonical_invariant(a, gens, ctx);
            for (const auto& [e, coef] : b.expansion)
                CHECK_NOTHROW(coef.eval({Rational(1, 4)}));
        }
    auto dctx = dih_equal_ctx(5);
    GeneratorSet dgens = GeneratorSet::dihedral(dctx.group());
    for (uint32_t d : {10u, 12u})
        for (const auto& a : dgens.monomials_of_weight(d)) {
            auto b = canonical_invariant(a, dgens, dctx);
            for (const auto& [e, coef] : b.expansion)
                CHECK_NOTHROW(coef.eval({Rational(1, 5)}));
        }
    // two free parameters: a point of the h_c = 1 line away from the
    // equal-parameter point
    auto g4 = ReflectionGroup::dihedral(4);
    DunklContext ctx4(g4, MultiplicityFunction::symbolic(g4));
    GeneratorSet g4gens = GeneratorSet::dihedral(g4);
    std::vector<Rational> pt{Rational(1, 8), Rational(3, 8)};
    for (uint32_t d = 2; d <= 12; ++d)
        for (const auto& a : g4gens.monomials_of_weight(d)) {
            auto b = canonical_invariant(a, g4gens, ctx4);
            for (const auto& [e, coef] : b.expansion)
                CHECK_NOTHROW(coef.eval(pt));
        }
}

TEST_CASE("mean-centered power-sum reductions") {
    // nabla_{p_r}(ebar_k) = (-1)^r (n-k+1)...(n-k+r) ((1-nc)^r - (1-nc))/(n^r c) ebar_{k-r}
    for (int n : {3, 4}) {
        auto ctx = sym_ctx(n);
        for (int k = 1; k <= n; ++k) {
            Poly ek = ebar(k, n);
            for (int r = 1; r <= k; ++r) {
                Poly pr(n);
                for (int i = 0; i < n; ++i) {
                    Mono m(static_cast<size_t>(n), 0);
                    m[static_cast<size_t>(i)] = static_cast<uint32_t>(r);
                    pr.add_term(m, Scalar(1));
                }
                Poly got = ctx.nabla_poly(pr, ek);
                Scalar one_minus_nc = Scalar(1) - Scalar(Rational(n)) * c_sym();
                Scalar numer = one_minus_nc;
                for (int i = 1; i < r; ++i)
                    numer *= one_minus_nc;
                numer -= one_minus_nc;
                Rational fac(1);
                for (int t = 1; t <= r; ++t)
                    fac *= Rational(n - k + t);
                Rational nr(1);
                for (int t = 0; t < r; ++t)
                    nr *= Rational(n);
                Scalar coef = Scalar(fac * (r % 2 == 0 ? Rational(1) : Rational(-1))) * numer /
                              (Scalar(nr) * c_sym());
                CHECK(got == ebar(k - r, n).scaled(coef));
            }
        }
    }
}

TEST_CASE("power sums detect only the matching elementary invariant") {
    // p_i(nabla)(e_k^(c)) = const * delta_{ik} for i <= k
    auto ctx = sym_ctx(3);
    GeneratorSet gens = GeneratorSet::elementary_symmetric(3);
    GeneratorSet ps = GeneratorSet::power_sums(3);
    for (uint32_t k = 2; k <= 3; ++k) {
        Poly ekc = elementary_invariant(k, gens, ctx).polynomial;
        for (uint32_t i = 1; i <= k; ++i) {
            Poly applied = ctx.nabla_poly(ctx.group().dualize(ps.gens()[i - 1]), ekc);
            if (i < k) {
                CHECK(applied.is_zero());
            } else {
                CHECK(!applied.is_zero());
                CHECK(applied.degree() == 0);
            }
        }
    }
}

TEST_CASE("quasiharmonic spaces") {
    // m=5: degree 5 with bound 5 is one-dimensional, spanned by e_m
    auto ctx5 = dih_equal_ctx(5);
    GeneratorSet g5 = GeneratorSet::dihedral(ctx5.group());
    auto qs = quasiharmonic_space(5, 5, g5, ctx5);
    REQUIRE(qs.size() == 1);
    CHECK(proportionality_ratio(g5.expand({0, 1}), qs[0]).has_value());
    // degree 2 with bound 2: no conditions, the whole slice
    auto qs2 = quasiharmonic_space(2, 2, g5, ctx5);
    CHECK(qs2.size() == 1);
    // m=3: degree 6 = 2h with bound h=3 is one-dimensional
    auto ctx3 = dih_equal_ctx(3);
    GeneratorSet g3 = GeneratorSet::dihedral(ctx3.group());
    auto q6 = quasiharmonic_space(6, 3, g3, ctx3);
    CHECK(q6.size() == 1);
    // Sn: the degree-d_k space with bound d_k is spanned by e_{d_k}^(c)
    auto ctxs = sym_ctx(3);
    GeneratorSet ge = GeneratorSet::elementary_symmetric(3);
    for (uint32_t d : {2u, 3u}) {
        auto q = quasiharmonic_space(d, d, ge, ctxs);
        REQUIRE(q.size() == 1);
        CHECK(proportionality_ratio(elementary_invariant(d, ge, ctxs).polynomial, q[0]).has_value());
    }
}

TEST_CASE("pairing of positive-degree invariants divisible by 1 - h_c") {
    // dihedral: divisor 1 - mc; S_n in mean-centered variables: 1 - nc
    for (int m : {3, 4}) {
        auto ctx = dih_equal_ctx(m);
        GeneratorSet gens = GeneratorSet::dihedral(ctx.group());
        Scalar divisor = Scalar(1) - Scalar(Rational(m)) * c_sym();
        for (uint32_t d = 2; d <= 6; ++d)
            for (const auto& a : gens.monomials_of_weight(d))
                for (const auto& b : gens.monomials_of_weight(d)) {
                    Scalar q = ctx.pairing(gens.expand(a), gens.expand(b)) / divisor;
                    CHECK(q.is_polynomial());
                }
    }
    auto ctx4 = sym_ctx(4);
    Scalar divisor = Scalar(1) - Scalar(4) * c_sym();
    std::vector<Poly> inv_pairs = {ebar(2, 4), ebar(3, 4), ebar(4, 4), ebar(2, 4) * ebar(2, 4),
                                   ebar(2, 4) * ebar(3, 4)};
    for (const Poly& u : inv_pairs)
        for (const Poly& v : inv_pairs)
            if (u.degree() == v.degree()) {
                Scalar q = ctx4.pairing(u, v) / divisor;
                CHECK(q.is_polynomial());
            }
}

TEST_CASE("dihedral kernel structure of canonical invariants") {
    // L^{a1+1}(b_a) = 0 and b_a = e2^{a1} b_{(0,a2)}
    for (int m : {3, 4}) {
        auto ctx = dih_equal_ctx(m);
        GeneratorSet gens = GeneratorSet::dihedral(ctx.group());
        for (uint32_t d = 2; d <= static_cast<uint32_t>(2 * m + 4); ++d) {
            for (const auto& a : gens.monomials_of_weight(d)) {
                auto b = canonical_invariant(a, gens, ctx);
                Poly cur = b.polynomial;
                for (uint32_t i = 0; i <= a[0]; ++i)
                    cur = ctx.laplacian(cur);
                CHECK(cur.is_zero());
                auto b0 = canonical_invariant({0, a[1]}, gens, ctx);
                CHECK(b.polynomial == gens.expand({a[0], 0}) * b0.polynomial);
            }
        }
    }
}
