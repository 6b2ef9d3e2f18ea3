#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dunkl/poly.hpp"

using namespace dunkl;

namespace {

Poly x(int arity, int i) { return Poly::variable(arity, i); }

Poly rnd_poly(std::mt19937_64& rng, int arity, int max_deg, int nterms) {
    std::uniform_int_distribution<int> e(0, max_deg);
    std::uniform_int_distribution<long> coef(-5, 5);
    Poly p(arity);
    for (int t = 0; t < nterms; ++t) {
        Mono m(static_cast<size_t>(arity));
        for (auto& v : m)
            v = static_cast<uint32_t>(e(rng));
        p.add_term(m, Scalar(Rational(coef(rng))));
    }
    return p;
}

}  // namespace

TEST_CASE("poly_mul basics") {
    Poly a = x(2, 0) + x(2, 1);
    Poly b = x(2, 0) - x(2, 1);
    Poly x2 = x(2, 0) * x(2, 0), y2 = x(2, 1) * x(2, 1);
    CHECK(a * b == x2 - y2);
    Poly one = Poly::constant(2, Scalar(1));
    CHECK(a * one == a);
    Poly sq = b * b;
    CHECK(sq == x2 - x(2, 0) * x(2, 1).scaled(Scalar(2)) + y2);
    CHECK_THROWS_AS(a * Poly::variable(3, 0), std::domain_error);
}

TEST_CASE("exact division") {
    Poly d = x(2, 0) - x(2, 1);
    Poly num = x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1);
    auto q = num.divided_by(d);
    REQUIRE(q.has_value());
    CHECK(*q == x(2, 0) + x(2, 1));

    Poly bad = x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1);
    CHECK(!bad.divided_by(d).has_value());

    // (1 - s12) x1^2 = x1^2 - x2^2, then divide
    Poly swapped = x(2, 1) * x(2, 1);
    auto q2 = (x(2, 0) * x(2, 0) - swapped).divided_by(d);
    REQUIRE(q2.has_value());
    CHECK(*q2 == x(2, 0) + x(2, 1));
}

TEST_CASE("constant term") {
    Poly f = Poly::constant(2, Scalar(3)) + x(2, 0);
    CHECK(f.constant_term() == Scalar(3));
    CHECK((x(2, 0) * x(2, 1)).constant_term().is_zero());
    // (1-c) + c*x1
    Scalar c = Scalar::symbol(0);
    Poly g = Poly::constant(2, Scalar(1) - c) + x(2, 0).scaled(c);
    CHECK(g.constant_term() == Scalar(1) - c);
}

TEST_CASE("substitution") {
    // x1^2 under x1 -> x1 - x2 (x2 fixed)
    Poly f = x(2, 0) * x(2, 0);
    Poly img = f.substituted({x(2, 0) - x(2, 1), x(2, 1)});
    CHECK(img == x(2, 0) * x(2, 0) - (x(2, 0) * x(2, 1)).scaled(Scalar(2)) + x(2, 1) * x(2, 1));

    // e2(x1,x2) under x_i -> x_i - (x1+x2)/2 gives -(x1-x2)^2/4
    Poly e2 = x(2, 0) * x(2, 1);
    Poly half = (x(2, 0) + x(2, 1)).scaled(Scalar(Rational(1, 2)));
    Poly sub = e2.substituted({x(2, 0) - half, x(2, 1) - half});
    Poly d = x(2, 0) - x(2, 1);
    CHECK(sub == (d * d).scaled(Scalar(Rational(-1, 4))));

    Poly k = Poly::constant(2, Scalar(7));
    CHECK(k.substituted({x(2, 1), x(2, 0)}) == k);
}

TEST_CASE("ring axioms and division round-trip (sampled)") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        Poly f = rnd_poly(rng, 3, 3, 4), g = rnd_poly(rng, 3, 3, 4), h = rnd_poly(rng, 3, 2, 3);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f + g == g + f);
        if (!g.is_zero()) {
            auto q = (f * g).divided_by(g);
            REQUIRE(q.has_value());
            CHECK(*q == f);
        }
    }
}

TEST_CASE("homogeneous decomposition") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 20; ++i) {
        Poly f = rnd_poly(rng, 3, 3, 6);
        Poly sum(3);
        for (uint32_t d : f.degrees_present()) {
            Poly comp = f.homogeneous_component(d);
            CHECK(comp.is_homogeneous());
            sum += comp;
        }
        CHECK(sum == f);
    }
}

TEST_CASE("substitute distributes over sums and products") {
    std::mt19937_64 rng(31);
    std::vector<Poly> images{x(2, 0) + x(2, 1), x(2, 0) - x(2, 1).scaled(Scalar(2))};
    for (int i = 0; i < 20; ++i) {
        Poly f = rnd_poly(rng, 2, 3, 4), g = rnd_poly(rng, 2, 3, 4);
        CHECK((f + g).substituted(images) == f.substituted(images) + g.substituted(images));
        CHECK((f * g).substituted(images) == f.substituted(images) * g.substituted(images));
    }
}

TEST_CASE("graded slice enumeration") {
    GradedSlice s = GradedSlice::of(3, 2);
    CHECK(s.basis.size() == 6);  // C(2+2,2)
    // graded-lex descending starts at (2,0,0)
    CHECK(s.basis.front() == Mono{2, 0, 0});
    CHECK(s.basis.back() == Mono{0, 0, 2});
    for (size_t i = 0; i < s.basis.size(); ++i)
        CHECK(s.index_of(s.basis[i]) == i);
    CHECK(!s.index_of(Mono{1, 0, 0}).has_value());

    GradedSlice s0 = GradedSlice::of(2, 0);
    CHECK(s0.basis.size() == 1);
}

TEST_CASE("term iteration is graded-lex descending") {
    Poly f = x(2, 1) + x(2, 0) * x(2, 0) + Poly::constant(2, Scalar(5));
    std::vector<Mono> order;
    for (const auto& [m, c] : f.terms())
        order.push_back(m);
    CHECK(order == std::vector<Mono>{{2, 0}, {0, 1}, {0, 0}});
}
