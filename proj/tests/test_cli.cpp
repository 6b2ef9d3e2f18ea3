#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dunkl/json_io.hpp"
#include "dunkl/verify.hpp"

using namespace dunkl;

namespace {

Poly rnd_poly(std::mt19937_64& rng, int arity, uint32_t order) {
    std::uniform_int_distribution<long> coef(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    Poly p(arity);
    for (int t = 0; t < 6; ++t) {
        Mono m(static_cast<size_t>(arity));
        for (auto& e : m)
            e = static_cast<uint32_t>(rng() % 4);
        ParamPoly pp;
        PExp pe;
        pe.e[0] = static_cast<uint32_t>(rng() % 3);
        if (order > 1) {
            std::vector<Rational> cs(Cyclotomic::euler_phi(order));
            cs[0] = Rational(coef(rng), den(rng));
            cs[1] = Rational(coef(rng));
            pp.add_term(pe, Cyclotomic(order, cs));
        } else {
            pp.add_term(pe, Cyclotomic(Rational(coef(rng), den(rng))));
        }
        p.add_term(m, Scalar(pp));
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial JSON schema round-trips bit-exactly") {
    std::mt19937_64 rng(2718);
    Field f1 = Field::with_params({"c"});
    Field f2 = Field::with_params({"c1", "c2"}, 4);
    for (int t = 0; t < 30; ++t) {
        Poly p = rnd_poly(rng, 3, 1);
        nlohmann::json j = poly_to_json(p, f1);
        Field back;
        Poly q = poly_from_json(j, &back);
        CHECK(q == p);
        CHECK(back.params == f1.params);
        CHECK(poly_to_json(q, back) == j);

        Poly pz = rnd_poly(rng, 2, 4);
        nlohmann::json jz = poly_to_json(pz, f2);
        Poly qz = poly_from_json(jz, &back);
        CHECK(qz == pz);
        CHECK(poly_to_json(qz, back).dump() == jz.dump());
    }
}

TEST_CASE("json terms are sorted graded-lex descending") {
    Field f;
    Poly p(2);
    p.add_term(Mono{0, 1}, Scalar(1));
    p.add_term(Mono{2, 0}, Scalar(2));
    p.add_term(Mono{1, 1}, Scalar(3));
    auto j = poly_to_json(p, f);
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0]["exp"] == nlohmann::json::array({2, 0}));
    CHECK(j["terms"][1]["exp"] == nlohmann::json::array({1, 1}));
    CHECK(j["terms"][2]["exp"] == nlohmann::json::array({0, 1}));
}

TEST_CASE("suite registry") {
    auto names = suite_names();
    CHECK(names.size() == 12);
    for (const char* expected :
         {"commute", "sl2", "berest", "orthogonality", "frobenius", "kernel", "gf", "jacobi", "limit",
          "iwasaki", "nablapr", "phic-poly"})
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    CHECK_THROWS_AS(run_suite("nonsense", VerifyOptions{}), std::domain_error);
    // suites that require a group family reject the wrong one
    VerifyOptions opt;
    opt.group_spec = "Sn:3";
    CHECK_THROWS_AS(run_suite("kernel", opt), std::domain_error);
    opt.group_spec = "I2:4";
    CHECK_THROWS_AS(run_suite("limit", opt), std::domain_error);
}

TEST_CASE("verify reports are deterministic under a fixed seed") {
    VerifyOptions opt;
    opt.group_spec = "Sn:3";
    opt.seed = 7;
    VerifyReport a = run_suite("berest", opt);
    VerifyReport b = run_suite("berest", opt);
    CHECK(a.cases == b.cases);
    CHECK(a.failures.size() == b.failures.size());
    CHECK(a.passed());
    // parallel assembly is ordered by suite name
    auto reports = run_suites({"nablapr", "berest", "commute"}, opt, true);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].suite == "berest");
    CHECK(reports[1].suite == "commute");
    CHECK(reports[2].suite == "nablapr");
}

TEST_CASE("numeric multiplicity specialization routes through evaluation") {
    auto g = ReflectionGroup::symmetric(3);
    DunklContext sym(g, MultiplicityFunction::symbolic(g));
    DunklContext num(g, MultiplicityFunction::numeric(g, {Rational(1, 2)}));
    Poly f = Poly::variable(3, 0) * Poly::variable(3, 0);
    Poly sym_applied = sym.dunkl_apply(0, f);
    Poly num_applied = num.dunkl_apply(0, f);
    // evaluating the symbolic result at c = 1/2 gives the numeric one
    Poly evaluated(3);
    for (const auto& [m, c] : sym_applied.terms())
        evaluated.add_term(m, Scalar(c.eval({Rational(1, 2)})));
    CHECK(evaluated == num_applied);
}
