// Command-line front end: canonical invariants, verification suites, and
// singular-value limits, with JSON / plain / LaTeX output.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "dunkl/json_io.hpp"
#include "dunkl/verify.hpp"

using namespace dunkl;
using nlohmann::json;

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;
constexpr int kExitPole = 4;

struct GroupSetup {
    ReflectionGroup group;
    DunklContext ctx;
    GeneratorSet gens;
    std::vector<std::string> gen_names;
};

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(Rational::parse(tok));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

GroupSetup make_setup(const std::string& spec, const std::string& params) {
    ReflectionGroup g = ReflectionGroup::parse_spec(spec);
    MultiplicityFunction mult = params == "symbolic"
                                    ? MultiplicityFunction::symbolic(g)
                                    : MultiplicityFunction::numeric(g, parse_rational_list(params));
    GeneratorSet gens = GeneratorSet::standard_for(g);
    std::vector<std::string> names;
    if (g.kind() == GroupKind::Symmetric) {
        for (int k = 1; k <= g.parameter(); ++k)
            names.push_back("e" + std::to_string(k));
    } else {
        names = {"e2", "e" + std::to_string(g.parameter())};
    }
    return GroupSetup{g, DunklContext(g, std::move(mult)), std::move(gens), std::move(names)};
}

std::string index_str(const ExpVec& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i)
        s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

std::string monomial_str(const ExpVec& a, const std::vector<std::string>& names, bool latex) {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        if (!s.empty())
            s += latex ? " " : "*";
        s += latex ? names[i] : names[i];
        if (a[i] > 1)
            s += latex ? ("^{" + std::to_string(a[i]) + "}") : ("^" + std::to_string(a[i]));
    }
    return s.empty() ? "1" : s;
}

void print_canonical(const CanonicalInvariant& inv, const GroupSetup& setup, const std::string& format) {
    const Field& f = setup.ctx.field();
    if (format == "json") {
        json j;
        j["group"] = setup.group.spec_string();
        j["index"] = inv.index;
        j["weighted_degree"] = setup.gens.weighted_degree(inv.index);
        j["generators"] = setup.gen_names;
        j["params"] = f.params;
        json terms = json::array();
        for (auto it = inv.expansion.rbegin(); it != inv.expansion.rend(); ++it) {
            json t;
            t["index"] = it->first;
            t["coef"] = it->second.str(f);
            terms.push_back(std::move(t));
        }
        j["expansion"] = std::move(terms);
        j["polynomial"] = poly_to_json(inv.polynomial, f);
        std::cout << j.dump(2) << "\n";
        return;
    }
    bool latex = format == "latex";
    std::ostringstream os;
    os << (latex ? "b_{" + index_str(inv.index) + "} = " : "b_" + index_str(inv.index) + " = ");
    bool first = true;
    for (auto it = inv.expansion.rbegin(); it != inv.expansion.rend(); ++it) {
        const auto& [a, coef] = *it;
        std::string cs = coef.str_plain(f);
        bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
        if (neg && !first)
            cs = cs.substr(1);
        os << (first ? "" : (neg ? " - " : " + "));
        first = false;
        std::string mono = monomial_str(a, setup.gen_names, latex);
        if (cs == "1" && mono != "1") {
            os << mono;
            continue;
        }
        if (latex) {
            os << "\\left(" << cs << "\\right)" << (mono == "1" ? "" : " " + mono);
            continue;
        }
        bool wrap = cs.find(' ') != std::string::npos && cs[0] != '(';
        os << (wrap ? "(" + cs + ")" : cs);
        if (mono != "1")
            os << "*" << mono;
    }
    std::cout << os.str() << "\n";
}

json report_to_json(const VerifyReport& r) {
    json j;
    j["suite"] = r.suite;
    j["cases"] = r.cases;
    json fails = json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    j["failures"] = std::move(fails);
    if (!r.notes.empty())
        j["notes"] = r.notes;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Dunkl operators and canonical invariants of reflection groups"};
    app.require_subcommand(1);

    std::string group = "Sn:3", a_str, format = "json", params = "symbolic";
    std::vector<std::string> suites;
    int max_degree = -1, order = -1, degree = 0;
    uint64_t seed = 42;
    std::string at_str = "0";

    auto* canonical = app.add_subcommand("canonical", "compute a canonical invariant b_a");
    canonical->add_option("--group", group, "group spec, e.g. Sn:4 or I2:5")->required();
    canonical->add_option("--a", a_str, "exponent vector, e.g. 0,0,0,1")->required();
    canonical->add_option("--format", format, "json | plain | latex");
    canonical->add_option("--params", params, "symbolic, or rational multiplicity values");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suites, "suite names (repeatable), or 'all'")->required();
    verify->add_option("--group", group, "group spec override");
    verify->add_option("--max-degree", max_degree, "degree bound override");
    verify->add_option("--order", order, "truncation order override");
    verify->add_option("--seed", seed, "PRNG seed for sampled properties");
    verify->add_option("--format", format, "json | plain");

    auto* describe = app.add_subcommand("describe", "emit the group descriptor");
    describe->add_option("--group", group, "group spec")->required();

    auto* limit = app.add_subcommand("limit", "specialize an elementary canonical invariant");
    limit->add_option("--group", group, "group spec")->required();
    limit->add_option("--degree", degree, "invariant degree")->required();
    limit->add_option("--at", at_str, "rational parameter value")->required();
    limit->add_option("--format", format, "json | plain | latex");

    CLI11_PARSE(app, argc, argv);

    try {
        if (canonical->parsed()) {
            GroupSetup setup = make_setup(group, params);
            ExpVec a;
            for (const Rational& r : parse_rational_list(a_str)) {
                if (!r.is_integer() || r.sign() < 0)
                    throw std::domain_error("--a entries must be nonnegative integers");
                a.push_back(static_cast<uint32_t>(r.num().get_si()));
            }
            if (a.size() != setup.gens.rank())
                throw std::domain_error("--a must have one entry per generator");
            CanonicalInvariant inv = canonical_invariant(a, setup.gens, setup.ctx);
            print_canonical(inv, setup, format);
            return 0;
        }
        if (describe->parsed()) {
            std::cout << ReflectionGroup::parse_spec(group).describe_json() << "\n";
            return 0;
        }
        if (verify->parsed()) {
            VerifyOptions opt;
            if (verify->count("--group"))
                opt.group_spec = group;
            opt.max_degree = max_degree;
            opt.order = order;
            opt.seed = seed;
            std::vector<std::string> names = suites;
            if (names.size() == 1 && names[0] == "all")
                names = suite_names();
            auto reports = run_suites(names, opt, names.size() > 1);
            bool all_pass = true;
            if (format == "json") {
                json arr = json::array();
                for (const auto& r : reports) {
                    arr.push_back(report_to_json(r));
                    all_pass = all_pass && r.passed();
                }
                std::cout << (reports.size() == 1 ? arr[0].dump(2) : arr.dump(2)) << "\n";
            } else {
                for (const auto& r : reports) {
                    all_pass = all_pass && r.passed();
                    std::cout << "suite " << r.suite << ": " << r.cases << " cases, "
                              << (r.passed() ? "PASS" : "FAIL (" + std::to_string(r.failures.size()) + ")")
                              << "\n";
                    for (const auto& fl : r.failures)
                        std::cout << "  " << fl.input << "\n    expected: " << fl.expected
                                  << "\n    got:      " << fl.got << "\n";
                    for (const auto& n : r.notes)
                        std::cout << "  note: " << n << "\n";
                }
            }
            return all_pass ? 0 : kExitFailures;
        }
        if (limit->parsed()) {
            GroupSetup setup = make_setup(group, "symbolic");
            Rational at = Rational::parse(at_str);
            CanonicalInvariant inv = elementary_invariant(static_cast<uint32_t>(degree), setup.gens, setup.ctx);
            std::vector<Rational> point(setup.ctx.field().params.size(), at);
            try {
                Poly lim = limit_at(inv, point, setup.gens);
                Field numeric_field;  // constants only
                if (format == "json") {
                    json j;
                    j["group"] = setup.group.spec_string();
                    j["degree"] = degree;
                    j["at"] = at.str();
                    j["polynomial"] = poly_to_json(lim, numeric_field);
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << lim.str(numeric_field, setup.group.var_names()) << "\n";
                }
                return 0;
            } catch (const PoleError& e) {
                // report which coefficient carries the pole
                json j;
                j["group"] = setup.group.spec_string();
                j["degree"] = degree;
                j["at"] = at.str();
                j["pole"] = true;
                json offenders = json::array();
                for (const auto& [idx, coef] : inv.expansion) {
                    try {
                        coef.eval(point);
                    } catch (const PoleError&) {
                        offenders.push_back({{"index", idx}, {"coef", coef.str(setup.ctx.field())}});
                    }
                }
                j["offending_coefficients"] = std::move(offenders);
                std::cout << j.dump(2) << "\n";
                return kExitPole;
            }
        }
    } catch (const PoleError& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return kExitPole;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
