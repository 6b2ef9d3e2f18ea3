#include "dunkl/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dunkl {

namespace {

// Scale making all rational coordinates integral with overall content 1.
Rational integralizing_scale(const ParamPoly& p) {
    mpz_class g = 0, l = 1;
    for (const auto& [e, c] : p.terms()) {
        for (const auto& r : c.coeffs()) {
            if (r.is_zero())
                continue;
            g = gcd_z(g, r.num());
            l = lcm_z(l, r.den());
        }
    }
    if (g == 0)
        return Rational(1);
    mpq_class q(l, g);
    q.canonicalize();
    return Rational(q);
}

}  // namespace

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly::constant(Rational(1));
        return;
    }
    if (!den_.is_one()) {
        ParamPoly g = ParamPoly::gcd(num_, den_);
        if (!g.is_one() && !g.is_constant()) {
            num_ = num_.divided_by(g);
            den_ = den_.divided_by(g);
        }
    }
    // Make the denominator monic, then clear rational content so its
    // coordinates are integral and primitive with positive leading entry.
    Cyclotomic lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Cyclotomic inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    Rational s = integralizing_scale(den_);
    if (!s.is_one()) {
        num_ = num_.scaled(Cyclotomic(s));
        den_ = den_.scaled(Cyclotomic(s));
    }
}

RatFun RatFun::fraction(const ParamPoly& num, const ParamPoly& den) {
    if (den.is_zero())
        throw std::domain_error("RatFun: zero denominator");
    RatFun r;
    r.num_ = num;
    r.den_ = den;
    r.normalize();
    return r;
}

RatFun RatFun::falling_binomial(int index, uint32_t k, uint32_t order) {
    ParamPoly c = ParamPoly::symbol(index, order);
    ParamPoly acc = ParamPoly::constant(Rational(1));
    Rational fact(1);
    for (uint32_t i = 0; i < k; ++i) {
        acc *= c - ParamPoly::constant(Rational(static_cast<long>(i)));
        fact *= Rational(static_cast<long>(i + 1));
    }
    return RatFun(acc.scaled(Cyclotomic(fact.inverse())));
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    RatFun r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
    } else {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.normalize();
    return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return a + (-b);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero())
        return RatFun();
    RatFun r;
    if (a.den_.is_one() && b.den_.is_one()) {
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_;
        return r;
    }
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    return a * b.inverse();
}

RatFun RatFun::inverse() const {
    if (is_zero())
        throw std::domain_error("RatFun: inverse of zero");
    RatFun r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

Cyclotomic RatFun::eval(const std::vector<Rational>& point) const {
    Cyclotomic d = den_.eval(point);
    if (d.is_zero())
        throw PoleError(poly_str(Field{1, {"c1", "c2"}}, den_));
    return num_.eval(point) * d.inverse();
}

std::optional<Rational> RatFun::as_rational() const {
    if (!den_.is_one() || !num_.is_constant())
        return std::nullopt;
    Cyclotomic c = num_.constant_coeff();
    if (!c.is_rational())
        return std::nullopt;
    return c.rational_part();
}

std::string RatFun::poly_str(const Field& f, const ParamPoly& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    const auto& ts = p.terms();
    // graded-lex descending
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool negated = cs.size() && cs[0] == '-';
        if (negated && !first)
            cs = cs.substr(1);
        os << (first ? "" : (negated ? " - " : " + "));
        first = false;
        std::string mono;
        for (size_t i = 0; i < 2; ++i) {
            if (e.e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += i < f.params.size() ? f.params[i] : (i == 0 ? "c1" : "c2");
            if (e.e[i] > 1)
                mono += "^" + std::to_string(e.e[i]);
        }
        if (mono.empty()) {
            os << cs;
        } else if (cs == "1") {
            os << mono;
        } else if (cs == "-1") {
            os << "-" << mono;
        } else {
            os << cs << "*" << mono;
        }
    }
    return os.str();
}

std::string RatFun::str(const Field& f) const {
    return "(" + poly_str(f, num_) + ")/(" + poly_str(f, den_) + ")";
}

std::string RatFun::str_plain(const Field& f) const {
    if (den_.is_one())
        return poly_str(f, num_);
    return str(f);
}

namespace {

struct Parser {
    const Field& f;
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const Field& field, const std::string& str) : f(field), s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::domain_error("RatFun::parse: " + what + " at offset " + std::to_string(pos) + " in '" + s + "'");
    }

    Cyclotomic parse_coeff() {
        skip_ws();
        if (pos < s.size() && s[pos] == '[') {
            size_t close = s.find(']', pos);
            if (close == std::string::npos)
                fail("unterminated cyclotomic coordinates");
            std::string tok = s.substr(pos, close - pos + 1);
            pos = close + 1;
            return Cyclotomic::parse(f.cyclo_order, tok);
        }
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (pos == start)
            fail("expected coefficient");
        return Cyclotomic(Rational::parse(s.substr(start, pos - start)));
    }

    int param_index() {
        skip_ws();
        for (size_t i = 0; i < f.params.size(); ++i) {
            const std::string& name = f.params[i];
            if (s.compare(pos, name.size(), name) == 0) {
                pos += name.size();
                return static_cast<int>(i);
            }
        }
        return -1;
    }

    // term := [coeff] { '*' symbol ['^' int] } , coeff may be implicit 1
    void parse_term(ParamPoly& acc, bool negative) {
        Cyclotomic coeff = Cyclotomic::one(f.cyclo_order);
        PExp e;
        skip_ws();
        bool saw_any = false;
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '[')) {
            coeff = parse_coeff();
            saw_any = true;
        }
        while (true) {
            size_t save = pos;
            if (saw_any && !eat('*')) {
                break;
            }
            int idx = param_index();
            if (idx < 0) {
                pos = save;
                break;
            }
            uint32_t p = 1;
            if (eat('^')) {
                skip_ws();
                size_t st = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    ++pos;
                if (st == pos)
                    fail("expected exponent");
                p = static_cast<uint32_t>(std::stoul(s.substr(st, pos - st)));
            }
            e.e[static_cast<size_t>(idx)] += p;
            saw_any = true;
        }
        if (!saw_any)
            fail("expected term");
        if (negative)
            coeff = -coeff;
        acc.add_term(e, coeff);
    }

    ParamPoly parse_poly() {
        ParamPoly acc;
        bool neg = eat('-');
        parse_term(acc, neg);
        while (true) {
            skip_ws();
            if (eat('+')) {
                parse_term(acc, false);
            } else if (eat('-')) {
                parse_term(acc, true);
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace

RatFun RatFun::parse(const Field& f, const std::string& s) {
    Parser p(f, s);
    p.skip_ws();
    if (p.pos < s.size() && s[p.pos] == '(') {
        ++p.pos;
        ParamPoly num = p.parse_poly();
        if (!p.eat(')'))
            p.fail("expected ')'");
        if (!p.eat('/'))
            p.fail("expected '/'");
        if (!p.eat('('))
            p.fail("expected '('");
        ParamPoly den = p.parse_poly();
        if (!p.eat(')'))
            p.fail("expected ')'");
        p.skip_ws();
        if (p.pos != s.size())
            p.fail("trailing characters");
        return fraction(num, den);
    }
    ParamPoly num = p.parse_poly();
    p.skip_ws();
    if (p.pos != s.size())
        p.fail("trailing characters");
    return RatFun(num);
}

}  // namespace dunkl
