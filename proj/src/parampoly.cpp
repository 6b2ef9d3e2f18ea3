#include "dunkl/parampoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dunkl {

ParamPoly::ParamPoly(Cyclotomic constant) {
    if (!constant.is_zero())
        terms_.push_back({PExp{}, std::move(constant)});
}

ParamPoly ParamPoly::symbol(int index, uint32_t order) {
    ParamPoly p;
    PExp e;
    e.e[static_cast<size_t>(index)] = 1;
    p.terms_.push_back({e, Cyclotomic::one(order)});
    return p;
}

uint32_t ParamPoly::degree_in(int var) const {
    uint32_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.e[static_cast<size_t>(var)]);
    return d;
}

Cyclotomic ParamPoly::constant_coeff() const {
    if (!terms_.empty() && terms_.front().first.total() == 0)
        return terms_.front().second;
    return Cyclotomic(Rational(0));
}

void ParamPoly::add_term(const PExp& e, const Cyclotomic& c) {
    if (c.is_zero())
        return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const PExp& k) { return t.first < k; });
    if (it != terms_.end() && it->first == e) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    } else {
        terms_.insert(it, {e, c});
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            r.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->first < ia->first) {
            r.terms_.push_back(*ib++);
        } else {
            Cyclotomic c = ia->second + ib->second;
            if (!c.is_zero())
                r.terms_.push_back({ia->first, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return r;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
    return a + (-b);
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::map<PExp, Cyclotomic> acc;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            PExp e;
            e.e[0] = ea.e[0] + eb.e[0];
            e.e[1] = ea.e[1] + eb.e[1];
            auto [it, fresh] = acc.try_emplace(e, ca * cb);
            if (!fresh)
                it->second += ca * cb;
        }
    }
    ParamPoly r;
    for (auto& [e, c] : acc)
        if (!c.is_zero())
            r.terms_.push_back({e, std::move(c)});
    return r;
}

ParamPoly ParamPoly::scaled(const Cyclotomic& s) const {
    if (s.is_zero())
        return {};
    ParamPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c *= s;
    return r;
}

Cyclotomic ParamPoly::eval(const std::vector<Rational>& point) const {
    Cyclotomic acc(Rational(0));
    for (const auto& [e, c] : terms_) {
        Rational v(1);
        for (size_t i = 0; i < 2; ++i) {
            for (uint32_t k = 0; k < e.e[i]; ++k) {
                if (i >= point.size())
                    throw std::domain_error("ParamPoly::eval: missing parameter value");
                v *= point[i];
            }
        }
        acc += c.scaled(v);
    }
    return acc;
}

ParamPoly ParamPoly::divided_by(const ParamPoly& g) const {
    if (g.is_zero())
        throw std::domain_error("ParamPoly: division by zero");
    ParamPoly rem = *this, quot;
    const PExp& lg = g.terms_.back().first;
    Cyclotomic lginv = g.leading_coeff().inverse();
    while (!rem.is_zero()) {
        const PExp& lr = rem.terms_.back().first;
        if (lr.e[0] < lg.e[0] || lr.e[1] < lg.e[1])
            throw std::logic_error("ParamPoly: inexact division");
        PExp q;
        q.e[0] = lr.e[0] - lg.e[0];
        q.e[1] = lr.e[1] - lg.e[1];
        Cyclotomic qc = rem.leading_coeff() * lginv;
        quot.add_term(q, qc);
        ParamPoly prod;
        for (const auto& [e, c] : g.terms_) {
            PExp pe;
            pe.e[0] = e.e[0] + q.e[0];
            pe.e[1] = e.e[1] + q.e[1];
            prod.terms_.push_back({pe, c * qc});
        }
        std::sort(prod.terms_.begin(), prod.terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        rem = rem - prod;
    }
    return quot;
}

namespace {

// Univariate views used by the gcd routines.
using UP1 = std::vector<Cyclotomic>;  // over Q(zeta), coeffs[i] * t^i
using UP2 = std::vector<UP1>;         // over Q(zeta)[c1], in c2

void trim1(UP1& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

UP1 up1_rem(UP1 a, const UP1& b) {
    trim1(a);
    Cyclotomic lb = b.back().inverse();
    while (a.size() >= b.size()) {
        Cyclotomic c = a.back() * lb;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        trim1(a);
    }
    return a;
}

UP1 up1_gcd(UP1 a, UP1 b) {
    trim1(a);
    trim1(b);
    while (!b.empty()) {
        UP1 r = up1_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty())
        return a;
    Cyclotomic la = a.back().inverse();
    for (auto& c : a)
        c *= la;
    return a;
}

UP1 up1_mul(const UP1& a, const UP1& b) {
    if (a.empty() || b.empty())
        return {};
    UP1 r(a.size() + b.size() - 1, Cyclotomic(Rational(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim1(r);
    return r;
}

UP1 up1_divexact(UP1 a, const UP1& b) {
    trim1(a);
    UP1 q;
    if (a.size() >= b.size())
        q.assign(a.size() - b.size() + 1, Cyclotomic(Rational(0)));
    Cyclotomic lb = b.back().inverse();
    while (a.size() >= b.size()) {
        Cyclotomic c = a.back() * lb;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        trim1(a);
    }
    if (!a.empty())
        throw std::logic_error("ParamPoly: up1 inexact division");
    return q;
}

void trim2(UP2& p) {
    while (!p.empty()) {
        trim1(p.back());
        if (!p.back().empty())
            break;
        p.pop_back();
    }
}

UP1 up2_content(const UP2& p) {
    UP1 g;
    for (const auto& c : p)
        g = up1_gcd(g, c);
    return g;
}

UP2 up2_scale(UP2 p, const UP1& s) {
    for (auto& c : p)
        c = up1_mul(c, s);
    return p;
}

UP2 up2_divexact_up1(UP2 p, const UP1& s) {
    for (auto& c : p) {
        trim1(c);
        if (!c.empty())
            c = up1_divexact(std::move(c), s);
    }
    return p;
}

// pseudo-remainder of a by b in (Q(zeta)[c1])[c2]
UP2 up2_prem(UP2 a, const UP2& b) {
    trim2(a);
    const UP1& lb = b.back();
    while (a.size() >= b.size()) {
        UP1 la = a.back();
        size_t shift = a.size() - b.size();
        // a = a*lb - la*shifted(b)
        UP2 na(a.size());
        for (size_t i = 0; i + 1 < a.size(); ++i)
            na[i] = up1_mul(a[i], lb);
        for (size_t i = 0; i < b.size(); ++i) {
            UP1 t = up1_mul(b[i], la);
            UP1& dst = na[shift + i];
            if (dst.size() < t.size())
                dst.resize(t.size(), Cyclotomic(Rational(0)));
            for (size_t k = 0; k < t.size(); ++k)
                dst[k] -= t[k];
        }
        na.pop_back();
        a = std::move(na);
        trim2(a);
    }
    return a;
}

UP2 up2_primitive(UP2 p) {
    trim2(p);
    if (p.empty())
        return p;
    UP1 c = up2_content(p);
    return up2_divexact_up1(std::move(p), c);
}

UP2 up2_gcd(UP2 a, UP2 b) {
    trim2(a);
    trim2(b);
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    UP1 ca = up2_content(a), cb = up2_content(b);
    UP1 cg = up1_gcd(ca, cb);
    a = up2_divexact_up1(std::move(a), ca);
    b = up2_divexact_up1(std::move(b), cb);
    while (true) {
        if (b.size() > a.size())
            std::swap(a, b);
        UP2 r = up2_prem(a, b);
        trim2(r);
        if (r.empty())
            break;
        a = std::move(b);
        b = up2_primitive(std::move(r));
    }
    return up2_scale(up2_primitive(std::move(b)), cg);
}

UP1 to_up1(const ParamPoly& p, int var) {
    UP1 r(p.degree_in(var) + 1, Cyclotomic(Rational(0)));
    for (const auto& [e, c] : p.terms())
        r[e.e[static_cast<size_t>(var)]] += c;
    trim1(r);
    return r;
}

ParamPoly from_up1(const UP1& p, int var) {
    ParamPoly r;
    for (size_t i = 0; i < p.size(); ++i) {
        PExp e;
        e.e[static_cast<size_t>(var)] = static_cast<uint32_t>(i);
        r.add_term(e, p[i]);
    }
    return r;
}

UP2 to_up2(const ParamPoly& p) {
    UP2 r(p.degree_in(1) + 1);
    for (const auto& [e, c] : p.terms()) {
        UP1& row = r[e.e[1]];
        if (row.size() <= e.e[0])
            row.resize(e.e[0] + 1, Cyclotomic(Rational(0)));
        row[e.e[0]] += c;
    }
    trim2(r);
    return r;
}

ParamPoly from_up2(const UP2& p) {
    ParamPoly r;
    for (size_t j = 0; j < p.size(); ++j) {
        for (size_t i = 0; i < p[j].size(); ++i) {
            PExp e;
            e.e[0] = static_cast<uint32_t>(i);
            e.e[1] = static_cast<uint32_t>(j);
            r.add_term(e, p[j][i]);
        }
    }
    return r;
}

}  // namespace

ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.is_constant() || b.is_constant())
        return ParamPoly(Cyclotomic(Rational(1)));
    bool use0 = a.degree_in(0) > 0 || b.degree_in(0) > 0;
    bool use1 = a.degree_in(1) > 0 || b.degree_in(1) > 0;
    if (use0 && use1)
        return from_up2(up2_gcd(to_up2(a), to_up2(b)));
    int var = use1 ? 1 : 0;
    return from_up1(up1_gcd(to_up1(a, var), to_up1(b, var)), var);
}

}  // namespace dunkl
