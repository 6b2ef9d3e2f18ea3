#include "dunkl/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dunkl {

Poly Poly::constant(int arity, const Scalar& c) {
    Poly p(arity);
    if (!c.is_zero())
        p.terms_.emplace(Mono(static_cast<size_t>(arity), 0), c);
    return p;
}

Poly Poly::variable(int arity, int index, const Scalar& coeff) {
    Poly p(arity);
    if (coeff.is_zero())
        return p;
    Mono m(static_cast<size_t>(arity), 0);
    m[static_cast<size_t>(index)] = 1;
    p.terms_.emplace(std::move(m), coeff);
    return p;
}

Poly Poly::monomial(Mono m, const Scalar& c) {
    Poly p(static_cast<int>(m.size()));
    if (!c.is_zero())
        p.terms_.emplace(std::move(m), c);
    return p;
}

uint32_t Poly::degree() const {
    return terms_.empty() ? 0 : mono_degree(terms_.begin()->first);
}

bool Poly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    return mono_degree(terms_.begin()->first) == mono_degree(terms_.rbegin()->first);
}

Scalar Poly::constant_term() const {
    Mono zero(static_cast<size_t>(arity_), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void Poly::set_coeff(const Mono& m, const Scalar& c) {
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

void Poly::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(arity_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.arity_ != b.arity_)
        throw std::domain_error("Poly: arity mismatch");
    Poly r = a;
    for (const auto& [m, c] : b.terms_)
        r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    if (a.arity_ != b.arity_)
        throw std::domain_error("Poly: arity mismatch");
    Poly r = a;
    for (const auto& [m, c] : b.terms_)
        r.add_term(m, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.arity_ != b.arity_)
        throw std::domain_error("Poly: arity mismatch");
    Poly r(a.arity_);
    Mono m(static_cast<size_t>(a.arity_));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Scalar& s) const {
    Poly r(arity_);
    if (s.is_zero())
        return r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, c * s);
    return r;
}

Poly Poly::pow(uint32_t k) const {
    Poly r = Poly::constant(arity_, Scalar(1));
    for (uint32_t i = 0; i < k; ++i)
        r *= *this;
    return r;
}

std::optional<Poly> Poly::divided_by(const Poly& g) const {
    if (g.is_zero())
        throw std::domain_error("Poly: division by zero");
    Poly rem = *this, quot(arity_);
    const Mono& lg = g.terms_.begin()->first;
    Scalar lgc_inv = g.terms_.begin()->second.inverse();
    while (!rem.is_zero()) {
        const Mono& lr = rem.terms_.begin()->first;
        bool divisible = true;
        for (size_t i = 0; i < lr.size(); ++i) {
            if (lr[i] < lg[i]) {
                divisible = false;
                break;
            }
        }
        if (!divisible)
            return std::nullopt;
        Mono q(lr.size());
        for (size_t i = 0; i < lr.size(); ++i)
            q[i] = lr[i] - lg[i];
        Scalar qc = rem.terms_.begin()->second * lgc_inv;
        quot.add_term(q, qc);
        Mono t(lr.size());
        for (const auto& [m, c] : g.terms_) {
            for (size_t i = 0; i < t.size(); ++i)
                t[i] = m[i] + q[i];
            rem.add_term(t, -(c * qc));
        }
    }
    return quot;
}

Poly Poly::homogeneous_component(uint32_t d) const {
    Poly r(arity_);
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) == d)
            r.terms_.emplace(m, c);
    return r;
}

std::vector<uint32_t> Poly::degrees_present() const {
    std::vector<uint32_t> ds;
    for (const auto& [m, c] : terms_) {
        uint32_t d = mono_degree(m);
        if (ds.empty() || ds.back() != d)
            ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

Poly Poly::derivative(int i) const {
    Poly r(arity_);
    for (const auto& [m, c] : terms_) {
        uint32_t e = m[static_cast<size_t>(i)];
        if (e == 0)
            continue;
        Mono mm = m;
        mm[static_cast<size_t>(i)] -= 1;
        r.add_term(mm, c * Scalar(Rational(static_cast<long>(e))));
    }
    return r;
}

Poly Poly::substituted(const std::vector<Poly>& images) const {
    if (images.size() != static_cast<size_t>(arity_))
        throw std::domain_error("Poly: substitution image count mismatch");
    int out_arity = images.empty() ? arity_ : images[0].arity();
    for (const auto& im : images)
        if (im.arity() != out_arity)
            throw std::domain_error("Poly: substitution images of mixed arity");
    // cache powers of each image
    std::vector<std::vector<Poly>> pows(images.size());
    for (size_t i = 0; i < images.size(); ++i)
        pows[i].push_back(Poly::constant(out_arity, Scalar(1)));
    Poly out(out_arity);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(out_arity, c);
        for (size_t i = 0; i < images.size(); ++i) {
            while (pows[i].size() <= m[i])
                pows[i].push_back(pows[i].back() * images[i]);
            if (m[i] > 0)
                t *= pows[i][m[i]];
        }
        out += t;
    }
    return out;
}

std::string Poly::str(const Field& f, const std::vector<std::string>& vars) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str_plain(f);
        bool neg = cs.size() && cs[0] == '-' && cs.find(' ') == std::string::npos && cs.find('+') == std::string::npos;
        if (neg && !first)
            cs = cs.substr(1);
        bool wrap = cs.find(' ') != std::string::npos;  // multi-term coefficient
        os << (first ? "" : (neg ? " - " : " + "));
        first = false;
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += i < vars.size() ? vars[i] : "x" + std::to_string(i + 1);
            if (m[i] > 1)
                mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            os << (wrap ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << mono;
        } else if (cs == "-1") {
            os << "-" << mono;
        } else {
            os << (wrap ? "(" + cs + ")" : cs) << "*" << mono;
        }
    }
    return os.str();
}

static void enumerate_monos(int arity, uint32_t degree, size_t pos, Mono& cur, std::vector<Mono>& out) {
    if (pos + 1 == static_cast<size_t>(arity)) {
        cur[pos] = degree;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (uint32_t e = 0; e <= degree; ++e) {
        cur[pos] = e;
        enumerate_monos(arity, degree - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

GradedSlice GradedSlice::of(int arity, uint32_t degree) {
    GradedSlice s{arity, degree, {}};
    Mono cur(static_cast<size_t>(arity), 0);
    enumerate_monos(arity, degree, 0, cur, s.basis);
    std::sort(s.basis.begin(), s.basis.end(), GradedLexDesc{});
    return s;
}

std::optional<size_t> GradedSlice::index_of(const Mono& m) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), m, GradedLexDesc{});
    if (it != basis.end() && *it == m)
        return static_cast<size_t>(it - basis.begin());
    return std::nullopt;
}

}  // namespace dunkl
