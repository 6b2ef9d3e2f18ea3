#include "dunkl/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

using Dense = std::vector<Rational>;  // univariate poly, coeffs[i] * x^i

void dense_trim(Dense& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

Dense dense_mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty())
        return {};
    Dense r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    dense_trim(r);
    return r;
}

// Exact division, used only where divisibility is guaranteed.
Dense dense_div(Dense num, const Dense& den) {
    Dense q;
    if (den.empty())
        throw std::domain_error("cyclotomic: division by zero polynomial");
    dense_trim(num);
    if (num.size() >= den.size())
        q.resize(num.size() - den.size() + 1);
    while (num.size() >= den.size()) {
        Rational c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= c * den[i];
        dense_trim(num);
        if (!num.empty() && num.size() >= den.size() && num.back().is_zero())
            throw std::logic_error("cyclotomic: dense_div trim failure");
    }
    if (!num.empty())
        throw std::logic_error("cyclotomic: inexact polynomial division");
    return q;
}

Dense dense_rem(Dense num, const Dense& den) {
    dense_trim(num);
    while (num.size() >= den.size()) {
        Rational c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        for (size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= c * den[i];
        dense_trim(num);
    }
    return num;
}

struct OrderData {
    Dense phi;                  // Phi_m
    std::vector<Dense> xpow;    // x^e mod Phi_m for e = 0 .. max needed
    uint32_t degree = 0;
};

std::map<uint32_t, OrderData>& order_cache() {
    static std::map<uint32_t, OrderData> cache;
    return cache;
}
std::mutex& cache_mutex() {
    static std::mutex mu;
    return mu;
}

Dense compute_phi(uint32_t m, std::map<uint32_t, OrderData>& cache);

const OrderData& order_data(uint32_t m) {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto& cache = order_cache();
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;
    OrderData d;
    d.phi = compute_phi(m, cache);
    d.degree = static_cast<uint32_t>(d.phi.size() - 1);
    uint32_t maxe = std::max<uint32_t>(2 * d.degree, m) + 1;
    d.xpow.resize(maxe);
    Dense cur{Rational(1)};
    for (uint32_t e = 0; e < maxe; ++e) {
        d.xpow[e] = cur;
        cur.insert(cur.begin(), Rational(0));  // multiply by x
        cur = dense_rem(std::move(cur), d.phi);
    }
    return cache.emplace(m, std::move(d)).first->second;
}

// Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d. Assumes cache lock is held.
Dense compute_phi(uint32_t m, std::map<uint32_t, OrderData>& cache) {
    if (m == 1)
        return Dense{Rational(-1), Rational(1)};
    Dense num(m + 1);
    num[0] = Rational(-1);
    num[m] = Rational(1);
    Dense den{Rational(1)};
    for (uint32_t d = 1; d < m; ++d) {
        if (m % d != 0)
            continue;
        auto it = cache.find(d);
        if (it != cache.end()) {
            den = dense_mul(den, it->second.phi);
        } else {
            den = dense_mul(den, compute_phi(d, cache));
        }
    }
    return dense_div(std::move(num), den);
}

}  // namespace

Cyclotomic::Cyclotomic(uint32_t order, std::vector<Rational> coeffs) : m_(order), coeffs_(std::move(coeffs)) {
    if (order == 0)
        throw std::domain_error("Cyclotomic: order must be positive");
    coeffs_.resize(euler_phi(order));
}

uint32_t Cyclotomic::euler_phi(uint32_t m) {
    uint32_t result = m;
    for (uint32_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

const std::vector<Rational>& Cyclotomic::cyclotomic_polynomial(uint32_t m) {
    return order_data(m).phi;
}

Cyclotomic Cyclotomic::zero(uint32_t order) {
    return Cyclotomic(order, {});
}

Cyclotomic Cyclotomic::one(uint32_t order) {
    std::vector<Rational> c(euler_phi(order));
    c[0] = Rational(1);
    return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::zeta_pow(uint32_t order, long e) {
    const auto& d = order_data(order);
    long r = e % static_cast<long>(order);
    if (r < 0)
        r += order;
    std::vector<Rational> c(d.degree);
    const Dense& row = d.xpow[static_cast<size_t>(r)];
    for (size_t i = 0; i < row.size(); ++i)
        c[i] = row[i];
    return Cyclotomic(order, std::move(c));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (!coeffs_[0].is_one())
        return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            return false;
    return true;
}

Cyclotomic Cyclotomic::promote(const Cyclotomic& x, uint32_t order) {
    if (x.m_ == order)
        return x;
    if (x.m_ != 1)
        throw std::domain_error("Cyclotomic: order mismatch");
    std::vector<Rational> c(euler_phi(order));
    c[0] = x.coeffs_[0];
    return Cyclotomic(order, std::move(c));
}

uint32_t Cyclotomic::common_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.m_ == b.m_)
        return a.m_;
    if (a.m_ == 1)
        return b.m_;
    if (b.m_ == 1)
        return a.m_;
    throw std::domain_error("Cyclotomic: order mismatch");
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    uint32_t m = Cyclotomic::common_order(a, b);
    Cyclotomic x = Cyclotomic::promote(a, m), y = Cyclotomic::promote(b, m);
    for (size_t i = 0; i < x.coeffs_.size(); ++i)
        x.coeffs_[i] += y.coeffs_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    uint32_t m = Cyclotomic::common_order(a, b);
    Cyclotomic x = Cyclotomic::promote(a, m), y = Cyclotomic::promote(b, m);
    for (size_t i = 0; i < x.coeffs_.size(); ++i)
        x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    uint32_t m = Cyclotomic::common_order(a, b);
    if (m == 1)
        return Cyclotomic(a.coeffs_[0] * b.coeffs_[0]);
    Cyclotomic x = Cyclotomic::promote(a, m), y = Cyclotomic::promote(b, m);
    const auto& d = order_data(m);
    size_t n = d.degree;
    std::vector<Rational> prod(2 * n - 1);
    for (size_t i = 0; i < n; ++i) {
        if (x.coeffs_[i].is_zero())
            continue;
        for (size_t j = 0; j < n; ++j) {
            if (y.coeffs_[j].is_zero())
                continue;
            prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    std::vector<Rational> out(n);
    for (size_t e = 0; e < prod.size(); ++e) {
        if (prod[e].is_zero())
            continue;
        if (e < n) {
            out[e] += prod[e];
        } else {
            const Dense& row = d.xpow[e];
            for (size_t i = 0; i < row.size(); ++i)
                out[i] += prod[e] * row[i];
        }
    }
    return Cyclotomic(m, std::move(out));
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_)
        c *= r;
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero())
        throw std::domain_error("Cyclotomic: inverse of zero");
    if (m_ == 1)
        return Cyclotomic(coeffs_[0].inverse());
    // Extended Euclid: find u with u * this == 1 (mod Phi_m).
    const auto& d = order_data(m_);
    Dense r0 = d.phi, r1(coeffs_.begin(), coeffs_.end());
    dense_trim(r1);
    Dense t0, t1{Rational(1)};
    while (!r1.empty() && r1.size() > 1) {
        // one division step: r0 = q*r1 + r2
        Dense q, rem = r0;
        dense_trim(rem);
        if (rem.size() >= r1.size())
            q.resize(rem.size() - r1.size() + 1);
        while (rem.size() >= r1.size()) {
            Rational c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] -= c * r1[i];
            dense_trim(rem);
        }
        Dense t2 = t0;
        Dense qt = dense_mul(q, t1);
        t2.resize(std::max(t2.size(), qt.size()));
        for (size_t i = 0; i < qt.size(); ++i)
            t2[i] -= qt[i];
        dense_trim(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.empty())
        throw std::logic_error("Cyclotomic: element not invertible (reducible order data?)");
    // r1 is a nonzero constant: gcd == r1[0]
    Rational scale = r1[0].inverse();
    Dense inv = dense_rem(std::move(t1), d.phi);
    std::vector<Rational> c(d.degree);
    for (size_t i = 0; i < inv.size(); ++i)
        c[i] = inv[i] * scale;
    return Cyclotomic(m_, std::move(c));
}

Cyclotomic Cyclotomic::conj() const {
    if (m_ == 1)
        return *this;
    Cyclotomic out = Cyclotomic::zero(m_);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero())
            continue;
        out += zeta_pow(m_, -static_cast<long>(k)).scaled(coeffs_[k]);
    }
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.m_ != b.m_) {
        if (a.is_rational() && b.is_rational())
            return a.coeffs_[0] == b.coeffs_[0];
        return false;
    }
    return a.coeffs_ == b.coeffs_;
}

std::string Cyclotomic::str() const {
    if (is_rational())
        return coeffs_[0].str();
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            os << ",";
        os << coeffs_[i].str();
    }
    os << "]";
    return os.str();
}

Cyclotomic Cyclotomic::parse(uint32_t order, const std::string& s) {
    if (s.empty())
        throw std::domain_error("Cyclotomic: empty string");
    if (s.front() != '[')
        return promote(Cyclotomic(Rational::parse(s)), order);
    if (s.back() != ']')
        throw std::domain_error("Cyclotomic: malformed '" + s + "'");
    std::vector<Rational> c;
    std::string body = s.substr(1, s.size() - 2);
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        c.push_back(Rational::parse(tok));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (c.size() != euler_phi(order))
        throw std::domain_error("Cyclotomic: wrong coordinate count in '" + s + "'");
    return Cyclotomic(order, std::move(c));
}

}  // namespace dunkl
