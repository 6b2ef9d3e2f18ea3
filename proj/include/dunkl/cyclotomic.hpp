#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

// Element of the cyclotomic field Q(zeta_m): a residue modulo the m-th
// cyclotomic polynomial Phi_m, stored as phi(m) rational coordinates
// (coeffs[k] multiplies zeta^k). Order m = 1 is plain Q.
//
// Values of different orders never mix, except that order-1 constants
// promote into any ambient order.
class Cyclotomic {
  public:
    Cyclotomic() : m_(1), coeffs_(1) {}
    Cyclotomic(const Rational& r) : m_(1), coeffs_{r} {}
    Cyclotomic(long n) : m_(1), coeffs_{Rational(n)} {}
    Cyclotomic(uint32_t order, std::vector<Rational> coeffs);

    static Cyclotomic zero(uint32_t order);
    static Cyclotomic one(uint32_t order);
    // zeta_m^e, e arbitrary (reduced mod m).
    static Cyclotomic zeta_pow(uint32_t order, long e);

    static uint32_t euler_phi(uint32_t m);
    // Phi_m as dense coefficient vector, constant term first; cached per order.
    static const std::vector<Rational>& cyclotomic_polynomial(uint32_t m);

    uint32_t order() const { return m_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;  // all coordinates above zeta^0 vanish
    const Rational& rational_part() const { return coeffs_[0]; }

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    Cyclotomic scaled(const Rational& r) const;
    Cyclotomic inverse() const;
    // Field automorphism zeta -> zeta^{-1}; fixes Q.
    Cyclotomic conj() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // "3/2" when rational; otherwise bracketed coordinates "[a0,a1,...]".
    std::string str() const;
    static Cyclotomic parse(uint32_t order, const std::string& s);

  private:
    static Cyclotomic promote(const Cyclotomic& x, uint32_t order);
    static uint32_t common_order(const Cyclotomic& a, const Cyclotomic& b);

    uint32_t m_;
    std::vector<Rational> coeffs_;
};

}  // namespace dunkl
