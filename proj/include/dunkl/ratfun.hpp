#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dunkl/parampoly.hpp"

namespace dunkl {

// Coefficient field descriptor: Q(zeta_m)(params...). Order 1 and an empty
// parameter list degenerate to plain Q.
struct Field {
    uint32_t cyclo_order = 1;
    std::vector<std::string> params;  // at most 2

    static Field rationals() { return Field{}; }
    static Field with_params(std::vector<std::string> names, uint32_t order = 1) {
        return Field{order, std::move(names)};
    }
};

struct PoleError : std::runtime_error {
    explicit PoleError(std::string den) : std::runtime_error("pole: denominator (" + den + ") vanishes"), denominator(std::move(den)) {}
    std::string denominator;
};

// Rational function in the multiplicity parameters over Q(zeta_m), kept in
// canonical form: fraction reduced, denominator with integral primitive
// coefficient data and positive leading coefficient (monic if the leading
// coefficient is irrational). Equal values have identical representations.
class RatFun {
  public:
    RatFun() : num_(), den_(ParamPoly::constant(Rational(1))) {}
    RatFun(long n) : RatFun(Rational(n)) {}
    RatFun(const Rational& r) : num_(ParamPoly::constant(r)), den_(ParamPoly::constant(Rational(1))) {}
    RatFun(const Cyclotomic& c) : num_(ParamPoly(c)), den_(ParamPoly::constant(Rational(1))) {}
    explicit RatFun(const ParamPoly& p) : num_(p), den_(ParamPoly::constant(Rational(1))) {}

    static RatFun fraction(const ParamPoly& num, const ParamPoly& den);
    static RatFun symbol(int index, uint32_t order = 1) { return RatFun(ParamPoly::symbol(index, order)); }
    // c(c-1)...(c-k+1)/k! in parameter `index`.
    static RatFun falling_binomial(int index, uint32_t k, uint32_t order = 1);

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun inverse() const;
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    // Evaluation at a rational parameter point; throws PoleError when the
    // reduced denominator vanishes there.
    Cyclotomic eval(const std::vector<Rational>& point) const;

    // Exact rational value, available when the value is constant and zeta-free.
    std::optional<Rational> as_rational() const;

    // Canonical string "(num)/(den)"; `plain` renders without the fraction
    // wrapper when the denominator is 1.
    std::string str(const Field& f) const;
    std::string str_plain(const Field& f) const;
    static RatFun parse(const Field& f, const std::string& s);

    static std::string poly_str(const Field& f, const ParamPoly& p);

  private:
    void normalize();
    ParamPoly num_, den_;
};

using Scalar = RatFun;

}  // namespace dunkl
