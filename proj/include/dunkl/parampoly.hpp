#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dunkl/cyclotomic.hpp"

namespace dunkl {

// Exponent pair for at most two multiplicity parameters.
struct PExp {
    std::array<uint32_t, 2> e{0, 0};

    uint32_t total() const { return e[0] + e[1]; }
    friend bool operator==(const PExp& a, const PExp& b) { return a.e == b.e; }
    // graded-lex: by total degree, then by e[0] (so c1^2 > c1*c2 > c2^2).
    friend bool operator<(const PExp& a, const PExp& b) {
        if (a.total() != b.total())
            return a.total() < b.total();
        return a.e[0] < b.e[0];
    }
};

// Polynomial in the multiplicity parameters with cyclotomic coefficients.
// Terms are kept sorted graded-lex ascending with no zero coefficients;
// the leading term is terms().back().
class ParamPoly {
  public:
    using Term = std::pair<PExp, Cyclotomic>;

    ParamPoly() = default;
    explicit ParamPoly(Cyclotomic constant);
    static ParamPoly constant(const Rational& r) { return ParamPoly(Cyclotomic(r)); }
    static ParamPoly symbol(int index, uint32_t order = 1);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.total() == 0); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first.total() == 0 && terms_[0].second.is_one(); }
    uint32_t degree() const { return terms_.empty() ? 0 : terms_.back().first.total(); }
    uint32_t degree_in(int var) const;
    const Cyclotomic& leading_coeff() const { return terms_.back().second; }
    Cyclotomic constant_coeff() const;

    ParamPoly operator-() const;
    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    ParamPoly scaled(const Cyclotomic& s) const;
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    Cyclotomic eval(const std::vector<Rational>& point) const;

    // Exact division; throws std::logic_error when not divisible.
    ParamPoly divided_by(const ParamPoly& g) const;

    static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

    void add_term(const PExp& e, const Cyclotomic& c);  // accumulate, keeps invariants

  private:
    std::vector<Term> terms_;
};

}  // namespace dunkl
