#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dunkl/ratfun.hpp"

namespace dunkl {

using Mono = std::vector<uint32_t>;  // exponent tuple, length = arity

inline uint32_t mono_degree(const Mono& m) {
    uint32_t d = 0;
    for (uint32_t e : m)
        d += e;
    return d;
}

// graded-lex descending: higher total degree first, then lexicographically
// larger exponent tuple first.
struct GradedLexDesc {
    bool operator()(const Mono& a, const Mono& b) const {
        uint32_t da = mono_degree(a), db = mono_degree(b);
        if (da != db)
            return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial over the Scalar field. Term iteration is
// graded-lex descending; no zero coefficients are stored; the arity is fixed
// per value.
class Poly {
  public:
    using TermMap = std::map<Mono, Scalar, GradedLexDesc>;

    explicit Poly(int arity = 0) : arity_(arity) {}
    static Poly constant(int arity, const Scalar& c);
    static Poly variable(int arity, int index, const Scalar& coeff = Scalar(1));
    static Poly monomial(Mono m, const Scalar& c);

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // total degree; 0 for the zero polynomial
    uint32_t degree() const;
    bool is_homogeneous() const;

    Scalar constant_term() const;
    Scalar coeff(const Mono& m) const;
    void set_coeff(const Mono& m, const Scalar& c);
    void add_term(const Mono& m, const Scalar& c);

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Scalar& s) const;
    Poly pow(uint32_t k) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Exact division; nullopt when g does not divide.
    std::optional<Poly> divided_by(const Poly& g) const;

    Poly homogeneous_component(uint32_t d) const;
    std::vector<uint32_t> degrees_present() const;

    // partial derivative in variable i
    Poly derivative(int i) const;

    // f(images[0], ..., images[arity-1]); all images share one arity.
    Poly substituted(const std::vector<Poly>& images) const;

    std::string str(const Field& f, const std::vector<std::string>& vars) const;

  private:
    int arity_;
    TermMap terms_;
};

// Ordered monomial basis of one total degree, graded-lex descending;
// generated combinatorially.
struct GradedSlice {
    int arity;
    uint32_t degree;
    std::vector<Mono> basis;

    static GradedSlice of(int arity, uint32_t degree);
    std::optional<size_t> index_of(const Mono& m) const;
};

}  // namespace dunkl
