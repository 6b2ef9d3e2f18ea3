#pragma once

#include <functional>
#include <map>

#include "dunkl/exactla.hpp"
#include "dunkl/groups.hpp"

namespace dunkl {

// A reflection group together with a multiplicity function. All Dunkl
// operators, the bilinear form and the Laplacian are computed from here.
class DunklContext {
  public:
    DunklContext(ReflectionGroup g, MultiplicityFunction m);

    const ReflectionGroup& group() const { return group_; }
    const MultiplicityFunction& mult() const { return mult_; }
    const Field& field() const { return field_; }
    int arity() const { return group_.dim(); }
    const Scalar& class_value(int idx) const { return mult_.values[static_cast<size_t>(idx)]; }

    // (2/l) * sum over reflections of c(s), with l = dim of the stored
    // representation (so (n-1)c for S_n on C^n and (m/2)(c1+c2) for I2(m))
    Scalar h_c() const;

    // (f - s f) / alpha_s; divisible by construction
    Poly divided_difference(const Reflection& s, const Poly& f) const;

    // Dunkl operator in the coordinate direction y_i
    Poly dunkl_apply(int dir, const Poly& f) const;

    // p lives in dual coordinates; its monomials act as compositions of
    // commuting dunkl_apply operators (applied in ascending variable order)
    Poly nabla_poly(const Poly& p, const Poly& f) const;

    // nabla of the dual of the unit quadratic invariant
    Poly laplacian(const Poly& f) const;

    // (f,g)_c = [nabla_{psi(f)} g]_0
    Scalar pairing(const Poly& f, const Poly& g) const;

    // [nabla^m g]_0 for every monomial m in `monos` (shared-prefix descent;
    // one Dunkl application per distinct monomial prefix)
    std::vector<Scalar> moments(const Poly& g, const std::vector<Mono>& monos) const;

    // Gram matrix of the form on `basis`, exploiting symmetry
    Matrix gram(const std::vector<Poly>& basis) const;

    // Alternating-sum oracle for nabla_{psi(p)}, p homogeneous of degree d:
    //   (1/(2^d d!)) sum_k (-1)^k binom(d,k) L^{d-k} (p * L^k f).
    // Exists as an independent route to nabla_poly(dualize(p), f).
    Poly berest_nabla(const Poly& p, const Poly& f) const;

  private:
    ReflectionGroup group_;
    MultiplicityFunction mult_;
    Field field_;
    Poly laplacian_dual_;                       // dual of e2
    std::vector<std::vector<int>> refl_by_dir_; // S_n: reflections touching i
};

// Working model with V^W = {0}: the dihedral model itself, or S_n restricted
// to the mean-centered subalgebra (polynomials in x_i - e1/n), presented in
// n-1 free variables. Hosts everything that needs the sl2 structure: the
// effective h_c and dimension, phi_c, and the E/L/H operators.
class HarmonicModel {
  public:
    explicit HarmonicModel(const DunklContext& ctx);

    const DunklContext& ctx() const { return *ctx_; }
    int reduced_arity() const { return reduced_arity_; }
    int ell() const { return ell_; }
    Scalar h_c() const { return h_c_; }
    const Poly& e2_reduced() const { return e2_reduced_; }

    Poly embed(const Poly& reduced) const;
    Poly reduce(const Poly& ambient) const;

    Poly apply_E(const Poly& reduced) const;  // multiplication by e2
    Poly apply_L(const Poly& reduced) const;  // Dunkl Laplacian

    // pairing of embedded arguments
    Scalar pairing(const Poly& f_reduced, const Poly& g_reduced) const;

    // 2^d 4^k k! prod_{r=0}^{d+k-1} (l(1-h_c)/2 + r): the factor relating
    // (f,g)_c to phi_c(f g) for f in e2^k * Ker L of harmonic degree d
    Scalar frobenius_factor(uint32_t d, uint32_t k) const;

    // linear functional with phi(e2 f) = phi(f) and phi = [.]_0 on Ker L;
    // computed as (e2^N, f)_c / frobenius_factor(0, N) in degree 2N
    Scalar phi(const Poly& reduced) const;

  private:
    const DunklContext* ctx_;
    int reduced_arity_;
    int ell_;
    Scalar h_c_;
    Poly e2_reduced_;
    Poly e2_ambient_;
    std::vector<Poly> embed_images_;
    std::vector<Poly> reduce_images_;
};

// Normalized sl2 triple on a harmonic model:
//   E = (1/2) * multiplication by e2, L = -(1/2) * Dunkl Laplacian,
//   H = Euler grading + l(1-h_c)/2,
// satisfying [E,L] = H, [H,E] = 2E, [H,L] = -2L exactly. (The unscaled
// bracket is [Laplacian, e2-mult] = 4H, tested separately.)
struct Sl2Triple {
    const HarmonicModel* model;

    explicit Sl2Triple(const HarmonicModel& m) : model(&m) {}

    Poly apply_E(const Poly& f) const { return model->apply_E(f).scaled(Scalar(Rational(1, 2))); }
    Poly apply_L(const Poly& f) const { return model->apply_L(f).scaled(Scalar(Rational(-1, 2))); }
    Poly apply_H(const Poly& f) const;
};

// Matrix of a degree-homogeneous operator between reduced monomial slices.
Matrix op_matrix_on_slice(const std::function<Poly(const Poly&)>& op, int arity,
                          const GradedSlice& domain, const GradedSlice& codomain);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scaled(const Matrix& a, const Scalar& s);
Matrix mat_identity(size_t n, const Scalar& diag);
bool mat_is_zero(const Matrix& a);

}  // namespace dunkl
