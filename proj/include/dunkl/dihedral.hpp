#pragma once

#include "dunkl/dunkl.hpp"

namespace dunkl {

// Closed forms on the dihedral invariant ring C[e2, e_m], modeled as
// bivariate polynomials in the formal variables (E2, EM) with weights
// (2, m). All scalars here are parameter rational functions (no zeta).

inline uint32_t inv_weight(const Mono& m, int order) {
    return 2 * m[0] + static_cast<uint32_t>(order) * m[1];
}

// conventional parameter combinations: C = c1 + c2 and delta = c2 - c1 for
// two reflection classes, C = 2c and delta = 0 for one
Scalar dihedral_C(const DunklContext& ctx);
Scalar dihedral_delta(const DunklContext& ctx);

// e2 d^2/de2^2 + m e_m d^2/(de2 de_m) + m^2 e2^{m-1} d^2/de_m^2
//   + (1 - (m/2) C) d/de2 + (m^2/2) delta e2^{m/2-1} d/de_m.
// This is the restriction of the Dunkl Laplacian divided by the fixed
// basis constant 4 (the z,zbar model has L(e2) = 4(1 - (m/2)C)).
Poly laplacian_pde(const Poly& f, int m, const Scalar& C, const Scalar& delta);

// Checks the rewriting of (4/m^2) e2 L through the operators
// Ecal = (2/m) e2 d/de2 + e_m d/de_m and Dcal = e_m d/de_m, with all
// e_m-denominators cleared by multiplying through with e_m^2:
//   (4/m^2) e2 L(f) em^2 = [Ecal^2 - C Ecal]f em^2
//     + (4 e2^m - em^2)(Dcal^2 - Dcal)f + (C-1) Dcal f em^2
//     + 2 delta e2^{m/2} em Dcal f.
bool viaD_identity_check(const Poly& f, int m, const Scalar& C, const Scalar& delta);

// b_{(0,k)} for k <= K with equal multiplicity c, from the t-expansion of
// (1 + e_m t + e2^m t^2)^c divided by binom(c, k). (The series variant for
// distinct parameters is stated through the auxiliary combination
// e'_m = (1/4) e_m - (1/2) e2^{m/2}; it is equivalent to the Jacobi closed
// form below, which is what b0k_jacobi computes, so e'_m itself enters no
// computation here.)
std::vector<Poly> gf_coefficients(int m, int K);

// P_k^{(a,b)}(y) with general parameter values, as a univariate polynomial
// (arity-1 Poly in y); finite Szego sum, never numeric integration
Poly jacobi_poly(uint32_t k, const Scalar& a, const Scalar& b);

// differential operator (1-y^2) P'' + (b - a - (a+b+2) y) P' + k(k+a+b+1) P
Poly jacobi_operator_apply(const Poly& p, uint32_t k, const Scalar& a, const Scalar& b);

// closed form (even m):
//   k! e2^{mk/2} / (4^k binom(2k-C+1, k)) *
//     P_k^{(-(C+delta+1)/2, -(C-delta+1)/2)}(e_m / (2 e2^{m/2}))
Poly b0k_jacobi(uint32_t k, int m, const Scalar& C, const Scalar& delta);

// generic falling-factorial binomial over the scalar field
Scalar binomial_scalar(const Scalar& x, uint32_t k);

// between C[e2, e_m] coordinates (formal E2, EM) and the z,zbar model
Poly inv_to_zw(const Poly& invpoly, const ReflectionGroup& g);
// throws std::domain_error when f is not a polynomial in e2, e_m
Poly zw_to_inv(const Poly& f, const ReflectionGroup& g);

}  // namespace dunkl
