#pragma once

#include <string>
#include <vector>

#include "dunkl/poly.hpp"

namespace dunkl {

enum class GroupKind { Symmetric, Dihedral };

// One reflection: its matrix on V, a root (any -1-eigenvector; roots enter
// the operators homogeneously of degree 0, so the scale is free), and the
// conjugacy class it belongs to.
struct Reflection {
    std::vector<std::vector<Scalar>> matrix;  // column j = image of basis vector j
    Poly root;
    int class_index = 0;
    // fast-path data: transposition (i,j) for S_n, the index j of
    // z -> zeta^j*zbar for the dihedral series
    int a = 0, b = 0;
};

// S_n in its natural n-dimensional representation, or I2(m) in the basis
// {z, zbar} with variables (z, w), w = zbar. Dihedral data lives over
// Q(zeta_m):
//   reflections  s_j : z -> zeta^j w, w -> zeta^-j z,   j = 0..m-1
//   roots        z - zeta^j w
//   invariants   e2 = z w,  e_m = z^m + w^m
//   B(z,z) = B(w,w) = 0, B(z,w) = 2  (so e2 is the unit quadratic of B)
// For even m the reflections split into two classes; the class containing
// s_1 (odd j) is listed first and carries the parameter c1, the class of
// s_2 (even j) carries c2. The conventional combinations are C = c1 + c2
// and delta = c2 - c1; the closed-form Laplacian on invariants is stated in
// exactly these.
class ReflectionGroup {
  public:
    static ReflectionGroup symmetric(int n);
    static ReflectionGroup dihedral(int m);
    // "Sn:4" or "I2:5"
    static ReflectionGroup parse_spec(const std::string& spec);

    GroupKind kind() const { return kind_; }
    int parameter() const { return nm_; }  // n for S_n, m for I2(m)
    int dim() const { return dim_; }
    uint32_t cyclo_order() const { return cyclo_order_; }
    const std::vector<Reflection>& reflections() const { return reflections_; }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    const std::vector<uint32_t>& degrees() const { return degrees_; }
    const std::vector<std::vector<Scalar>>& bform() const { return bform_; }
    const std::vector<std::string>& var_names() const { return var_names_; }
    std::string spec_string() const;

    // action of a reflection on a polynomial (algebra homomorphism)
    Poly act(const Reflection& s, const Poly& f) const;
    // S_n only: act by the permutation sending variable i to perm[i]
    static Poly act_perm(const std::vector<int>& perm, const Poly& f);
    // generic linear substitution by an explicit matrix
    static Poly act_matrix(const std::vector<std::vector<Scalar>>& m, const Poly& f);

    // <y_i, alpha>: coefficient of variable i in the root
    Scalar root_component(const Reflection& s, int i) const;

    // V -> V* via B: returns the polynomial in dual coordinates
    Poly dualize(const Poly& f) const;

    // sum over an S_k x S_{n-k} transversal of S_n; f must be invariant
    // under that subgroup (checked)
    Poly coset_orbit_sum(int k, const Poly& f) const;

    // unit quadratic invariant: sum of squares of a B-orthonormal basis
    // (x1^2+...+xn^2 for S_n, z*w for the dihedral model)
    Poly e2() const;

    // descriptor listing reflections, roots, classes, degrees (JSON text)
    std::string describe_json() const;

  private:
    GroupKind kind_;
    int nm_ = 0;
    int dim_ = 0;
    uint32_t cyclo_order_ = 1;
    std::vector<Reflection> reflections_;
    std::vector<std::vector<int>> classes_;
    std::vector<uint32_t> degrees_;
    std::vector<std::vector<Scalar>> bform_;
    std::vector<std::string> var_names_;
};

// Multiplicity function: one scalar per conjugacy class, either the class
// parameter symbol or a specialized rational value.
struct MultiplicityFunction {
    std::vector<Scalar> values;
    std::vector<std::string> param_names;  // empty when fully numeric

    static MultiplicityFunction symbolic(const ReflectionGroup& g);
    // one shared symbol c on every class (the equal-multiplicity regime)
    static MultiplicityFunction symbolic_equal(const ReflectionGroup& g);
    static MultiplicityFunction numeric(const ReflectionGroup& g, const std::vector<Rational>& vals);
};

}  // namespace dunkl
