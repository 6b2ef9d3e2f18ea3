#pragma once

#include <optional>

#include "dunkl/dunkl.hpp"

namespace dunkl {

using ExpVec = std::vector<uint32_t>;

// a' < a in inverse lexicographic order: the last nonzero coordinate of
// a - a' is positive. Returns [second argument < first argument] to match
// the orthogonality conditions, which are stated against all a' < a.
bool inv_lex_less(const ExpVec& a, const ExpVec& a_prime);

// Ordered homogeneous generating set u_1, ..., u_l with strictly increasing
// degrees. Caches generator powers for monomial expansion.
class GeneratorSet {
  public:
    GeneratorSet(std::vector<Poly> gens, std::vector<uint32_t> degrees);

    static GeneratorSet elementary_symmetric(int n);
    static GeneratorSet power_sums(int n);
    static GeneratorSet dihedral(const ReflectionGroup& g);
    static GeneratorSet standard_for(const ReflectionGroup& g);

    size_t rank() const { return gens_.size(); }
    const std::vector<Poly>& gens() const { return gens_; }
    const std::vector<uint32_t>& degrees() const { return degrees_; }
    uint32_t weighted_degree(const ExpVec& a) const;

    // u^a expanded to a Poly (cached powers)
    Poly expand(const ExpVec& a) const;

    // all a with weighted degree d, sorted ascending in the inverse
    // lexicographic order
    std::vector<ExpVec> monomials_of_weight(uint32_t d) const;

  private:
    std::vector<Poly> gens_;
    std::vector<uint32_t> degrees_;
    mutable std::vector<std::vector<Poly>> powers_;
};

// b_a: monic in u^a, orthogonal to every u^{a'} with a' < a. The expansion
// runs over the equal-weight monomials (cross-degree pairings vanish).
struct CanonicalInvariant {
    ExpVec index;
    std::vector<std::pair<ExpVec, Scalar>> expansion;  // ascending, ends at index with coeff 1
    Poly polynomial;                                   // expanded form

    const Scalar& coeff(const ExpVec& a) const;
};

CanonicalInvariant canonical_invariant(const ExpVec& a, const GeneratorSet& gens, const DunklContext& ctx);

// b_{a_max} for the inverse-lex-maximal a of weighted degree d
CanonicalInvariant elementary_invariant(uint32_t d, const GeneratorSet& gens, const DunklContext& ctx);

// e_k at the mean-centered variables x_i - e1(x)/n
Poly ebar(int k, int n);

// sum_{s=1}^{k} (-1)^s x_s Delta(nabla_{x_1},...,skip s,...,nabla_{x_k}) Delta(x_1..x_k)
Poly iwasaki_mu(int k, int n, const DunklContext& ctx);

// orbit sum of iwasaki_mu over S_n/(S_k x S_{n-k}); proportional to the
// k-th elementary canonical invariant
Poly iwasaki_elementary(int k, int n, const DunklContext& ctx);

// every expansion coefficient evaluated at the parameter point; throws
// PoleError (with the offending coefficient) when one has a pole there
Poly limit_at(const CanonicalInvariant& inv, const std::vector<Rational>& point, const GeneratorSet& gens);

// kernel of f -> (nabla_P f)_P over invariant monomials P with
// 0 < deg P < bound, on the span of invariant monomials of weighted degree d
std::vector<Poly> quasiharmonic_space(uint32_t d, uint32_t bound, const GeneratorSet& gens,
                                      const DunklContext& ctx);

// exact ratio g/f of two proportional polynomials; nullopt when they are
// not proportional or f = 0
std::optional<Scalar> proportionality_ratio(const Poly& f, const Poly& g);

}  // namespace dunkl
