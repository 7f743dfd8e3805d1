#pragma once

#include <string>
#include <vector>

#include "sl2/polymat.hpp"

namespace sl2 {

/// Matrices sigma^{-1}-similar to diag(a,b): the four parametrised families,
/// the describing product and the short sporadic forms.
enum class Family { D, G, K, Z, describsig, sporadic };

struct FamilySpec {
  Family family = Family::D;
  Scalar a{1}, b{1};
  int eps = 0;    // 0 or 1
  int delta = 0;  // 0 or 1
  Scalar beta{1}, eta{1};
  std::vector<Poly> u;
  /// For Family::sporadic:
  ///   0  diag(a,b)_[eps]
  ///   1  diag(-a,-b)_[delta] E(0)^{1-eps} E(beta) E(0)^eps
  ///   2  -diag(a/beta, b*beta) E(-beta - beta*b/a)
  ///   3  diag(-a*beta/eta, -b*eta/beta) E(eta) E(-(beta-eta)b/(a beta^2) + (beta-eta)/(beta eta))
  ///   4  -diag(b/(beta eta), a beta eta) E(-eta) E(-beta^2 (a/b) u1 - beta - 1/eta)
  ///        E(u1(h+1) - 1/beta) E(-eta beta^2 a/b)
  int sporadic_id = 0;
};

inline constexpr int kSporadicCount = 5;

Family parse_family(const std::string& name);
std::string family_name(Family f);

/// Unexpanded product (sign folded into the diagonal). Throws
/// PreconditionError on domain violations.
EWord family_word(const FamilySpec& spec);
PolyMat2 family_build(const FamilySpec& spec);

/// (-1)^k diag(a,b)_[k] E(0) E(-(a/b)^{(-1)^k} u_k) ... E(-(a/b) u_2)
///   E(-(b/a) u_1 + u_1(h+1)) E(u_2(h+1)) ... E(u_k(h+1)).
PolyMat2 make_similar_to_diag(const Scalar& a, const Scalar& b, const std::vector<Poly>& u);

/// Sub-cases of the length formula for P^{-1} E_(1,1)(u_1..u_k) P(h+1) with
/// P = E_(1,1)(v_1..v_p) standard.
enum class V1Class { nonzero_constant, nonconstant_far, nonconstant_near };
enum class VpClass { nonconstant, nonzero_constant, zero, inverse_gap, other_constant };

struct LengthCase {
  V1Class v1;        // (i): v1 in C*; (ii): u1-v1 nonconstant; (iii): u1-v1 in C*
  int p = 1;
  VpClass vp = VpClass::nonconstant;  // inverse_gap/other_constant only for (iii), p = 2
};

/// Throws PreconditionError for descriptors the formula does not cover.
std::size_t predict_conjugation_length(std::size_t k, const LengthCase& c);

/// Same table, except case (i) with p > 1: the interior constant E(v_1)
/// is absorbed by rule (vi), giving one less in each sub-case.
std::size_t predict_conjugation_length_corrected(std::size_t k, const LengthCase& c);

}  // namespace sl2
