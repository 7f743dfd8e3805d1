#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2/modules.hpp"

namespace sl2 {

/// (beta1, beta2, u_1..u_k), every u_i nonconstant.
struct ParamTuple {
  Scalar beta1{1}, beta2{1};
  std::vector<Poly> u;

  std::size_t k() const { return u.size(); }
  bool valid() const;
  EWord word() const { return {{beta1, beta2}, u}; }
  PolyMat2 matrix() const { return expand(word()); }
  std::string to_string() const;
  friend bool operator==(const ParamTuple&, const ParamTuple&) = default;
};

/// Requires every factor nonconstant.
ParamTuple tuple_from_word(const EWord& w);

/// (eta, m) in C* x| Z, with (e1,m1)(e2,m2) = (e1 e2^{(-1)^m1}, m1+m2).
struct GroupElement {
  Scalar eta{1};
  long m = 0;
  std::string to_string() const;  // "(eta=2, m=1)"
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// eta^{(-1)^m}
Scalar phi(long m, const Scalar& eta);

ParamTuple act_T(const ParamTuple& X);
ParamTuple act_T_inv(const ParamTuple& X);
ParamTuple act_T_pow(const ParamTuple& X, long m);
ParamTuple act_S(const Scalar& eta, const ParamTuple& X);

GroupElement group_mul(const GroupElement& g1, const GroupElement& g2);
GroupElement group_inv(const GroupElement& g);
/// S_eta(T^m(X)).
ParamTuple act_group(const GroupElement& g, const ParamTuple& X);

/// P with P^{-1} E_X P(h+1) = E_{g*X}.
PolyMat2 orbit_conjugator(const ParamTuple& X, const GroupElement& g);

/// Some g with g*X == Y, checked exactly; empty if none exists.
std::optional<GroupElement> orbit_membership(const ParamTuple& X, const ParamTuple& Y);

struct IsoWitness {
  GroupElement g;              // relates the canonical tuples
  ParamTuple X, Y;             // canonical tuples of A and B
  PolyMat2 P;                  // module certificate: verify_iso_certificate(A, B, P)
};

/// Scalar-type modules with K in S only (PreconditionError otherwise).
/// (0,-2,0) is bridged to (0,2,0) with alpha -> 1 - alpha first.
std::optional<IsoWitness> isomorphism_test(const ModuleSpec& A, const ModuleSpec& B);

/// The automorphisms T_gamma, theta, sigma and Psi(gamma, m) = T_gamma S^m
/// with S = theta sigma.
PolyMat2 aut_T(const PolyMat2& A, const Scalar& gamma);
PolyMat2 aut_theta(const PolyMat2& A);
PolyMat2 aut_theta_inv(const PolyMat2& A);
PolyMat2 aut_sigma(const PolyMat2& A);
PolyMat2 aut_S_pow(const PolyMat2& A, long m);
PolyMat2 aut_psi(const PolyMat2& A, const Scalar& gamma, long m);

struct AutMaps {
  PolyMat2 T_gamma, theta, sigma, psi;
};
AutMaps aut_maps(const PolyMat2& A, const Scalar& gamma, long m);

}  // namespace sl2
