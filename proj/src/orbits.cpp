#include "sl2/orbits.hpp"

#include "sl2/errors.hpp"

namespace sl2 {

bool ParamTuple::valid() const {
  if (beta1.is_zero() || beta2.is_zero() || u.empty()) return false;
  for (const auto& p : u)
    if (p.is_constant()) return false;
  return true;
}

std::string ParamTuple::to_string() const {
  std::string s = "(" + beta1.to_string() + ", " + beta2.to_string() + "; ";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? ", " : "") + u[i].to_string();
  return s + ")";
}

std::string GroupElement::to_string() const {
  return "(eta=" + eta.to_string() + ", m=" + std::to_string(m) + ")";
}

Scalar phi(long m, const Scalar& eta) { return (m % 2 == 0) ? eta : eta.inverse(); }

namespace {

void require_tuple(const ParamTuple& X) {
  if (!X.valid()) throw PreconditionError("parameter tuple needs nonzero betas and nonconstant u_i");
}

}  // namespace

ParamTuple tuple_from_word(const EWord& w) {
  ParamTuple X{w.front.d1, w.front.d2, w.factors};
  require_tuple(X);
  return X;
}

ParamTuple act_T(const ParamTuple& X) {
  require_tuple(X);
  ParamTuple Y{X.beta2, X.beta1, {}};
  Y.u.push_back((X.beta1 / X.beta2) * sigma(X.u.back()));
  Y.u.insert(Y.u.end(), X.u.begin(), X.u.end() - 1);
  return Y;
}

ParamTuple act_T_inv(const ParamTuple& X) {
  require_tuple(X);
  ParamTuple Y{X.beta2, X.beta1, {X.u.begin() + 1, X.u.end()}};
  Y.u.push_back((X.beta1 / X.beta2) * sigma_inv(X.u.front()));
  return Y;
}

ParamTuple act_T_pow(const ParamTuple& X, long m) {
  ParamTuple Y = X;
  for (long i = 0; i < m; ++i) Y = act_T(Y);
  for (long i = 0; i > m; --i) Y = act_T_inv(Y);
  return Y;
}

ParamTuple act_S(const Scalar& eta, const ParamTuple& X) {
  require_tuple(X);
  if (eta.is_zero()) throw PreconditionError("eta must be nonzero");
  long k = static_cast<long>(X.k());
  bool odd = k % 2 == 1;
  ParamTuple Y{odd ? X.beta1 * eta : X.beta1, odd ? X.beta2 / eta : X.beta2, {}};
  Scalar einv = eta.inverse();
  for (long i = 1; i <= k; ++i) {
    // eps_i = (-1)^{i-1+k}
    bool plus = (i - 1 + k) % 2 == 0;
    Y.u.push_back((plus ? eta : einv) * X.u[i - 1]);
  }
  return Y;
}

GroupElement group_mul(const GroupElement& g1, const GroupElement& g2) {
  return {g1.eta * phi(g1.m, g2.eta), g1.m + g2.m};
}

GroupElement group_inv(const GroupElement& g) { return {phi(g.m, g.eta.inverse()), -g.m}; }

ParamTuple act_group(const GroupElement& g, const ParamTuple& X) {
  return act_S(g.eta, act_T_pow(X, g.m));
}

PolyMat2 orbit_conjugator(const ParamTuple& X, const GroupElement& g) {
  require_tuple(X);
  PolyMat2 P = PolyMat2::identity();
  ParamTuple Z = X;
  for (long i = 0; i < g.m; ++i) {
    P = P * PolyMat2::E(sigma(Z.u.back())).inverse();
    Z = act_T(Z);
  }
  for (long i = 0; i > g.m; --i) {
    P = P * PolyMat2::E((Z.beta1 / Z.beta2) * Z.u.front());
    Z = act_T_inv(Z);
  }
  return P * PolyMat2::diag(1, g.eta);
}

std::optional<GroupElement> orbit_membership(const ParamTuple& X, const ParamTuple& Y) {
  require_tuple(X);
  require_tuple(Y);
  if (X.k() != Y.k()) return std::nullopt;
  long k = static_cast<long>(X.k());
  const Poly& y1 = Y.u.front();
  Degree d = y1.degree();
  Scalar ysub = y1.coeff(d - 1) / y1.leading();
  ParamTuple Z = X;
  for (long r = 0; r < k; ++r, Z = act_T(Z)) {
    const Poly& z1 = Z.u.front();
    if (z1.degree() != d) continue;
    // monic(y1)(h) = monic(z1)(h - q)
    Scalar q = (z1.coeff(d - 1) / z1.leading() - ysub) / Scalar(d);
    if (!q.is_integer()) continue;
    mpz_class qz = q.re().get_num();
    if (!qz.fits_slong_p()) continue;
    long j = qz.get_si() * k + r;
    ParamTuple W = act_T_pow(X, j);
    Scalar ratio = y1.leading() / W.u.front().leading();
    Scalar eta = (k % 2 == 0) ? ratio : ratio.inverse();
    GroupElement g{eta, j};
    if (act_group(g, X) == Y) return g;
  }
  return std::nullopt;
}

std::optional<IsoWitness> isomorphism_test(const ModuleSpec& A0, const ModuleSpec& B0) {
  if (!is_scalar_type(A0.triple) || !is_scalar_type(B0.triple))
    throw PreconditionError("isomorphism test needs scalar-type triples");
  ModuleSpec A = normalize_triple(A0), B = normalize_triple(B0);
  SMembership ma = s_membership(A.K), mb = s_membership(B.K);
  if (!in_S(ma) || !in_S(mb)) throw PreconditionError("isomorphism test needs K in S for both modules");
  if (!(A.alpha == B.alpha) || !(A.triple == B.triple)) return std::nullopt;
  const InS& ia = std::get<InS>(ma);
  const InS& ib = std::get<InS>(mb);
  IsoWitness w{{}, tuple_from_word(ia.canonical.word()), tuple_from_word(ib.canonical.word()), {}};
  auto g = orbit_membership(w.X, w.Y);
  if (!g) return std::nullopt;
  w.g = *g;
  w.P = ia.witness * orbit_conjugator(w.X, w.g) * ib.witness.inverse();
  if (!verify_iso_certificate(A, B, w.P)) throw CertificateError("isomorphism certificate failed");
  return w;
}

PolyMat2 aut_T(const PolyMat2& A, const Scalar& gamma) {
  if (gamma.is_zero()) throw PreconditionError("gamma must be nonzero");
  return PolyMat2::diag(gamma, 1) * A * PolyMat2::diag(gamma.inverse(), 1);
}

PolyMat2 aut_theta(const PolyMat2& A) { return PolyMat2::E(0) * A * PolyMat2::E(0).inverse(); }
PolyMat2 aut_theta_inv(const PolyMat2& A) { return PolyMat2::E(0).inverse() * A * PolyMat2::E(0); }
PolyMat2 aut_sigma(const PolyMat2& A) { return shift(A, -1); }

PolyMat2 aut_S_pow(const PolyMat2& A, long m) {
  PolyMat2 r = A;
  for (long i = 0; i < m; ++i) r = aut_theta(aut_sigma(r));
  for (long i = 0; i > m; --i) r = shift(aut_theta_inv(r), 1);
  return r;
}

PolyMat2 aut_psi(const PolyMat2& A, const Scalar& gamma, long m) { return aut_T(aut_S_pow(A, m), gamma); }

AutMaps aut_maps(const PolyMat2& A, const Scalar& gamma, long m) {
  require_unit(A, "aut");
  return {aut_T(A, gamma), aut_theta(A), aut_sigma(A), aut_psi(A, gamma, m)};
}

}  // namespace sl2
