#include "sl2/families.hpp"

#include "sl2/errors.hpp"

namespace sl2 {

namespace {

Scalar sign_pow(long e) { return (e % 2 == 0) ? Scalar(1) : Scalar(-1); }

// x^{(-1)^e}
Scalar alt(const Scalar& x, long e) { return (e % 2 == 0) ? x : x.inverse(); }

DiagPair times(const DiagPair& d, const Scalar& s1, const Scalar& s2) { return {d.d1 * s1, d.d2 * s2}; }

void check_common(const FamilySpec& s) {
  if (s.a.is_zero() || s.b.is_zero()) throw PreconditionError("a and b must be nonzero");
  if ((s.eps != 0 && s.eps != 1) || (s.delta != 0 && s.delta != 1))
    throw PreconditionError("epsilon and delta must be 0 or 1");
  if (s.beta.is_zero() || s.eta.is_zero()) throw PreconditionError("beta and eta must be nonzero");
}

void check_u(const std::vector<Poly>& u) {
  if (u.empty()) throw PreconditionError("family needs k >= 1 polynomials");
  for (const auto& p : u)
    if (p.is_constant()) throw PreconditionError("family polynomials must be nonconstant");
}

void push_zeros(std::vector<Poly>& f, int n) {
  for (int i = 0; i < n; ++i) f.emplace_back(0);
}

EWord build_D(const FamilySpec& s) {
  long k = static_cast<long>(s.u.size());
  Scalar ab = s.a / s.b;
  EWord w{DiagPair{s.a, s.b}.swapped_if(k + s.eps + s.delta), {}};
  w.front = times(w.front, sign_pow(k), sign_pow(k));
  push_zeros(w.factors, 1 - s.eps);
  for (long i = k; i >= 2; --i) w.factors.push_back(-alt(ab, i + s.delta) * s.u[i - 1]);
  w.factors.push_back(s.u[0]);
  for (long j = 2; j <= k; ++j) w.factors.push_back(sigma_inv(s.u[j - 1]));
  push_zeros(w.factors, s.eps);
  return w;
}

EWord build_G(const FamilySpec& s) {
  long k = static_cast<long>(s.u.size());
  Scalar ab = s.a / s.b, c = s.beta * s.beta * ab;
  EWord w{DiagPair{s.a, s.b}.swapped_if(k + 1 - s.eps), {}};
  Scalar sg = sign_pow(k + 1);
  w.front = times(w.front, sg * alt(s.beta, k + 1 - s.eps), sg * alt(s.beta, k + s.eps));
  push_zeros(w.factors, 1 - s.eps);
  for (long i = k; i >= 2; --i) w.factors.push_back(-alt(c, i + 1) * s.u[i - 1]);
  w.factors.push_back(-c * s.u[0] - Poly(s.beta));
  w.factors.push_back(sigma_inv(s.u[0]) - Poly(s.beta.inverse()));
  for (long j = 2; j <= k; ++j) w.factors.push_back(sigma_inv(s.u[j - 1]));
  push_zeros(w.factors, s.eps);
  return w;
}

EWord build_K(const FamilySpec& s) {
  long k = static_cast<long>(s.u.size());
  Scalar ab = s.a / s.b, ba = s.b / s.a, einv = s.eta.inverse();
  EWord w;
  if (k == 1) {
    w.front = times(DiagPair{s.a, s.b}.swapped_if(s.eps), einv, s.eta);
    w.factors = {Poly(-s.eta), s.u[0], Poly(-s.eta * alt(ba, s.eps))};
    return w;
  }
  Scalar sg = sign_pow(k + 1);
  w.front = times(DiagPair{s.a, s.b}.swapped_if(k + 1 - s.eps), sg * einv, sg * s.eta);
  w.factors.emplace_back(-s.eta);
  w.factors.push_back(-alt(ab, k + s.eps) * s.u[k - 1] - Poly(einv));
  for (long i = k - 1; i >= 2; --i) w.factors.push_back(-alt(ab, i + s.eps) * s.u[i - 1]);
  w.factors.push_back(s.u[0]);
  for (long j = 2; j <= k; ++j) w.factors.push_back(sigma_inv(s.u[j - 1]));
  w.factors.emplace_back(-s.eta * alt(ba, k + 1 - s.eps));
  return w;
}

EWord build_Z(const FamilySpec& s) {
  long k = static_cast<long>(s.u.size());
  Scalar c = s.beta * s.beta * s.a / s.b, einv = s.eta.inverse(), binv = s.beta.inverse();
  Scalar sg = sign_pow(k);
  EWord w{DiagPair{s.a, s.b}.swapped_if(k), {}};
  w.front = times(w.front, sg * einv * alt(s.beta, k), sg * s.eta * alt(s.beta, k + 1));
  w.factors.emplace_back(-s.eta);
  if (k >= 2) {
    w.factors.push_back(-alt(c, k + 1) * s.u[k - 1] - Poly(einv));
    for (long i = k - 1; i >= 2; --i) w.factors.push_back(-alt(c, i + 1) * s.u[i - 1]);
  }
  // for k = 1 the u_k and u_1 corrections land on the same factor
  w.factors.push_back(-c * s.u[0] - Poly(s.beta) - (k == 1 ? Poly(einv) : Poly(0)));
  w.factors.push_back(sigma_inv(s.u[0]) - Poly(binv));
  for (long j = 2; j <= k; ++j) w.factors.push_back(sigma_inv(s.u[j - 1]));
  w.factors.emplace_back(-s.eta * alt(c, k + 1));
  return w;
}

EWord build_sporadic(const FamilySpec& s) {
  const Scalar &a = s.a, &b = s.b, &be = s.beta, &et = s.eta;
  switch (s.sporadic_id) {
    case 0:
      return {DiagPair{a, b}.swapped_if(s.eps), {}};
    case 1: {
      EWord w{DiagPair{-a, -b}.swapped_if(s.delta), {}};
      push_zeros(w.factors, 1 - s.eps);
      w.factors.emplace_back(be);
      push_zeros(w.factors, s.eps);
      return w;
    }
    case 2:
      return {{-a / be, -b * be}, {Poly(-be - be * b / a)}};
    case 3: {
      Scalar d = be - et;
      return {{-a * be / et, -b * et / be},
              {Poly(et), Poly(-d * b / (a * be * be) + d / (be * et))}};
    }
    case 4: {
      if (s.u.size() != 1) throw PreconditionError("sporadic form 4 takes exactly one polynomial");
      check_u(s.u);
      Scalar c = be * be * a / b;
      return {{-b / (be * et), -a * be * et},
              {Poly(-et), -c * s.u[0] - Poly(be) - Poly(et.inverse()),
               sigma_inv(s.u[0]) - Poly(be.inverse()), Poly(-et * c)}};
    }
    default:
      throw PreconditionError("unknown sporadic form " + std::to_string(s.sporadic_id));
  }
}

}  // namespace

Family parse_family(const std::string& name) {
  if (name == "D") return Family::D;
  if (name == "G") return Family::G;
  if (name == "K") return Family::K;
  if (name == "Z") return Family::Z;
  if (name == "describsig" || name == "similar") return Family::describsig;
  if (name == "sporadic") return Family::sporadic;
  throw PreconditionError("unknown family '" + name + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::D: return "D";
    case Family::G: return "G";
    case Family::K: return "K";
    case Family::Z: return "Z";
    case Family::describsig: return "similar";
    case Family::sporadic: return "sporadic";
  }
  return "?";
}

EWord family_word(const FamilySpec& spec) {
  check_common(spec);
  switch (spec.family) {
    case Family::D: check_u(spec.u); return build_D(spec);
    case Family::G: check_u(spec.u); return build_G(spec);
    case Family::K: check_u(spec.u); return build_K(spec);
    case Family::Z: check_u(spec.u); return build_Z(spec);
    case Family::sporadic: return build_sporadic(spec);
    case Family::describsig: break;
  }
  throw PreconditionError("use make_similar_to_diag for the describing product");
}

PolyMat2 family_build(const FamilySpec& spec) {
  if (spec.family == Family::describsig) {
    check_common(spec);
    return make_similar_to_diag(spec.a, spec.b, spec.u);
  }
  return expand(family_word(spec));
}

PolyMat2 make_similar_to_diag(const Scalar& a, const Scalar& b, const std::vector<Poly>& u) {
  if (a.is_zero() || b.is_zero()) throw PreconditionError("a and b must be nonzero");
  long k = static_cast<long>(u.size());
  if (k < 1) throw PreconditionError("need k >= 1");
  for (long j = 2; j < k; ++j)
    if (u[j - 1].is_constant()) throw PreconditionError("interior polynomials must be nonconstant");
  if (k == 2 && u[0].is_zero() && u[1].is_zero()) throw PreconditionError("(u1,u2) must not be (0,0)");
  Scalar ab = a / b;
  EWord w{DiagPair{a, b}.swapped_if(k), {Poly(0)}};
  Scalar sg = sign_pow(k);
  w.front = times(w.front, sg, sg);
  for (long i = k; i >= 2; --i) w.factors.push_back(-alt(ab, i) * u[i - 1]);
  w.factors.push_back(sigma_inv(u[0]) - (b / a) * u[0]);
  for (long j = 2; j <= k; ++j) w.factors.push_back(sigma_inv(u[j - 1]));
  return expand(w);
}

std::size_t predict_conjugation_length(std::size_t k, const LengthCase& c) {
  if (k < 1 || c.p < 1) throw PreconditionError("need k >= 1 and p >= 1");
  std::size_t p = c.p;
  auto bad = [] { return PreconditionError("descriptor not covered by the length formula"); };
  switch (c.v1) {
    case V1Class::nonzero_constant:
      if (p == 1) return k + 2;
      switch (c.vp) {
        case VpClass::nonconstant: return k + 2 * p;
        case VpClass::nonzero_constant: return k + 2 * p - 1;
        case VpClass::zero: return k + 2 * p - 2;
        default: throw bad();
      }
    case V1Class::nonconstant_far:
      switch (c.vp) {
        case VpClass::nonconstant: return k + 2 * p;
        case VpClass::nonzero_constant: if (p > 1) return k + 2 * p - 1; throw bad();
        case VpClass::zero: if (p > 1) return k + 2 * p - 2; throw bad();
        default: throw bad();
      }
    case V1Class::nonconstant_near:
      if (c.vp == VpClass::nonconstant) return k + 2 * p - 1;
      if (p == 2) {
        if (c.vp == VpClass::inverse_gap) return k + 1;
        if (c.vp == VpClass::other_constant) return k + 2;
        throw bad();
      }
      if (p > 2 && c.vp == VpClass::nonzero_constant) return k + 2 * p - 2;
      if (p > 2 && c.vp == VpClass::zero) return k + 2 * p - 3;
      throw bad();
  }
  throw bad();
}

std::size_t predict_conjugation_length_corrected(std::size_t k, const LengthCase& c) {
  std::size_t n = predict_conjugation_length(k, c);
  return (c.v1 == V1Class::nonzero_constant && c.p > 1) ? n - 1 : n;
}

}  // namespace sl2
