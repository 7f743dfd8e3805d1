#include "sl2/modules.hpp"

#include <cstdlib>

#include "sl2/errors.hpp"

namespace sl2 {

bool TripleA::valid() const { return minus >= 0 && plus >= 0 && minus + std::abs(zero) + plus == 2; }

std::string TripleA::to_string() const {
  return std::to_string(minus) + "," + std::to_string(zero) + "," + std::to_string(plus);
}

std::vector<TripleA> all_triples() {
  return {{2, 0, 0}, {0, 2, 0}, {0, -2, 0}, {0, 0, 2}, {1, 1, 0}, {1, -1, 0},
          {1, 0, 1}, {0, 1, 1}, {0, -1, 1}};
}

Vector2 operator*(const PolyMat2& A, const Vector2& v) {
  return {A(0, 0) * v.g1 + A(0, 1) * v.g2, A(1, 0) * v.g1 + A(1, 1) * v.g2};
}

Vector2 shift(const Vector2& v, long m) { return {shift(v.g1, m), shift(v.g2, m)}; }

namespace {

Poly linear(const Scalar& c) { return Poly(std::vector<Scalar>{c, Scalar(1)}); }

// h - alpha + 1 and h + alpha
Poly x_minus(const Scalar& alpha) { return linear(Scalar(1) - alpha); }
Poly x_plus(const Scalar& alpha) { return linear(alpha); }

void require_triple(const TripleA& t) {
  if (!t.valid()) throw PreconditionError("triple " + t.to_string() + " does not satisfy a- + |a0| + a+ = 2");
}

// Diagonal entries of P for a triple; pbar entries are -(x-a+1)(x+a)/P_ii.
std::pair<std::array<Poly, 2>, std::array<Poly, 2>> p_entries(const TripleA& t, const Scalar& alpha) {
  require_triple(t);
  std::array<Poly, 2> p, pb;
  Poly xm = x_minus(alpha), xp = x_plus(alpha);
  int i = 0;
  for (int j = 0; j < t.minus; ++j, ++i) {
    p[i] = Poly(1);
    pb[i] = -(xm * xp);
  }
  for (int j = 0; j < std::abs(t.zero); ++j, ++i) {
    p[i] = t.zero > 0 ? xm : xp;
    pb[i] = -(t.zero > 0 ? xp : xm);
  }
  for (int j = 0; j < t.plus; ++j, ++i) {
    p[i] = xm * xp;
    pb[i] = Poly(-1);
  }
  return {p, pb};
}

bool divisible(const Poly& p, const Poly& d) { return euclid_div(p, d).remainder.is_zero(); }
bool divisible(const Vector2& v, const Poly& d) { return divisible(v.g1, d) && divisible(v.g2, d); }

Vector2 basis(int i, int j) {
  Poly m = Poly::monomial(Scalar(1), j);
  return i == 0 ? Vector2{m, Poly()} : Vector2{Poly(), m};
}

std::string basis_name(int i, int j) {
  return "h^" + std::to_string(j) + "*e" + std::to_string(i + 1);
}

}  // namespace

PolyMat2 p_matrix(const TripleA& t, const Scalar& alpha) {
  auto [p, pb] = p_entries(t, alpha);
  return {p[0], 0, 0, p[1]};
}

PolyMat2 pbar_matrix(const TripleA& t, const Scalar& alpha) {
  auto [p, pb] = p_entries(t, alpha);
  return {pb[0], 0, 0, pb[1]};
}

Vector2 act(const ModuleSpec& spec, Generator g, const Vector2& v) {
  switch (g) {
    case Generator::e:
      return shift(spec.K.inverse() * (pbar_matrix(spec.triple, spec.alpha) * v), -1);
    case Generator::f:
      return p_matrix(spec.triple, spec.alpha) * (spec.K * shift(v, 1));
    case Generator::h:
      return Poly::h() * v;
  }
  return v;
}

ModuleOps standard_ops(const ModuleSpec& spec) {
  require_unit(spec.K, "module matrix");
  require_triple(spec.triple);
  PolyMat2 P = p_matrix(spec.triple, spec.alpha);
  PolyMat2 eop = spec.K.inverse() * pbar_matrix(spec.triple, spec.alpha);
  PolyMat2 fop = P * spec.K;
  return {[eop](const Vector2& v) { return shift(eop * v, -1); },
          [fop](const Vector2& v) { return fop * shift(v, 1); },
          [](const Vector2& v) { return Poly::h() * v; }};
}

RelationReport verify_relations(const ModuleOps& ops, int degree_bound) {
  RelationReport rep;
  for (int j = 0; j <= degree_bound; ++j) {
    for (int i = 0; i < 2; ++i) {
      Vector2 v = basis(i, j);
      Vector2 ev = ops.e(v), fv = ops.f(v), hv = ops.h(v);
      ++rep.checked;
      const char* failed = nullptr;
      if (!(ops.h(ev) - ops.e(hv) == ev))
        failed = "[h,e]=e";
      else if (!(ops.e(fv) - ops.f(ev) == Poly(2) * hv))
        failed = "[e,f]=2h";
      else if (!(ops.h(fv) - ops.f(hv) == Poly(-1) * fv))
        failed = "[h,f]=-f";
      if (failed) {
        rep.ok = false;
        rep.failure = std::string(failed) + " fails on " + basis_name(i, j);
        return rep;
      }
    }
  }
  return rep;
}

RelationReport verify_relations(const ModuleSpec& spec, int degree_bound) {
  return verify_relations(standard_ops(spec), degree_bound);
}

Scalar casimir_scalar(const Scalar& alpha) {
  Scalar t = Scalar(2) * alpha - Scalar(1);
  return t * t;
}

RelationReport casimir_check(const ModuleOps& ops, const Scalar& expected, int degree_bound) {
  RelationReport rep;
  for (int j = 0; j <= degree_bound; ++j) {
    for (int i = 0; i < 2; ++i) {
      Vector2 v = basis(i, j);
      // (2h+1) applied twice
      Vector2 w = ops.h(v) + ops.h(v) + v;
      w = ops.h(w) + ops.h(w) + w;
      Vector2 cv = w + Poly(4) * ops.f(ops.e(v));
      ++rep.checked;
      if (!(cv == Poly(expected) * v)) {
        rep.ok = false;
        rep.failure = "c != " + expected.to_string() + " on " + basis_name(i, j);
        return rep;
      }
    }
  }
  return rep;
}

RelationReport casimir_check(const ModuleSpec& spec, int degree_bound) {
  return casimir_check(standard_ops(spec), casimir_scalar(spec.alpha), degree_bound);
}

bool is_scalar_type(const TripleA& t) {
  return t == TripleA{2, 0, 0} || t == TripleA{0, 2, 0} || t == TripleA{0, -2, 0} ||
         t == TripleA{0, 0, 2};
}

bool alpha_excluded(const Scalar& alpha) {
  if (!alpha.is_real()) return false;
  Scalar twice = Scalar(2) * alpha - Scalar(2);
  return twice.is_integer() && sgn(twice.re()) >= 0;
}

namespace {

long excluded_count(const Scalar& alpha) {
  if (!alpha_excluded(alpha)) throw PreconditionError("alpha must lie in 1 + (1/2)Z_{>=0}");
  mpz_class n = mpq_class(2 * alpha.re() - 2).get_num();
  if (!n.fits_slong_p() || n > 10000) throw PreconditionError("alpha too large");
  return n.get_si();
}

// prod_{j=0}^{last} (h + alpha - 1 - j)
Poly falling(const Scalar& alpha, long last) {
  Poly r(1);
  for (long j = 0; j <= last; ++j) r *= linear(alpha - Scalar(1) - Scalar(j));
  return r;
}

}  // namespace

Poly u_alpha(const Scalar& alpha) { return falling(alpha, excluded_count(alpha)); }

std::string u_alpha_factored(const Scalar& alpha) {
  long n = excluded_count(alpha);
  std::string s;
  for (long j = 0; j <= n; ++j) {
    std::string f = linear(alpha - Scalar(1) - Scalar(j)).to_string();
    s += (n == 0 ? f : "(" + f + ")");
    if (j < n) s += "*";
  }
  return s;
}

bool satisfies_shift_equation(const Scalar& alpha, const Poly& q) {
  return linear(alpha - Scalar(1)) * shift(q, -1) == linear(-alpha) * q;
}

std::optional<Rank1Decomposition> rank1_submodules(const ModuleSpec& spec) {
  if (!is_scalar_type(spec.triple))
    throw PreconditionError("rank-1 submodule test needs a scalar-type triple");
  require_unit(spec.K, "module matrix");
  const PolyMat2& K = spec.K;
  if (K(1, 0).is_zero())
    return Rank1Decomposition{K(0, 0).leading(), K(1, 1).leading(), K(0, 1), PolyMat2::identity()};
  SMembership m = s_membership(K);
  if (const auto* out = std::get_if<NotInS>(&m))
    return Rank1Decomposition{out->diag.d1, out->diag.d2, Poly(), out->witness};
  return std::nullopt;
}

std::string to_string(SimplicityReason r) {
  switch (r) {
    case SimplicityReason::simple: return "simple";
    case SimplicityReason::k_not_in_s: return "K-not-in-S";
    case SimplicityReason::alpha_excluded: return "alpha-excluded";
  }
  return "?";
}

ModuleSpec normalize_triple(const ModuleSpec& spec) {
  if (spec.triple == TripleA{0, -2, 0}) return {Scalar(1) - spec.alpha, {0, 2, 0}, spec.K};
  return spec;
}

SimplicityVerdict is_simple(const ModuleSpec& input) {
  if (!is_scalar_type(input.triple))
    throw PreconditionError("simplicity of triple " + input.triple.to_string() +
                            " is undetermined by this artifact (scalar type only)");
  ModuleSpec spec = normalize_triple(input);
  require_unit(spec.K, "module matrix");
  SimplicityVerdict v;
  v.alpha_used = spec.alpha;
  v.triple_used = spec.triple;
  SMembership m = s_membership(spec.K);
  if (!in_S(m)) {
    v.simple = false;
    v.reason = SimplicityReason::k_not_in_s;
    v.rank1 = rank1_submodules(spec);
    return v;
  }
  v.in_s = std::get<InS>(m);
  if (spec.triple == TripleA{0, 2, 0} && alpha_excluded(spec.alpha)) {
    Poly u = u_alpha(spec.alpha);
    if (!satisfies_shift_equation(spec.alpha, u))
      throw CertificateError("u_alpha fails its shift equation");
    v.simple = false;
    v.reason = SimplicityReason::alpha_excluded;
    v.submodule_generator = u;
    return v;
  }
  v.simple = true;
  v.reason = SimplicityReason::simple;
  return v;
}

QuotientReport quotient_hw_check(const ModuleSpec& spec, int degree_bound) {
  if (!(spec.triple == TripleA{0, 2, 0}))
    throw PreconditionError("quotient check needs the triple (0,2,0)");
  if (!alpha_excluded(spec.alpha)) throw PreconditionError("alpha must lie in 1 + (1/2)Z_{>=0}");
  if (!in_S(s_membership(spec.K))) throw PreconditionError("K must lie in S");
  QuotientReport rep;
  Poly u = u_alpha(spec.alpha);
  rep.generator = u;
  rep.weight = Scalar(2) * (spec.alpha - Scalar(1));
  rep.dimension = 2 * u.degree();

  ModuleOps ops = standard_ops(spec);
  PolyMat2 e_mat = shift(spec.K.inverse() * PolyMat2::diag(-1, -1) *
                             PolyMat2{x_minus(spec.alpha), 0, 0, x_minus(spec.alpha)},
                         -1);
  PolyMat2 f_mat = PolyMat2{x_plus(spec.alpha), 0, 0, x_plus(spec.alpha)} * spec.K;
  rep.submodule_stable = true;
  rep.formula_holds = true;
  for (int j = 0; j <= degree_bound; ++j) {
    for (int i = 0; i < 2; ++i) {
      Vector2 g = basis(i, j);
      Vector2 v = u * g;
      Vector2 ev = ops.e(v), fv = ops.f(v);
      if (!divisible(ev, u) || !divisible(fv, u)) rep.submodule_stable = false;
      if (!(ev == u * (e_mat * shift(g, -1))) || !(fv == u * (f_mat * shift(g, 1))))
        rep.formula_holds = false;
    }
  }

  Poly w = falling(spec.alpha, excluded_count(spec.alpha) - 1);
  rep.highest_weight = true;
  for (int i = 0; i < 2; ++i) {
    Vector2 v = w * basis(i, 0);
    Vector2 hv = Poly(2) * ops.h(v) - Poly(rep.weight) * v;
    if (!divisible(ops.e(v), u) || !divisible(hv, u)) rep.highest_weight = false;
  }
  return rep;
}

bool verify_iso_certificate(const ModuleSpec& A, const ModuleSpec& B, const PolyMat2& P) {
  bool same = A.alpha == B.alpha && A.triple == B.triple;
  bool dual = A.alpha + B.alpha == Scalar(1) &&
              B.triple == TripleA{A.triple.minus, -A.triple.zero, A.triple.plus};
  if (!same && !dual) throw PreconditionError("module parameters are not compatible");
  if (!P.is_unit()) return false;
  PolyMat2 Pa = p_matrix(A.triple, A.alpha);
  return P * Pa * B.K == Pa * A.K * shift(P, 1);
}

}  // namespace sl2
