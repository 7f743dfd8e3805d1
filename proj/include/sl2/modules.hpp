#pragma once

#include <functional>
#include <optional>
#include <string>

#include "sl2/twisted.hpp"

namespace sl2 {

/// (a_-, a_0, a_+) with a_- + |a_0| + a_+ = 2.
struct TripleA {
  int minus = 2;
  int zero = 0;
  int plus = 0;

  bool valid() const;
  std::string to_string() const;  // "2,0,0"
  friend bool operator==(const TripleA&, const TripleA&) = default;
};

/// Every rank-2 triple, including those with a_0 < 0.
std::vector<TripleA> all_triples();

/// M(alpha, a, K).
struct ModuleSpec {
  Scalar alpha;
  TripleA triple;
  PolyMat2 K = PolyMat2::identity();
};

/// Column (g1, g2)^T.
struct Vector2 {
  Poly g1, g2;
  friend bool operator==(const Vector2&, const Vector2&) = default;
  friend Vector2 operator+(const Vector2& x, const Vector2& y) { return {x.g1 + y.g1, x.g2 + y.g2}; }
  friend Vector2 operator-(const Vector2& x, const Vector2& y) { return {x.g1 - y.g1, x.g2 - y.g2}; }
  friend Vector2 operator*(const Poly& p, const Vector2& x) { return {p * x.g1, p * x.g2}; }
};

Vector2 operator*(const PolyMat2& A, const Vector2& v);
Vector2 shift(const Vector2& v, long m);

PolyMat2 p_matrix(const TripleA& t, const Scalar& alpha);
PolyMat2 pbar_matrix(const TripleA& t, const Scalar& alpha);

enum class Generator { e, f, h };

/// e.v = sigma(K^{-1} Pbar v), f.v = P K sigma^{-1}(v), h.v = h v.
Vector2 act(const ModuleSpec& spec, Generator g, const Vector2& v);

/// Pluggable action, used to feed deliberately broken operators to the checks.
struct ModuleOps {
  std::function<Vector2(const Vector2&)> e, f, h;
};
ModuleOps standard_ops(const ModuleSpec& spec);

struct RelationReport {
  bool ok = true;
  std::string failure;  // empty when ok: which relation and which basis vector
  int checked = 0;      // basis vectors examined
};

/// [h,e] = e, [e,f] = 2h, [h,f] = -f on h^j e_i, j <= degree_bound.
RelationReport verify_relations(const ModuleOps& ops, int degree_bound);
RelationReport verify_relations(const ModuleSpec& spec, int degree_bound);

/// c = (2h+1)^2 + 4fe acts by (2 alpha - 1)^2 on the same basis.
RelationReport casimir_check(const ModuleOps& ops, const Scalar& expected, int degree_bound);
RelationReport casimir_check(const ModuleSpec& spec, int degree_bound);
Scalar casimir_scalar(const Scalar& alpha);

bool is_scalar_type(const TripleA& t);

/// alpha in 1 + (1/2) Z_{>=0}.
bool alpha_excluded(const Scalar& alpha);

/// prod_{j=0}^{2 alpha - 2} (h + alpha - 1 - j). Requires alpha_excluded(alpha).
Poly u_alpha(const Scalar& alpha);
/// The same product as text: "(h+1/2)*(h-1/2)".
std::string u_alpha_factored(const Scalar& alpha);

/// (h + alpha - 1) q(h-1) == (h - alpha) q(h).
bool satisfies_shift_equation(const Scalar& alpha, const Poly& q);

/// K ~ [[a,u],[0,b]]: a rank-1 submodule exists. `witness` conjugates K to
/// that triangular matrix.
struct Rank1Decomposition {
  Scalar a, b;
  Poly u;
  PolyMat2 witness;
};

/// Requires a scalar-type triple. Empty exactly when K is in S.
std::optional<Rank1Decomposition> rank1_submodules(const ModuleSpec& spec);

enum class SimplicityReason { simple, k_not_in_s, alpha_excluded };
std::string to_string(SimplicityReason r);

struct SimplicityVerdict {
  bool simple = false;
  SimplicityReason reason = SimplicityReason::simple;
  std::optional<InS> in_s;                     // reason simple / alpha_excluded
  std::optional<Rank1Decomposition> rank1;     // reason k_not_in_s
  std::optional<Poly> submodule_generator;     // reason alpha_excluded: u_alpha
  Scalar alpha_used;                           // alpha after the (0,-2,0) bridge
  TripleA triple_used;
};

/// Scalar-type only; other triples raise PreconditionError.
SimplicityVerdict is_simple(const ModuleSpec& spec);

/// (0,-2,0) at alpha is the same module as (0,2,0) at 1 - alpha.
ModuleSpec normalize_triple(const ModuleSpec& spec);

struct QuotientReport {
  bool submodule_stable = false;  // V = (u_alpha C[h])^2 closed under e, f, h
  bool formula_holds = false;     // the explicit e/f formulas on V
  bool highest_weight = false;    // e v_i in V and 2h v_i - 2(alpha-1) v_i in V
  Scalar weight;                  // 2(alpha - 1)
  int dimension = 0;              // dim of the quotient = 2 deg u_alpha
  Poly generator;                 // u_alpha
  bool ok() const { return submodule_stable && formula_holds && highest_weight; }
};

QuotientReport quotient_hw_check(const ModuleSpec& spec, int degree_bound);

/// P(h) P_a(h) K2(h) == P_a(h) K1(h) P(h+1). Throws PreconditionError when
/// the parameters are not compatible.
bool verify_iso_certificate(const ModuleSpec& A, const ModuleSpec& B, const PolyMat2& P);

}  // namespace sl2
