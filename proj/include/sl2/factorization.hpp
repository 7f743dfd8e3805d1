#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sl2/polymat.hpp"

namespace sl2 {

/// diag(b1,b2) E(v_1)...E(v_l) with v_i nonconstant for 1 < i < l, and
/// (v_1,v_2) != (0,0) when l = 2. Unique per matrix.
struct StandardForm {
  DiagPair front;
  std::vector<Poly> factors;

  std::size_t length() const { return factors.size(); }
  EWord word() const { return {front, factors}; }
  PolyMat2 matrix() const { return expand(word()); }
  friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

/// Checks the interior/length-2 conditions above.
bool is_standard(const EWord& w);

/// [[a,0],[u,b]] E(q_T) ... E(q_1); quotients[i] holds q_{i+1}.
struct LQForm {
  Scalar a{1};
  Scalar b{1};
  Poly u;
  std::vector<Poly> quotients;

  PolyMat2 front() const { return {a, 0, u, b}; }
  PolyMat2 matrix() const;
  friend bool operator==(const LQForm&, const LQForm&) = default;
};

/// a, b nonzero and q_i nonconstant for i > 1.
bool is_valid(const LQForm& f);

/// Euclid on the first row. Requires a unit.
LQForm lq_form(const PolyMat2& K);

/// "[[a,0],[u,b]] E(q_T) ... E(q_1)"
std::string to_string(const LQForm& f);

/// Rewrites with the shortening identities until the word is standard.
/// Priority: interior E(0), constant triple, interior constant, then moving
/// diagonals to the front; leftmost match first.
StandardForm reduce_word(const EWord& w);

/// diag(-a,-b) E(0) E(u/b) E(q_T) ... E(q_1): the word read off the LQ form.
EWord lq_word(const LQForm& f);

/// Standard form through the LQ form and the four-case transition.
StandardForm standard_form(const PolyMat2& K);

std::size_t length(const PolyMat2& K);

}  // namespace sl2
