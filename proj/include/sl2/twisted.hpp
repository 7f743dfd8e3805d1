#pragma once

#include <variant>

#include "sl2/factorization.hpp"

namespace sl2 {

/// K is sigma^{-1}-similar to expand(canonical), whose factors are all
/// nonconstant: twisted_conjugate(K, witness) == canonical.matrix().
struct InS {
  StandardForm canonical;
  PolyMat2 witness;
};

/// twisted_conjugate(K, witness) == diag.matrix().
struct NotInS {
  DiagPair diag;
  PolyMat2 witness;
};

using SMembership = std::variant<InS, NotInS>;

inline bool in_S(const SMembership& m) { return std::holds_alternative<InS>(m); }

/// Decides whether K avoids every sigma^{-1}-class of a constant diagonal.
/// The returned witness has already been checked; a failed check throws
/// CertificateError. Constant matrices whose eigenvalues leave Q(i) raise
/// FieldLimitError.
SMembership s_membership(const PolyMat2& K);

/// Re-checks a verdict against K.
bool verify(const PolyMat2& K, const SMembership& m);

}  // namespace sl2
