#include "sl2/twisted.hpp"

#include "sl2/errors.hpp"

namespace sl2 {

namespace {

bool all_nonconstant(const std::vector<Poly>& v) {
  for (const auto& p : v)
    if (p.is_constant()) return false;
  return true;
}

// Working state: cur = P^{-1} K P(h+1).
struct Reduction {
  PolyMat2 cur;
  PolyMat2 P = PolyMat2::identity();

  void conjugate(const PolyMat2& Q) {
    cur = twisted_conjugate(cur, Q);
    P = P * Q;
  }
};

bool upper_triangular(const PolyMat2& A) { return A(1, 0).is_zero(); }
bool lower_triangular(const PolyMat2& A) { return A(0, 1).is_zero(); }

// [[a,u],[0,b]] -> diag(a,b) with [[1,v],[0,1]], a v(h+1) - b v(h) = -u.
void collapse_upper(Reduction& r) {
  Scalar a = r.cur(0, 0).leading(), b = r.cur(1, 1).leading();
  if (!r.cur(0, 1).is_zero()) r.conjugate({1, solve_T(a, b, -r.cur(0, 1)), 0, 1});
}

// Constant, non-triangular: move an eigenvector to the first column.
void triangularize_constant(Reduction& r) {
  Scalar p = r.cur(0, 0).coeff(0), q = r.cur(0, 1).coeff(0);
  Scalar c = r.cur(1, 0).coeff(0), s = r.cur(1, 1).coeff(0);
  Scalar disc = (p + s) * (p + s) - Scalar(4) * (p * s - q * c);
  auto root = exact_sqrt(disc);
  if (!root)
    throw FieldLimitError("constant matrix " + r.cur.to_string() +
                          " has eigenvalues outside Q(i)");
  Scalar lambda = (p + s + *root) * Scalar::rational(1, 2);
  r.conjugate({lambda - s, 1, c, 0});
}

}  // namespace

SMembership s_membership(const PolyMat2& K) {
  require_unit(K, "s_membership");
  Reduction r{K};
  std::size_t budget = 4 * (length(K) + 4);
  for (std::size_t iter = 0;; ++iter) {
    if (iter > budget) throw CertificateError("s_membership: reduction did not terminate");

    if (lower_triangular(r.cur) && !upper_triangular(r.cur))
      r.conjugate(PolyMat2::E(0));  // [[a,0],[u,b]] -> [[b,-u],[0,a]]
    if (upper_triangular(r.cur)) {
      collapse_upper(r);
      NotInS out{{r.cur(0, 0).leading(), r.cur(1, 1).leading()}, r.P};
      if (!verify(K, out)) throw CertificateError("s_membership: diagonal certificate failed");
      return out;
    }
    if (r.cur.is_constant()) {
      triangularize_constant(r);
      continue;
    }

    StandardForm sf = standard_form(r.cur);
    auto& v = sf.factors;
    const Scalar &a = sf.front.d1, &b = sf.front.d2;
    if (all_nonconstant(v)) {
      InS out{sf, r.P};
      if (!verify(K, out)) throw CertificateError("s_membership: canonical certificate failed");
      return out;
    }
    if (v.back().is_constant()) {
      // X E(beta) ~ E(beta) X
      r.conjugate(PolyMat2::E(v.back()).inverse());
      continue;
    }
    // diag(a,b) E(w) E(u_1)...E(u_k), w constant, u_i nonconstant
    const Poly& omega = v.front();
    std::size_t k = v.size() - 1;
    if (k >= 2) {
      r.conjugate(PolyMat2::E(shift(v.back(), -1)).inverse());
    } else if (omega.is_zero()) {
      // diag(a,b)E(0)E(u) = E(w)^{-1} diag(-b,-a) E(w(h+1)) for u = T_{1,a/b}(w)
      Poly w = solve_T(Scalar(1), a / b, v[1]);
      r.conjugate(PolyMat2::E(w).inverse());
    } else {
      Scalar winv = omega.leading().inverse();
      r.conjugate(PolyMat2::E(0) * PolyMat2::E(Poly(winv) - shift(v[1], -1)) * PolyMat2::E(0));
    }
  }
}

bool verify(const PolyMat2& K, const SMembership& m) {
  if (const auto* in = std::get_if<InS>(&m)) {
    if (in->canonical.factors.empty() || !all_nonconstant(in->canonical.factors)) return false;
    if (!in->witness.is_unit()) return false;
    return twisted_conjugate(K, in->witness) == in->canonical.matrix();
  }
  const auto& out = std::get<NotInS>(m);
  if (!out.witness.is_unit()) return false;
  return twisted_conjugate(K, out.witness) == out.diag.matrix();
}

}  // namespace sl2
