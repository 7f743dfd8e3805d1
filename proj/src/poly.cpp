#include "sl2/poly.hpp"

#include "sl2/errors.hpp"

namespace sl2 {

Poly::Poly(Scalar c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(const Scalar& c, int power) {
  if (c.is_zero()) return Poly();
  std::vector<Scalar> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar(0);
  return c_[k];
}

bool Poly::is_real() const {
  for (const auto& c : c_)
    if (!c.is_real()) return false;
  return true;
}

bool Poly::in_field(Field f) const { return f == Field::gaussian || is_real(); }

Scalar Poly::operator()(const Scalar& x) const {
  Scalar r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {

// One signed term. `first` suppresses a leading '+'.
std::string term_text(const Scalar& c, int power, bool first) {
  std::string var;
  if (power == 1)
    var = "h";
  else if (power > 1)
    var = "h^" + std::to_string(power);

  std::string sign, body;
  if (c.is_real() || sgn(c.re()) == 0) {
    // real or purely imaginary: pull the sign out
    bool neg = c.is_real() ? sgn(c.re()) < 0 : sgn(c.im()) < 0;
    Scalar mag = neg ? -c : c;
    sign = neg ? "-" : (first ? "" : "+");
    if (var.empty())
      body = mag.to_string();
    else if (mag.is_one())
      body = var;
    else
      body = mag.to_string() + "*" + var;
  } else {
    sign = first ? "" : "+";
    body = "(" + c.to_string() + ")";
    if (!var.empty()) body += "*" + var;
  }
  return sign + body;
}

}  // namespace

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    out += term_text(c_[k], k, out.empty());
  }
  return out;
}

DivResult euclid_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  Poly r = a;
  Degree db = b.degree();
  Scalar inv = b.leading().inverse();
  std::vector<Scalar> q(a.degree() >= db ? a.degree() - db + 1 : 0);
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Scalar c = r.leading() * inv;
    q[k] = c;
    r -= Poly::monomial(c, k) * b;
  }
  return {Poly(std::move(q)), std::move(r)};
}

Poly shift(const Poly& p, long m) {
  if (m == 0 || p.is_constant()) return p;
  Poly lin(std::vector<Scalar>{Scalar(m), Scalar(1)});
  Poly r;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * lin + Poly(*it);
  return r;
}

Poly binomial_poly(int k) {
  Poly r(1);
  for (int j = 0; j < k; ++j) {
    r *= Poly(std::vector<Scalar>{Scalar(-j), Scalar(1)});
    r *= Scalar::rational(1, j + 1);
  }
  return r;
}

std::vector<Scalar> to_binomial_basis(const Poly& p) {
  if (p.is_zero()) return {};
  // coordinate k is the k-th forward difference at 0
  int n = p.degree();
  std::vector<Scalar> vals(n + 1);
  for (int j = 0; j <= n; ++j) vals[j] = p(Scalar(j));
  std::vector<Scalar> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    out[k] = vals[0];
    for (int j = 0; j + 1 < static_cast<int>(vals.size()); ++j) vals[j] = vals[j + 1] - vals[j];
    vals.pop_back();
  }
  return out;
}

Poly from_binomial_basis(const std::vector<Scalar>& coords) {
  Poly r;
  for (size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) r += coords[k] * binomial_poly(static_cast<int>(k));
  return r;
}

Poly solve_T(const Scalar& a, const Scalar& b, const Poly& target) {
  if (a.is_zero() || b.is_zero()) throw PreconditionError("solve_T needs a, b nonzero");
  auto t = to_binomial_basis(target);
  if (t.empty()) return Poly();
  // T(e_k) = (a-b) e_k + a e_{k-1}
  int n = static_cast<int>(t.size()) - 1;
  std::vector<Scalar> w;
  if (a == b) {
    w.assign(n + 2, Scalar(0));
    Scalar ainv = a.inverse();
    for (int k = 0; k <= n; ++k) w[k + 1] = t[k] * ainv;
  } else {
    w.assign(n + 1, Scalar(0));
    Scalar dinv = (a - b).inverse();
    Scalar next(0);
    for (int k = n; k >= 0; --k) {
      w[k] = (t[k] - a * next) * dinv;
      next = w[k];
    }
  }
  return from_binomial_basis(w);
}

Poly apply_T1c(const Scalar& c, const Poly& u) { return shift(u, 1) - c * u; }

TImage classify_T_image(const Scalar& c, const Poly& u) {
  if (c.is_zero()) throw PreconditionError("classify_T_image needs c != 0");
  if (u.is_constant()) throw PreconditionError("classify_T_image needs nonconstant u");
  TImage out{apply_T1c(c, u), false, Scalar(0)};
  if (out.value.degree() == 0) {
    out.constant = true;
    out.beta = out.value.leading();
  }
  return out;
}

}  // namespace sl2
