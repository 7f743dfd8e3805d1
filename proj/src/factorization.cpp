#include "sl2/factorization.hpp"

#include <optional>

#include "sl2/errors.hpp"

namespace sl2 {

bool is_standard(const EWord& w) {
  const auto& v = w.factors;
  if (w.front.d1.is_zero() || w.front.d2.is_zero()) return false;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (v[i].is_constant()) return false;
  if (v.size() == 2 && v[0].is_zero() && v[1].is_zero()) return false;
  return true;
}

PolyMat2 LQForm::matrix() const {
  PolyMat2 r = front();
  for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) r = r * PolyMat2::E(*it);
  return r;
}

bool is_valid(const LQForm& f) {
  if (f.a.is_zero() || f.b.is_zero()) return false;
  for (std::size_t i = 1; i < f.quotients.size(); ++i)
    if (f.quotients[i].is_constant()) return false;
  return true;
}

LQForm lq_form(const PolyMat2& K) {
  require_unit(K, "lq_form");
  Poly k11 = K(0, 0), k12 = K(0, 1), k21 = K(1, 0), k22 = K(1, 1);
  LQForm out;
  while (!k12.is_zero()) {
    auto [q, r] = euclid_div(k11, k12);
    Poly n12 = q * k12 - k11;  // = -r
    Poly n22 = q * k22 - k21;
    k11 = std::move(k12);
    k12 = std::move(n12);
    k21 = std::move(k22);
    k22 = std::move(n22);
    out.quotients.push_back(std::move(q));
  }
  // unit determinant forces constant diagonal here
  out.a = k11.leading();
  out.b = k22.leading();
  out.u = k21;
  return out;
}

std::string to_string(const LQForm& f) {
  std::string s = f.front().to_string();
  for (auto it = f.quotients.rbegin(); it != f.quotients.rend(); ++it)
    s += " E(" + it->to_string() + ")";
  return s;
}

namespace {

struct Item {
  bool diag;
  Poly u;          // E argument
  Scalar d1, d2;   // diagonal entries
};

Item e_item(Poly u) { return {false, std::move(u), Scalar(0), Scalar(0)}; }
Item d_item(Scalar a, Scalar b) { return {true, Poly(), std::move(a), std::move(b)}; }

class Rewriter {
 public:
  explicit Rewriter(const EWord& w) : front_(w.front) {
    for (const auto& u : w.factors) items_.push_back(e_item(u));
  }

  StandardForm run() {
    while (step()) {
    }
    StandardForm out{front_, {}};
    for (auto& it : items_) out.factors.push_back(std::move(it.u));
    return out;
  }

 private:
  bool is_e(std::size_t i) const { return i < items_.size() && !items_[i].diag; }

  void negate_front() {
    front_.d1 = -front_.d1;
    front_.d2 = -front_.d2;
  }

  // Three adjacent E items starting at i.
  bool e_triple(std::size_t i) const { return is_e(i) && is_e(i + 1) && is_e(i + 2); }

  bool step() {
    // (i) E(u)E(0)E(v) = -E(u+v)
    for (std::size_t i = 0; i + 2 < items_.size(); ++i) {
      if (e_triple(i) && items_[i + 1].u.is_zero()) {
        items_[i].u += items_[i + 2].u;
        items_.erase(items_.begin() + i + 1, items_.begin() + i + 3);
        negate_front();
        return true;
      }
    }
    // the whole word E(0)E(0) = -I
    if (items_.size() == 2 && is_e(0) && is_e(1) && items_[0].u.is_zero() && items_[1].u.is_zero()) {
      items_.clear();
      negate_front();
      return true;
    }
    // (ii) E(b)E(1/b)E(b) = -diag(b,1/b)
    for (std::size_t i = 0; i + 2 < items_.size(); ++i) {
      if (!e_triple(i)) continue;
      const Poly &x = items_[i].u, &y = items_[i + 1].u, &z = items_[i + 2].u;
      if (x.degree() == 0 && y.degree() == 0 && x == z && x.leading() * y.leading() == Scalar(1)) {
        Scalar b = x.leading();
        items_.erase(items_.begin() + i + 1, items_.begin() + i + 3);
        items_[i] = d_item(b, b.inverse());
        negate_front();
        return true;
      }
    }
    // (vi) E(u)E(b)E(v) = E(u-1/b) diag(b,1/b) E(v-1/b)
    for (std::size_t i = 0; i + 2 < items_.size(); ++i) {
      if (e_triple(i) && items_[i + 1].u.degree() == 0) {
        Scalar b = items_[i + 1].u.leading();
        Scalar binv = b.inverse();
        items_[i].u -= Poly(binv);
        items_[i + 2].u -= Poly(binv);
        items_[i + 1] = d_item(b, binv);
        return true;
      }
    }
    // (iii) E(u) diag(b1,b2) = diag(b2,b1) E((b1/b2) u); merge into the front
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (!items_[i].diag) continue;
      Item d = items_[i];
      if (i == 0) {
        front_.d1 *= d.d1;
        front_.d2 *= d.d2;
        items_.erase(items_.begin());
      } else if (items_[i - 1].diag) {
        items_[i - 1].d1 *= d.d1;
        items_[i - 1].d2 *= d.d2;
        items_.erase(items_.begin() + i);
      } else {
        Poly u = (d.d1 / d.d2) * items_[i - 1].u;
        items_[i - 1] = d_item(d.d2, d.d1);
        items_[i] = e_item(std::move(u));
      }
      return true;
    }
    return false;
  }

  DiagPair front_;
  std::vector<Item> items_;
};

}  // namespace

StandardForm reduce_word(const EWord& w) {
  if (w.front.d1.is_zero() || w.front.d2.is_zero())
    throw PreconditionError("diagonal entries must be nonzero");
  return Rewriter(w).run();
}

EWord lq_word(const LQForm& f) {
  EWord w{{-f.a, -f.b}, {Poly(0), f.u * f.b.inverse()}};
  for (auto it = f.quotients.rbegin(); it != f.quotients.rend(); ++it) w.factors.push_back(*it);
  return w;
}

StandardForm standard_form(const PolyMat2& K) {
  LQForm f = lq_form(K);
  const auto& q = f.quotients;
  std::size_t T = q.size();
  StandardForm out;
  if (f.u.is_zero()) {
    out.front = {f.a, f.b};
    for (auto it = q.rbegin(); it != q.rend(); ++it) out.factors.push_back(*it);
    return out;
  }
  Poly ub = f.u * f.b.inverse();
  if (T == 0 || !ub.is_constant()) {
    out.front = {-f.a, -f.b};
    out.factors = {Poly(0), ub};
    for (auto it = q.rbegin(); it != q.rend(); ++it) out.factors.push_back(*it);
    return out;
  }
  // E(0)E(b)E(q_T) = diag(1/b, b) E(-b) E(q_T - 1/b)
  Scalar beta = ub.leading();
  Scalar binv = beta.inverse();
  out.front = {-f.a * binv, -f.b * beta};
  out.factors = {Poly(-beta), q[T - 1] - Poly(binv)};
  for (std::size_t i = T - 1; i-- > 0;) out.factors.push_back(q[i]);
  return out;
}

std::size_t length(const PolyMat2& K) { return standard_form(K).length(); }

}  // namespace sl2
