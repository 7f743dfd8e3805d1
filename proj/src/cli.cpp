#include "sl2/cli.hpp"

#include <CLI11.hpp>
#include <future>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "sl2/errors.hpp"
#include "sl2/families.hpp"
#include "sl2/orbits.hpp"
#include "sl2/text.hpp"

namespace sl2 {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
  std::string field = "rational";
  int degree_bound = 6;
  bool json = false;
  bool batch = false;
};

// Everything a command produces; rendered as text or as one JSON document.
struct Verdict {
  std::string command;
  json input = json::object();
  json result = json::object();
  json certificate = nullptr;
  std::vector<std::string> lines;

  void say(const std::string& s) { lines.push_back(s); }
};

class Ctx {
 public:
  explicit Ctx(Field f) : field_(f) {}
  Field field() const { return field_; }

  // Printed values must stay inside the selected field.
  std::string str(const Scalar& s) const {
    if (!s.in_field(field_)) leave();
    return s.to_string();
  }
  std::string str(const Poly& p) const {
    if (!p.in_field(field_)) leave();
    return p.to_string();
  }
  std::string str(const PolyMat2& m) const {
    if (!m.in_field(field_)) leave();
    return m.to_string();
  }
  std::string str(const EWord& w) const {
    if (!expand_check(w)) leave();
    return to_string(w);
  }

 private:
  bool expand_check(const EWord& w) const {
    if (!w.front.d1.in_field(field_) || !w.front.d2.in_field(field_)) return false;
    for (const auto& p : w.factors)
      if (!p.in_field(field_)) return false;
    return true;
  }
  [[noreturn]] static void leave() {
    throw FieldLimitError("the result has non-real coefficients; rerun with --field gaussian");
  }
  Field field_;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

json poly_list(const Ctx& c, const std::vector<Poly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(c.str(p));
  return a;
}

PolyMat2 unit_arg(const std::string& text, Field f, const char* what) {
  PolyMat2 K = parse_matrix_like(text, f);
  require_unit(K, what);
  return K;
}

ModuleSpec module_arg(const std::string& alpha, const std::string& triple, const std::string& K, Field f) {
  ModuleSpec s{parse_scalar(alpha, f), parse_triple(triple), parse_matrix_like(K, f)};
  require_unit(s.K, "module matrix K");
  return s;
}

void smember_report(const Ctx& c, const PolyMat2& K, const SMembership& m, Verdict& v) {
  if (!verify(K, m)) throw CertificateError("s-membership certificate failed");
  if (const auto* in = std::get_if<InS>(&m)) {
    PolyMat2 lhs = twisted_conjugate(K, in->witness);
    v.result["in_S"] = true;
    v.result["canonical"] = c.str(in->canonical.word());
    v.result["length"] = in->canonical.length();
    v.certificate = {{"conjugator", c.str(in->witness)},
                     {"lhs", c.str(lhs)},
                     {"rhs", c.str(in->canonical.matrix())},
                     {"verified", true}};
    v.say("in S: yes");
    v.say("canonical: " + c.str(in->canonical.word()));
    v.say("length: " + std::to_string(in->canonical.length()));
    v.say("conjugator: " + c.str(in->witness));
    v.say("check: P^-1 K P(h+1) = " + c.str(lhs));
  } else {
    const auto& out = std::get<NotInS>(m);
    PolyMat2 lhs = twisted_conjugate(K, out.witness);
    std::string d = "diag(" + c.str(out.diag.d1) + "," + c.str(out.diag.d2) + ")";
    v.result["in_S"] = false;
    v.result["diagonal"] = d;
    v.certificate = {{"conjugator", c.str(out.witness)},
                     {"lhs", c.str(lhs)},
                     {"rhs", c.str(out.diag.matrix())},
                     {"verified", true}};
    v.say("in S: no");
    v.say("diagonal: " + d);
    v.say("conjugator: " + c.str(out.witness));
    v.say("check: P^-1 K P(h+1) = " + c.str(lhs));
  }
}

void report_relations(const RelationReport& r, int bound, const std::string& what, Verdict& v) {
  v.result["ok"] = r.ok;
  v.result["checked"] = r.checked;
  v.result["degree_bound"] = bound;
  if (!r.ok) v.result["failure"] = r.failure;
  if (r.ok)
    v.say(what + ": ok (" + std::to_string(r.checked) + " basis vectors, degree bound " + std::to_string(bound) +
          ")");
  else
    v.say(what + ": FAILED: " + r.failure);
}

struct Args {
  std::string text, kind = "auto";
  std::string K, K1, K2, A, X, Y;
  std::string alpha, alpha2, triple, triple2;
  std::string family, a = "1", b = "1", beta = "1", eta = "1", gamma = "1";
  std::vector<std::string> u;
  int eps = 0, delta = 0, id = 0;
  std::string m = "0";
  bool check = false;

  long m_value() const {
    try {
      std::size_t used = 0;
      long v = std::stol(m, &used);
      if (m.find_first_not_of(" ", used) == std::string::npos) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("--m expects an integer", 1, 1);
  }
};

Verdict cmd_parse(const Ctx& c, const Args& a) {
  Verdict v;
  ExprKind k = a.kind == "poly" ? ExprKind::poly
               : a.kind == "matrix" ? ExprKind::matrix
               : a.kind == "eword" ? ExprKind::eword
                                   : detect_kind(a.text);
  std::string kind, value;
  switch (k) {
    case ExprKind::poly: kind = "poly", value = c.str(parse_poly(a.text, c.field())); break;
    case ExprKind::matrix: kind = "matrix", value = c.str(parse_mat(a.text, c.field())); break;
    case ExprKind::eword: kind = "eword", value = c.str(parse_eword(a.text, c.field())); break;
  }
  v.input = {{"text", trim(a.text)}};
  v.result = {{"kind", kind}, {"value", value}};
  v.say(kind + ": " + value);
  return v;
}

Verdict cmd_expand(const Ctx& c, const Args& a) {
  Verdict v;
  EWord w = parse_eword(a.text, c.field());
  v.input = {{"word", c.str(w)}};
  v.result = {{"matrix", c.str(expand(w))}};
  v.say(c.str(expand(w)));
  return v;
}

Verdict cmd_lq(const Ctx& c, const Args& a) {
  Verdict v;
  PolyMat2 K = unit_arg(a.text, c.field(), "lq");
  LQForm f = lq_form(K);
  if (!(f.matrix() == K) || !is_valid(f)) throw CertificateError("LQ form does not reassemble K");
  v.input = {{"K", c.str(K)}};
  v.result = {{"front", c.str(f.front())},
              {"quotients", poly_list(c, f.quotients)},
              {"form", to_string(f)}};
  v.certificate = {{"reassembled", c.str(f.matrix())}, {"input", c.str(K)}, {"verified", true}};
  v.say("LQ form: " + to_string(f));
  std::vector<std::string> qs;
  for (const auto& q : f.quotients) qs.push_back(c.str(q));
  v.say("quotients: " + (qs.empty() ? std::string("(none)") : join(qs, ", ")));
  return v;
}

Verdict cmd_standard(const Ctx& c, const Args& a) {
  Verdict v;
  PolyMat2 K = unit_arg(a.text, c.field(), "standard");
  StandardForm s = standard_form(K);
  if (!(s.matrix() == K) || !is_standard(s.word())) throw CertificateError("standard form does not expand to K");
  v.input = {{"K", c.str(K)}};
  v.result = {{"form", c.str(s.word())},
              {"front", {c.str(s.front.d1), c.str(s.front.d2)}},
              {"factors", poly_list(c, s.factors)},
              {"length", s.length()}};
  v.certificate = {{"expanded", c.str(s.matrix())}, {"input", c.str(K)}, {"verified", true}};
  v.say(c.str(s.word()));
  v.say("length: " + std::to_string(s.length()));
  return v;
}

Verdict cmd_length(const Ctx& c, const Args& a) {
  Verdict v;
  PolyMat2 K = unit_arg(a.text, c.field(), "length");
  v.input = {{"K", c.str(K)}};
  v.result = {{"length", length(K)}};
  v.say(std::to_string(length(K)));
  return v;
}

Verdict cmd_smember(const Ctx& c, const Args& a) {
  Verdict v;
  PolyMat2 K = unit_arg(a.text, c.field(), "smember");
  v.input = {{"K", c.str(K)}};
  smember_report(c, K, s_membership(K), v);
  return v;
}

Verdict cmd_family(const Ctx& c, const Args& a) {
  Verdict v;
  FamilySpec s;
  s.family = parse_family(a.family);
  s.a = parse_scalar(a.a, c.field());
  s.b = parse_scalar(a.b, c.field());
  s.eps = a.eps;
  s.delta = a.delta;
  s.beta = parse_scalar(a.beta, c.field());
  s.eta = parse_scalar(a.eta, c.field());
  for (const auto& t : a.u) s.u.push_back(parse_poly(t, c.field()));
  s.sporadic_id = a.id;
  v.input = {{"family", family_name(s.family)}, {"a", c.str(s.a)}, {"b", c.str(s.b)}};
  switch (s.family) {
    case Family::D:
    case Family::G:
    case Family::K:
    case Family::Z: v.input["eps"] = s.eps, v.input["delta"] = s.delta; break;
    case Family::sporadic: v.input["id"] = s.sporadic_id, v.input["eps"] = s.eps, v.input["delta"] = s.delta; break;
    case Family::describsig: break;
  }
  if (s.family != Family::describsig) v.input["beta"] = c.str(s.beta), v.input["eta"] = c.str(s.eta);
  v.input["u"] = poly_list(c, s.u);
  PolyMat2 M = family_build(s);
  if (s.family != Family::describsig) {
    EWord w = family_word(s);
    v.result["word"] = c.str(w);
    v.say("word: " + c.str(w));
  }
  v.result["matrix"] = c.str(M);
  v.say("matrix: " + c.str(M));
  if (a.check) {
    require_unit(M, "family matrix");
    smember_report(c, M, s_membership(M), v);
  }
  return v;
}

Verdict cmd_simple(const Ctx& c, const Args& a) {
  Verdict v;
  ModuleSpec spec = module_arg(a.alpha, a.triple, a.K, c.field());
  v.input = {{"alpha", c.str(spec.alpha)}, {"triple", spec.triple.to_string()}, {"K", c.str(spec.K)}};
  SimplicityVerdict s = is_simple(spec);
  v.result = {{"simple", s.simple}, {"reason", to_string(s.reason)}};
  v.say("simple: " + yes_no(s.simple));
  v.say("reason: " + to_string(s.reason));
  if (!(s.triple_used == spec.triple)) {
    v.result["normalized"] = {{"alpha", c.str(s.alpha_used)}, {"triple", s.triple_used.to_string()}};
    v.say("normalized: alpha " + c.str(s.alpha_used) + ", triple " + s.triple_used.to_string());
  }
  ModuleSpec used{s.alpha_used, s.triple_used, spec.K};
  switch (s.reason) {
    case SimplicityReason::simple: {
      PolyMat2 lhs = twisted_conjugate(used.K, s.in_s->witness);
      v.result["canonical"] = c.str(s.in_s->canonical.word());
      v.certificate = {{"conjugator", c.str(s.in_s->witness)},
                       {"lhs", c.str(lhs)},
                       {"rhs", c.str(s.in_s->canonical.matrix())},
                       {"verified", lhs == s.in_s->canonical.matrix()}};
      v.say("canonical: " + c.str(s.in_s->canonical.word()));
      v.say("conjugator: " + c.str(s.in_s->witness));
      break;
    }
    case SimplicityReason::k_not_in_s: {
      const Rank1Decomposition& r = *s.rank1;
      PolyMat2 tri{r.a, r.u, 0, r.b};
      PolyMat2 lhs = twisted_conjugate(used.K, r.witness);
      if (!(lhs == tri)) throw CertificateError("rank-1 certificate failed");
      v.result["triangular"] = c.str(tri);
      v.certificate = {{"conjugator", c.str(r.witness)}, {"lhs", c.str(lhs)}, {"rhs", c.str(tri)}, {"verified", true}};
      v.say("rank-1 submodule: K ~ " + c.str(tri));
      v.say("conjugator: " + c.str(r.witness));
      break;
    }
    case SimplicityReason::alpha_excluded: {
      const Poly& u = *s.submodule_generator;
      Scalar al = s.alpha_used;
      std::string eq = "(" + c.str(Poly::h() + al - Scalar(1)) + ")*q(h-1) = (" + c.str(Poly::h() - al) + ")*q(h)";
      bool ok = satisfies_shift_equation(al, u);
      if (!ok) throw CertificateError("u_alpha fails its shift equation");
      v.result["u_alpha"] = u_alpha_factored(al);
      v.result["u_alpha_expanded"] = c.str(u);
      v.certificate = {{"generator", c.str(u)}, {"shift_equation", eq}, {"verified", true}};
      v.say("u_alpha: " + u_alpha_factored(al));
      v.say("u_alpha expanded: " + c.str(u));
      v.say("shift equation: " + eq + ": verified");
      break;
    }
  }
  return v;
}

Verdict cmd_iso(const Ctx& c, const Args& a) {
  Verdict v;
  ModuleSpec A = module_arg(a.alpha, a.triple, a.K1, c.field());
  ModuleSpec B = module_arg(a.alpha2.empty() ? a.alpha : a.alpha2, a.triple2.empty() ? a.triple : a.triple2, a.K2,
                            c.field());
  v.input = {{"A", {{"alpha", c.str(A.alpha)}, {"triple", A.triple.to_string()}, {"K", c.str(A.K)}}},
             {"B", {{"alpha", c.str(B.alpha)}, {"triple", B.triple.to_string()}, {"K", c.str(B.K)}}}};
  auto w = isomorphism_test(A, B);
  v.result["isomorphic"] = w.has_value();
  v.say("isomorphic: " + yes_no(w.has_value()));
  if (!w) {
    ModuleSpec nA = normalize_triple(A), nB = normalize_triple(B);
    std::string why = !(nA.alpha == nB.alpha)     ? "alpha differs"
                      : !(nA.triple == nB.triple) ? "triple differs"
                                                  : "canonical tuples lie in different orbits";
    v.result["reason"] = why;
    v.say("reason: " + why);
    return v;
  }
  ModuleSpec nA = normalize_triple(A), nB = normalize_triple(B);
  PolyMat2 Pa = p_matrix(nA.triple, nA.alpha);
  PolyMat2 lhs = w->P * Pa * nB.K, rhs = Pa * nA.K * shift(w->P, 1);
  if (!(lhs == rhs)) throw CertificateError("isomorphism certificate failed");
  v.result["witness"] = w->g.to_string();
  v.result["X"] = w->X.to_string();
  v.result["Y"] = w->Y.to_string();
  v.certificate = {{"conjugator", c.str(w->P)}, {"lhs", c.str(lhs)}, {"rhs", c.str(rhs)}, {"verified", true}};
  v.say("witness: " + w->g.to_string());
  v.say("X: " + w->X.to_string());
  v.say("Y: " + w->Y.to_string());
  v.say("conjugator: " + c.str(w->P));
  v.say("check: P Pa K2 = Pa K1 P(h+1) = " + c.str(lhs));
  return v;
}

Verdict cmd_orbit(const Ctx& c, const Args& a) {
  Verdict v;
  ParamTuple X = tuple_from_word(parse_eword(a.X, c.field()));
  ParamTuple Y = tuple_from_word(parse_eword(a.Y, c.field()));
  v.input = {{"X", X.to_string()}, {"Y", Y.to_string()}};
  auto g = orbit_membership(X, Y);
  v.result["same_orbit"] = g.has_value();
  v.say("same orbit: " + yes_no(g.has_value()));
  if (!g) return v;
  PolyMat2 P = orbit_conjugator(X, *g);
  PolyMat2 lhs = twisted_conjugate(X.matrix(), P);
  if (!(lhs == Y.matrix())) throw CertificateError("orbit conjugator failed");
  v.result["witness"] = g->to_string();
  v.certificate = {{"conjugator", c.str(P)}, {"lhs", c.str(lhs)}, {"rhs", c.str(Y.matrix())}, {"verified", true}};
  v.say("witness: " + g->to_string());
  v.say("conjugator: " + c.str(P));
  v.say("check: P^-1 E_X P(h+1) = " + c.str(lhs));
  return v;
}

Verdict cmd_relations(const Ctx& c, const Args& a, int bound) {
  Verdict v;
  ModuleSpec s = module_arg(a.alpha, a.triple, a.K, c.field());
  v.input = {{"alpha", c.str(s.alpha)}, {"triple", s.triple.to_string()}, {"K", c.str(s.K)}};
  report_relations(verify_relations(s, bound), bound, "relations", v);
  return v;
}

Verdict cmd_casimir(const Ctx& c, const Args& a, int bound) {
  Verdict v;
  ModuleSpec s = module_arg(a.alpha, a.triple, a.K, c.field());
  v.input = {{"alpha", c.str(s.alpha)}, {"triple", s.triple.to_string()}, {"K", c.str(s.K)}};
  v.result["scalar"] = c.str(casimir_scalar(s.alpha));
  v.say("casimir scalar: (2*alpha-1)^2 = " + c.str(casimir_scalar(s.alpha)));
  report_relations(casimir_check(s, bound), bound, "casimir", v);
  return v;
}

Verdict cmd_cocycle(const Ctx& c, const Args& a) {
  Verdict v;
  PolyMat2 K = unit_arg(a.K, c.field(), "cocycle");
  PolyMat2 r = cocycle(K, a.m_value());
  v.input = {{"K", c.str(K)}, {"m", a.m_value()}};
  v.result = {{"value", c.str(r)}};
  v.say("c_K(" + std::to_string(a.m_value()) + ") = " + c.str(r));
  return v;
}

Verdict cmd_quotient(const Ctx& c, const Args& a, int bound) {
  Verdict v;
  ModuleSpec s = module_arg(a.alpha, a.triple, a.K, c.field());
  v.input = {{"alpha", c.str(s.alpha)}, {"triple", s.triple.to_string()}, {"K", c.str(s.K)}};
  QuotientReport q = quotient_hw_check(s, bound);
  v.result = {{"generator", c.str(q.generator)},
              {"submodule_stable", q.submodule_stable},
              {"formulas", q.formula_holds},
              {"highest_weight", q.highest_weight},
              {"weight", c.str(q.weight)},
              {"dimension", q.dimension},
              {"ok", q.ok()}};
  v.say("generator: u_alpha = " + c.str(q.generator));
  v.say("submodule stable: " + yes_no(q.submodule_stable));
  v.say("formulas: " + yes_no(q.formula_holds));
  v.say("highest weight: " + yes_no(q.highest_weight) + ", weight " + c.str(q.weight));
  v.say("quotient dimension: " + std::to_string(q.dimension));
  return v;
}

Verdict cmd_aut(const Ctx& c, const Args& a) {
  Verdict v;
  PolyMat2 A = parse_matrix_like(a.A, c.field());
  Scalar g = parse_scalar(a.gamma, c.field());
  AutMaps r = aut_maps(A, g, a.m_value());
  v.input = {{"A", c.str(A)}, {"gamma", c.str(g)}, {"m", a.m_value()}};
  v.result = {{"T_gamma", c.str(r.T_gamma)}, {"theta", c.str(r.theta)}, {"sigma", c.str(r.sigma)}, {"psi", c.str(r.psi)}};
  v.say("T_gamma(A) = " + c.str(r.T_gamma));
  v.say("theta(A) = " + c.str(r.theta));
  v.say("sigma(A) = " + c.str(r.sigma));
  v.say("Psi(gamma,m)(A) = " + c.str(r.psi));
  return v;
}

void emit(const Verdict& v, bool as_json, std::ostream& out) {
  if (as_json) {
    json doc = {{"command", v.command}, {"input", v.input}, {"result", v.result}, {"certificate", v.certificate}};
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& l : v.lines) out << l << "\n";
  }
}

int run_batch(const Globals& g, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<std::string> prefix{"--field", g.field, "--degree-bound", std::to_string(g.degree_bound)};
  if (g.json) prefix.push_back("--json");
  struct Result {
    int code;
    std::string out, err;
  };
  std::vector<std::future<Result>> jobs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    jobs.push_back(std::async(std::launch::async, [prefix, line] {
      std::vector<std::string> args = prefix;
      std::vector<std::string> words = CLI::detail::split_up(line);
      CLI::detail::remove_quotes(words);
      args.insert(args.end(), words.begin(), words.end());
      std::istringstream none;
      std::ostringstream o, e;
      int code = run_cli(args, none, o, e);
      return Result{code, o.str(), e.str()};
    }));
  }
  int worst = kExitOk;
  for (auto& j : jobs) {
    Result r = j.get();
    out << r.out;
    err << r.err;
    worst = std::max(worst, r.code);
  }
  return worst;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for rank-2 U(h)-free sl(2)-modules", "sl2free"};
  app.set_help_flag("--help", "print this help message and exit");
  Globals g;
  Args a;
  app.add_option("--field", g.field, "rational | gaussian")->check(CLI::IsMember({"rational", "gaussian"}));
  app.add_option("--degree-bound", g.degree_bound, "basis degree bound for relation suites")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", g.json, "emit one JSON document per command");
  app.add_flag("--batch", g.batch, "read one command per line from stdin");

  auto matrix_cmd = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("K", a.text, "matrix [[p,p],[p,p]] or E-word")->required();
    return s;
  };
  auto module_opts = [&](CLI::App* s) {
    s->add_option("--alpha", a.alpha)->required();
    s->add_option("--triple", a.triple, "a-,a0,a+")->required();
    s->add_option("--K", a.K)->required();
  };

  auto* parse = app.add_subcommand("parse", "parse and print in canonical form");
  parse->add_option("text", a.text)->required();
  parse->add_option("--kind", a.kind)->check(CLI::IsMember({"auto", "poly", "matrix", "eword"}));
  app.add_subcommand("expand", "multiply out an E-word")->add_option("word", a.text)->required();
  matrix_cmd("lq", "LQ form");
  matrix_cmd("standard", "standard form and length");
  matrix_cmd("length", "length");
  matrix_cmd("smember", "decide membership in S with a certificate");

  auto* fam = app.add_subcommand("family", "build a family member");
  fam->add_option("--family", a.family, "D | G | K | Z | similar | sporadic")->required();
  fam->add_option("--a", a.a);
  fam->add_option("--b", a.b);
  fam->add_option("--eps", a.eps)->check(CLI::Range(0, 1));
  fam->add_option("--delta", a.delta)->check(CLI::Range(0, 1));
  fam->add_option("--beta", a.beta);
  fam->add_option("--eta", a.eta);
  fam->add_option("--u", a.u, "u_1, u_2, ... (repeatable)");
  fam->add_option("--id", a.id, "sporadic form index");
  fam->add_flag("--check", a.check, "also run smember");

  module_opts(app.add_subcommand("simple", "decide simplicity"));

  auto* iso = app.add_subcommand("iso", "decide isomorphism");
  iso->add_option("--alpha", a.alpha)->required();
  iso->add_option("--triple", a.triple)->required();
  iso->add_option("--K1", a.K1)->required();
  iso->add_option("--K2", a.K2)->required();
  iso->add_option("--alpha2", a.alpha2, "alpha of the second module (default: --alpha)");
  iso->add_option("--triple2", a.triple2, "triple of the second module (default: --triple)");

  auto* orb = app.add_subcommand("orbit", "decide whether two tuples share a G-orbit");
  orb->add_option("--X", a.X, "diag(b1,b2) E(u1)...E(uk)")->required();
  orb->add_option("--Y", a.Y)->required();

  module_opts(app.add_subcommand("verify-relations", "check the sl(2) relations"));
  module_opts(app.add_subcommand("casimir", "check the Casimir scalar"));

  auto* coc = app.add_subcommand("cocycle", "c_K(m)");
  coc->add_option("--K", a.K)->required();
  coc->add_option("--m", a.m)->required();

  module_opts(app.add_subcommand("quotient-hw", "finite quotient and highest weight"));

  auto* aut = app.add_subcommand("aut", "T_gamma, theta, sigma and Psi(gamma,m)");
  aut->add_option("--A", a.A)->required();
  aut->add_option("--gamma", a.gamma);
  aut->add_option("--m", a.m);

  app.require_subcommand(0, 1);

  try {
    // Expressions such as -h^2 or -3 would otherwise read as short options;
    // there are none, and a leading space keeps CLI11 from splitting them.
    std::vector<std::string> rev;
    for (auto it = args.rbegin(); it != args.rend(); ++it)
      rev.push_back(it->size() > 1 && (*it)[0] == '-' && (*it)[1] != '-' ? " " + *it : *it);
    app.parse(rev);
    if (g.batch) {
      if (!app.get_subcommands().empty()) throw CLI::ValidationError("--batch takes commands on stdin only");
      return run_batch(g, in, out, err);
    }
    if (app.get_subcommands().empty()) throw CLI::RequiredError("a command");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  std::string name = app.get_subcommands().front()->get_name();
  try {
    Ctx c(parse_field(g.field));
    Verdict v;
    if (name == "parse") v = cmd_parse(c, a);
    else if (name == "expand") v = cmd_expand(c, a);
    else if (name == "lq") v = cmd_lq(c, a);
    else if (name == "standard") v = cmd_standard(c, a);
    else if (name == "length") v = cmd_length(c, a);
    else if (name == "smember") v = cmd_smember(c, a);
    else if (name == "family") v = cmd_family(c, a);
    else if (name == "simple") v = cmd_simple(c, a);
    else if (name == "iso") v = cmd_iso(c, a);
    else if (name == "orbit") v = cmd_orbit(c, a);
    else if (name == "verify-relations") v = cmd_relations(c, a, g.degree_bound);
    else if (name == "casimir") v = cmd_casimir(c, a, g.degree_bound);
    else if (name == "cocycle") v = cmd_cocycle(c, a);
    else if (name == "quotient-hw") v = cmd_quotient(c, a, g.degree_bound);
    else v = cmd_aut(c, a);
    v.command = name;
    emit(v, g.json, out);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const CertificateError& e) {
    err << "internal: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace sl2
