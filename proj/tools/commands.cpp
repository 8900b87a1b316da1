#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "seifertq/errors.hpp"
#include "seifertq/flat_moduli.hpp"
#include "seifertq/gppv.hpp"
#include "seifertq/hikami.hpp"
#include "seifertq/resurgence.hpp"
#include "seifertq/seifert.hpp"
#include "seifertq/theta.hpp"
#include "seifertq/wrt.hpp"

namespace seifertq::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::vector<long> p;
  std::vector<long> q;
  std::string casson;
  long k = 0;
  std::string root;
  std::string alpha;
  std::string tau;
  unsigned precision = 0;
  long terms = 50;
  long orders = 10;
  int j = 0;
  int s = 0;
  std::string format = "json";
  std::string tolerance;
  bool exact = false;
  bool dump_dft = false;
};

using Table = std::vector<std::vector<std::string>>;

struct Report {
  json result = json::object();
  std::optional<bool> pass;
  std::optional<Real> tolerance;
  Table csv;  // first row is the header; empty when the command has no table form
};

// ---- JSON helpers

int digits() { return static_cast<int>(digits10_for_bits(working_bits())); }

json jr(const Rational& q) { return to_string(q); }
json jerr(const Real& x) { return to_string(x, 6); }
json jc(const BigComplex& z) { return json{{"re", to_string(z.re, digits())}, {"im", to_string(z.im, digits())}}; }
json jcyc(const Cyclotomic& c) { return json::parse(c.to_json_string()); }

json jlabel(const std::vector<long>& l) { return json(l); }

std::string label_string(const std::vector<long>& l) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
  os << ")";
  return os.str();
}

json jindices(const std::vector<int>& J) {
  json a = json::array();
  for (int j : J) a.push_back(j + 1);  // fiber numbers are 1-based in reports
  return a;
}

json jmanifold(const SeifertData& d) {
  return json{{"label", d.label()}, {"p", d.p}, {"q", d.q}, {"P", d.P}};
}

// ---- argument helpers

Rational need_rational(const std::string& s, const char* flag) {
  if (s.empty()) throw InvalidArgument(std::string(flag) + " is required");
  Rational q = parse_rational(s);
  q.canonicalize();
  return q;
}

BigComplex need_complex(const std::string& s) {
  if (s.empty()) throw InvalidArgument("--tau is required, e.g. --tau 0.07+0.21i");
  return parse_complex(s);
}

long need_k(const Options& o, long minimum) {
  if (o.k < minimum) throw InvalidArgument("-k must be at least " + std::to_string(minimum));
  return o.k;
}

SeifertData manifold(const Options& o) {
  SeifertOptions so;
  if (!o.casson.empty()) {
    try {
      so.casson_override = std::stol(o.casson);
    } catch (const std::exception&) {
      throw InvalidArgument("--casson expects an integer, got '" + o.casson + "'");
    }
  }
  std::optional<std::vector<long>> q;
  if (!o.q.empty()) q = o.q;
  return new_seifert(o.p, q, so);
}

PartialThetaSpec chi_spec(const SeifertData& d, int j) {
  auto cd = chi_decomposition(d);
  if (j < 0 || j >= static_cast<int>(cd.chi.size()))
    throw InvalidArgument("--j must lie in [0, " + std::to_string(cd.chi.size() - 1) + "]");
  return PartialThetaSpec{j, cd.chi[j], true};
}

// ---- commands

Report cmd_invariants(const Options& o) {
  SeifertData d = manifold(o);
  Report r;
  r.result = json{{"P", d.P},
                  {"p", d.p},
                  {"q", d.q},
                  {"p_hat", d.p_hat},
                  {"m0", d.m0},
                  {"n_star", d.n_star},
                  {"casson", d.casson},
                  {"phi", jr(d.phi)},
                  {"input_index", d.input_index}};
  return r;
}

Report cmd_cs(const Options& o) {
  SeifertData d = manifold(o);
  Report r;
  json labels = json::array();
  r.csv.push_back({"l", "t", "in_R", "cs", "cs_signed", "dim"});
  for (const FlatLabel& fl : enumerate_L(d)) {
    labels.push_back(json{{"l", jlabel(fl.l)},
                          {"t", fl.t},
                          {"in_R", fl.in_R},
                          {"cs", jr(fl.cs)},
                          {"cs_signed", jr(signed_cs(fl.cs))},
                          {"dim", fl.dim}});
    r.csv.push_back({label_string(fl.l), std::to_string(fl.t), fl.in_R ? "true" : "false", to_string(fl.cs),
                     to_string(signed_cs(fl.cs)), std::to_string(fl.dim)});
  }
  json cs = json::array();
  for (const Rational& v : cs_set(d)) cs.push_back(jr(v));
  r.result = json{{"manifold", jmanifold(d)}, {"labels", labels}, {"cs", cs}};
  return r;
}

Report cmd_gppv(const Options& o) {
  SeifertData d = manifold(o);
  if (o.terms < 1) throw InvalidArgument("--terms must be positive");
  long m_max = 10 * d.P;
  LaurentCoefficients lc;
  while (true) {
    lc = laurent_chi_tilde(d, m_max);
    if (static_cast<long>(lc.coeffs.size()) >= o.terms || m_max > 4 * d.P * o.terms + 10 * d.P) break;
    m_max *= 2;
  }
  Report r;
  json rows = json::array();
  bool integral = true;
  r.csv.push_back({"m", "chi", "exponent"});
  const Integer four_p = 4 * d.P;
  for (auto& [m, c] : lc.coeffs) {
    if (static_cast<long>(rows.size()) >= o.terms) break;
    Integer num = Integer(m) * m - Integer(d.m0) * d.m0;
    Rational e(num, four_p);
    e.canonicalize();
    if (e.get_den() != 1) integral = false;
    rows.push_back(json{{"m", m}, {"chi", c.get_str()}, {"exponent", jr(e)}});
    r.csv.push_back({std::to_string(m), c.get_str(), to_string(e)});
  }
  r.result = json{{"manifold", jmanifold(d)}, {"m0", d.m0}, {"coefficients", rows}, {"exponents_integral", integral}};
  if (!o.tau.empty()) {
    SeriesEvaluation ev = evaluate_Psi(d, parse_complex(o.tau));
    r.result["psi"] = json{{"tau", o.tau},
                           {"value", jc(ev.value)},
                           {"hikami_route", jc(ev.other_route)},
                           {"route_difference", jerr(ev.route_difference)},
                           {"tail_bound", jerr(ev.tail_bound)},
                           {"terms", ev.terms}};
  }
  return r;
}

Report cmd_hikami(const Options& o) {
  SeifertData d = manifold(o);
  DftDecomposition dec = dft_decomposition(d, o.s);
  Report r;
  json pieces = json::array();
  for (const DftPiece& pc : dec.pieces) {
    json coeffs = json::array();
    for (auto& [J, c] : pc.coefficients) coeffs.push_back(json{{"J", jindices(J)}, {"coefficient", jcyc(c)}});
    pieces.push_back(json{{"l", jlabel(pc.l)},
                          {"support", pc.piece.support()},
                          {"mean_value_zero", pc.piece.mean_value().is_zero()},
                          {"coefficients", coeffs}});
  }
  int closure = check_dft_closure(d, o.s);
  r.result = json{{"manifold", jmanifold(d)},
                  {"s", o.s},
                  {"period", dec.transform.period()},
                  {"grade", dec.transform.grade()},
                  {"parity", to_string(dec.transform.parity())},
                  {"pieces", pieces},
                  {"outside", dec.outside},
                  {"pieces_sum_to_transform", true},
                  {"closure_generators_checked", closure}};
  if (o.dump_dft) {
    json vals = json::array();
    for (long n = 0; n < dec.transform.period(); ++n)
      if (!dec.transform.at(n).is_zero()) vals.push_back(json{{"n", n}, {"value", jcyc(dec.transform.at(n))}});
    r.result["transform"] = vals;
  }
  return r;
}

Report cmd_wrt(const Options& o) {
  SeifertData d = manifold(o);
  Report r;
  WrtValue w;
  json root;
  if (!o.root.empty()) {
    Rational lk = need_rational(o.root, "--root");
    long l = lk.get_num().get_si(), k = lk.get_den().get_si();
    if (k < 2) throw InvalidArgument("--root needs a denominator of at least 2");
    w = wrt_at_root(d, l, k);
    root = to_string(lk);
  } else {
    w = wrt_level_k(d, need_k(o, 2), o.exact);
  }
  r.result = json{{"manifold", jmanifold(d)}, {"k", w.k}, {"value", jc(w.value)}};
  if (!root.is_null()) r.result["root"] = root;
  if (w.exact) r.result["exact"] = jcyc(*w.exact);
  return r;
}

Report cmd_radial(const Options& o) {
  SeifertData d = manifold(o);
  Rational alpha = need_rational(o.alpha, "--alpha");
  RadialLimit rl = radial_limit(d, alpha);
  BigComplex from_l = radial_limit_numeric(d, alpha);
  Report r;
  r.result = json{{"manifold", jmanifold(d)},
                  {"alpha", jr(alpha)},
                  {"psi0", jc(rl.psi0.to_complex())},
                  {"z_star", jc(rl.z_star.to_complex())},
                  {"psi0_from_l_values", jc(from_l)},
                  {"route_difference", jerr(abs(from_l - rl.psi0.to_complex()))}};
  if (o.exact) {
    r.result["psi0_exact"] = jcyc(rl.psi0);
    r.result["z_star_exact"] = jcyc(rl.z_star);
  }
  return r;
}

Report cmd_theta(const Options& o) {
  SeifertData d = manifold(o);
  PartialThetaSpec spec = chi_spec(d, o.j);
  Rational alpha = o.alpha.empty() ? Rational(0) : need_rational(o.alpha, "--alpha");
  if (o.orders < 1) throw InvalidArgument("--orders must be positive");
  FormalSeries fs = theta_asymp(spec, alpha, static_cast<std::size_t>(o.orders));
  Report r;
  json coeffs = json::array();
  r.csv.push_back({"p", "re", "im"});
  for (std::size_t p = 0; p < fs.coeffs.size(); ++p) {
    BigComplex c = fs.coefficient(p);
    coeffs.push_back(json{{"p", p}, {"value", jc(c)}, {"exact_over_pi_power", jcyc(fs.coeffs[p])}});
    r.csv.push_back({std::to_string(p), to_string(c.re, digits()), to_string(c.im, digits())});
  }
  r.result = json{{"manifold", jmanifold(d)},
                  {"j", o.j},
                  {"period", spec.M()},
                  {"alpha", jr(alpha)},
                  {"grade", fs.grade},
                  {"grade_base", fs.grade_base},
                  {"coefficients", coeffs}};
  if (!o.tau.empty()) {
    BigComplex tau = parse_complex(o.tau);
    ThetaValue tv = theta_eval(spec, tau);
    LateralValue med = median_sum(spec, alpha, tau - BigComplex(real_from(alpha)));
    r.result["evaluation"] = json{{"tau", o.tau},
                                  {"theta", jc(tv.value)},
                                  {"tail_bound", jerr(tv.tail_bound)},
                                  {"median_sum", jc(med.value)},
                                  {"median_error", jerr(med.error)},
                                  {"difference", jerr(abs(med.value - tv.value))}};
  }
  return r;
}

Real tolerance(const Options& o, const char* fallback) {
  return Real(o.tolerance.empty() ? std::string(fallback) : o.tolerance);
}

Report verify_aec(const Options& o) {
  SeifertData d = manifold(o);
  AecResult a = aec_verify(d, need_k(o, 2));
  Report r;
  r.tolerance = tolerance(o, "1e-12");
  json terms = json::array();
  for (const AecTerm& t : a.terms)
    terms.push_back(json{{"l", jlabel(t.l)},
                         {"cs", jr(t.cs)},
                         {"t", t.t},
                         {"degree", t.degree},
                         {"degree_bound", d.r - 3 - t.t},
                         {"contribution", jc(t.contribution)}});
  json by_cs = json::array();
  for (const AecSTerm& s : a.by_cs)
    by_cs.push_back(
        json{{"cs", jr(s.cs)}, {"degree", s.degree}, {"dim", s.dim}, {"contribution", jc(s.contribution)}});
  r.result = json{{"manifold", jmanifold(d)},
                  {"k", a.k},
                  {"wrt", jc(a.lhs)},
                  {"rhs", jc(a.rhs)},
                  {"borel_term", jc(a.borel_term)},
                  {"residual", jerr(a.residual)},
                  {"quadrature_error", jerr(a.quadrature_error)},
                  {"vanishing_checked", a.vanishing_checked},
                  {"terms", terms},
                  {"by_cs", by_cs}};
  r.pass = a.residual < *r.tolerance;
  return r;
}

Report verify_stokes(const Options& o) {
  SeifertData d = manifold(o);
  PartialThetaSpec spec = chi_spec(d, o.j);
  BigComplex tau = need_complex(o.tau);
  Report r;
  r.tolerance = tolerance(o, "1e-20");
  BigComplex th = theta_eval(spec, tau).value;
  LateralValue med = median_sum(spec, Rational(0), tau);
  Real med_res = abs(med.value - th);
  Real worst = med_res;
  json checks = json::array();
  for (int sign : {-1, 1}) {
    StokesCheck sc = stokes_check(spec, tau, sign);
    if (sc.residual > worst) worst = sc.residual;
    checks.push_back(json{{"sign", sign},
                          {"lateral", jc(sc.lateral)},
                          {"correction", jc(sc.correction)},
                          {"residual", jerr(sc.residual)},
                          {"quadrature_error", jerr(sc.quadrature_error)}});
  }
  r.result = json{{"manifold", jmanifold(d)},
                  {"j", o.j},
                  {"tau", o.tau},
                  {"theta", jc(th)},
                  {"median_sum", jc(med.value)},
                  {"median_residual", jerr(med_res)},
                  {"stokes", checks},
                  {"residual", jerr(worst)}};
  r.pass = worst < *r.tolerance;
  return r;
}

Report verify_lr(const Options& o) {
  SeifertData d = manifold(o);
  LrCheck c = lr_check(d, need_k(o, 2));
  Report r;
  r.tolerance = tolerance(o, "1e-25");
  r.result = json{{"manifold", jmanifold(d)},
                  {"k", o.k},
                  {"wrt_side", jc(c.lhs)},
                  {"integral", jc(c.integral)},
                  {"residues", jc(c.residues)},
                  {"residues_laurent", jc(c.residues_laurent)},
                  {"residue_method_gap", jerr(c.residue_method_gap)},
                  {"quadrature_error", jerr(c.quadrature_error)},
                  {"residual", jerr(c.residual)}};
  r.pass = c.residual < *r.tolerance;
  return r;
}

Report verify_dft(const Options& o) {
  SeifertData d = manifold(o);
  Report r;
  json per_s = json::array();
  for (int s = 0; s <= d.r - 3; ++s) {
    DftDecomposition dec = dft_decomposition(d, s);
    int closure = check_dft_closure(d, s);
    per_s.push_back(json{{"s", s},
                         {"pieces", dec.pieces.size()},
                         {"outside_residues", dec.outside.size()},
                         {"closure_generators_checked", closure}});
  }
  int vanishing = 0;
  for (const LambdaValue& lv : lambda_values(d)) {
    bool in_r = false;
    for (const FlatLabel& fl : enumerate_R(d))
      if (fl.l == sigma1(d, lv.l)) in_r = true;
    if (in_r) continue;
    if (!lv.value.is_zero()) throw OracleDisagreement("Lambda does not vanish for a label outside R");
    ++vanishing;
  }
  r.result = json{{"manifold", jmanifold(d)}, {"decompositions", per_s}, {"vanishing_checked", vanishing}};
  r.pass = true;  // every failure above throws
  return r;
}

Report verify_moments(const Options& o) {
  SeifertData d = manifold(o);
  Report r;
  long checked = 0, failures = 0;
  json failed = json::array();
  std::vector<long> h(d.r, 0);
  while (true) {
    Rational sum = 0;
    int nonintegral = 0;
    for (int j = 0; j < d.r; ++j) {
      sum += Rational(h[j], d.p[j]);
      if (h[j] % d.p[j] != 0) ++nonintegral;
    }
    if (nonintegral >= 3 && sum > 0 && sum < 1) {
      HikamiTuple ht = hikami_tuple(d, h);
      for (int s = 0; s <= d.r - 3; ++s)
        for (unsigned mask = 1; mask < (1u << d.r); ++mask) {
          std::vector<int> J;
          for (int j = 0; j < d.r; ++j)
            if (mask >> j & 1) J.push_back(j);
          if (!admissible_J(d, s, J, ht)) continue;
          ++checked;
          for (const Cyclotomic& m : moment_sums(gen_hikami(d, ht, J), static_cast<unsigned>(d.r - s - 1)))
            if (!m.is_zero()) {
              ++failures;
              failed.push_back(json{{"h", h}, {"s", s}, {"J", jindices(J)}});
              break;
            }
        }
    }
    int k = 0;
    while (k < d.r && h[k] == d.p[k]) h[k++] = 0;
    if (k == d.r) break;
    ++h[k];
  }
  r.result = json{{"manifold", jmanifold(d)}, {"checked", checked}, {"failures", failed}};
  r.pass = failures == 0;
  return r;
}

Report verify_radial_cmd(const Options& o) {
  SeifertData d = manifold(o);
  Rational alpha = need_rational(o.alpha, "--alpha");
  RadialCheck c = verify_radial(d, alpha);
  Report r;
  r.tolerance = tolerance(o, "1e-40");
  r.result = json{{"manifold", jmanifold(d)},
                  {"alpha", jr(alpha)},
                  {"lhs", jc(c.lhs)},
                  {"rhs", jc(c.rhs)},
                  {"exact_equal", c.exact_equal},
                  {"residual", jerr(c.residual)}};
  r.pass = c.exact_equal && c.residual < *r.tolerance;
  return r;
}

// ---- output

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(std::ostream& out, const Options& o, unsigned bits, const std::string& command, const Report& r) {
  if (o.format == "csv") {
    if (r.csv.empty()) throw InvalidArgument("--format csv is not available for '" + command + "'");
    for (auto& row : r.csv) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << "\n";
    }
    return;
  }
  json config{{"precision_bits", bits}, {"format", o.format}};
  if (r.tolerance) config["tolerance"] = to_string(*r.tolerance, 6);
  json doc{{"schema_version", kSchemaVersion}, {"command", command}, {"config", config}};
  if (r.pass) doc["pass"] = *r.pass;
  doc["result"] = r.result;
  out << (o.format == "pretty" ? doc.dump(2) : doc.dump()) << "\n";
}

void error_report(std::ostream& err, const std::string& kind, const std::string& message) {
  json doc{{"schema_version", kSchemaVersion}, {"error", {{"kind", kind}, {"message", message}}}};
  err << doc.dump() << "\n";
}

bool is_verification_kind(const std::string& kind) {
  return kind == "OracleDisagreement" || kind == "DegreeViolation" || kind == "QuadratureFailure" ||
         kind == "PrecisionExhausted";
}

void add_manifold_options(CLI::App* c, Options& o) {
  c->add_option("--p", o.p, "multiplicities, e.g. 2,3,5")->required()->delimiter(',');
  c->add_option("--q", o.q, "Seifert invariants q_j with sum q_j P/p_j = 1")->delimiter(',');
  c->add_option("--casson", o.casson, "Casson invariant override, validated");
  c->add_option("--precision", o.precision, "working precision in bits");
  c->add_option("--format", o.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quantum invariants of Seifert fibered homology spheres"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "seifertq schema " + std::to_string(kSchemaVersion));

  std::string command;
  std::function<Report(const Options&)> action;
  auto bind = [&](CLI::App* c, std::string name, Report (*fn)(const Options&)) {
    c->callback([&, name, fn] {
      command = name;
      action = fn;
    });
  };

  auto* inv = app.add_subcommand("invariants", "P, p_hat, m0, n*, Casson invariant and phi");
  add_manifold_options(inv, o);
  bind(inv, "invariants", cmd_invariants);

  auto* cs = app.add_subcommand("cs", "flat connection labels and Chern-Simons values");
  add_manifold_options(cs, o);
  bind(cs, "cs", cmd_cs);

  auto* gp = app.add_subcommand("gppv", "coefficients of the q-series");
  add_manifold_options(gp, o);
  gp->add_option("--terms", o.terms, "number of nonzero coefficients");
  gp->add_option("--tau", o.tau, "also evaluate Psi at tau, e.g. 0.1+0.2i");
  bind(gp, "gppv", cmd_gppv);

  auto* hk = app.add_subcommand("hikami", "decomposition of the transformed s-Hikami function");
  add_manifold_options(hk, o);
  hk->add_option("--s", o.s, "moment order s, 0 <= s <= r - 3");
  hk->add_flag("--dump-dft", o.dump_dft, "include the transform values");
  bind(hk, "hikami", cmd_hikami);

  auto* wr = app.add_subcommand("wrt", "WRT invariant at level k or at a root of unity");
  add_manifold_options(wr, o);
  wr->add_option("-k", o.k, "level");
  wr->add_option("--root", o.root, "root of unity e^{2 pi i l/k} as l/k");
  wr->add_flag("--exact", o.exact, "include the cyclotomic coefficients");
  bind(wr, "wrt", cmd_wrt);

  auto* rd = app.add_subcommand("radial", "radial limit of Psi at a rational");
  add_manifold_options(rd, o);
  rd->add_option("--alpha", o.alpha, "rational point a/b")->required();
  rd->add_flag("--exact", o.exact, "include the cyclotomic coefficients");
  bind(rd, "radial", cmd_radial);

  auto* th = app.add_subcommand("theta", "asymptotic series of the partial theta building block chi_j");
  add_manifold_options(th, o);
  th->add_option("--j", o.j, "building block index");
  th->add_option("--alpha", o.alpha, "expansion point a/b");
  th->add_option("--orders", o.orders, "number of coefficients");
  th->add_option("--tau", o.tau, "also evaluate the series and its median sum at tau");
  bind(th, "theta", cmd_theta);

  auto* vf = app.add_subcommand("verify", "identity checks with residuals");
  vf->require_subcommand(1);
  auto add_verify = [&](const char* name, const char* help, Report (*fn)(const Options&)) {
    auto* c = vf->add_subcommand(name, help);
    add_manifold_options(c, o);
    c->add_option("--tolerance", o.tolerance, "residual threshold");
    bind(c, std::string("verify ") + name, fn);
    return c;
  };
  add_verify("aec", "exact asymptotic expansion against WRT_k", verify_aec)->add_option("-k", o.k, "level")->required();
  auto* vs = add_verify("stokes", "median sum and Stokes jumps of chi_j", verify_stokes);
  vs->add_option("--tau", o.tau, "point in the upper half-plane")->required();
  vs->add_option("--j", o.j, "building block index");
  add_verify("lr", "integral plus residue splitting of WRT_k", verify_lr)->add_option("-k", o.k, "level")->required();
  add_verify("dft", "transform decompositions, closure and vanishing", verify_dft);
  add_verify("moments", "vanishing moments of generalized Hikami functions", verify_moments);
  add_verify("radial", "radial limit against WRT at a root of unity", verify_radial_cmd)
      ->add_option("--alpha", o.alpha, "rational point a/b")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  const bool verifying = command.rfind("verify", 0) == 0;
  try {
    unsigned bits = o.precision ? o.precision : default_precision_bits();
    if (bits < 32) throw InvalidArgument("--precision must be at least 32 bits");
    PrecisionScope scope(bits);
    if (!o.tolerance.empty()) {
      try {
        (void)Real(o.tolerance);
      } catch (const std::exception&) {
        throw InvalidArgument("--tolerance expects a number, got '" + o.tolerance + "'");
      }
    }
    Report r = action(o);
    emit(out, o, bits, command, r);
    if (r.pass && !*r.pass) return kVerificationFailed;
    return kOk;
  } catch (const Error& e) {
    error_report(err, e.kind(), e.what());
    return verifying && is_verification_kind(e.kind()) ? kVerificationFailed : kUsage;
  } catch (const std::exception& e) {
    error_report(err, "Error", e.what());
    return kUsage;
  }
}

}  // namespace seifertq::cli
