#include "tph/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "tph/errors.hpp"
#include "tph/finite_section.hpp"
#include "tph/kernel_structure.hpp"
#include "tph/matching.hpp"
#include "tph/pc_fredholm.hpp"
#include "tph/serialization.hpp"
#include "tph/wiener_hopf.hpp"

namespace tph::cli {

namespace {

struct Options {
  std::string mode;
  std::string pair_file;
  std::string a_spec;
  std::string b_spec;
  std::string sign = "both";
  int n = 64;
  double p = 2.0;
  std::vector<double> p_sweep;
  bool json = false;
  std::string report_file;
};

// Raised for inputs that are well-formed JSON but unusable for the mode.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotMatchingPair:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidSymbol:
      return kBadInput;
    case ErrorCode::NotFredholmPair:
    case ErrorCode::SymbolDegenerateOnCircle:
    case ErrorCode::RootOnCircle:
    case ErrorCode::PoleOnCircle:
      return kNotFredholm;
    default:
      return kInternal;
  }
}

Json read_spec(const std::string& spec) {
  std::string text = spec;
  if (!spec.empty() && spec.front() == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + spec.substr(1));
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::pair<Json, Json> read_pair(const Options& o) {
  if (!o.pair_file.empty()) {
    const Json j = read_spec("@" + o.pair_file);
    if (!j.is_object() || !j.contains("a")) throw Error(ErrorCode::ParseError, "pair file needs key a");
    return {j["a"], j.contains("b") ? j["b"] : Json()};
  }
  if (o.a_spec.empty()) throw UsageError("either --pair or --a is required");
  return {read_spec(o.a_spec), o.b_spec.empty() ? Json() : read_spec(o.b_spec)};
}

std::vector<Sign> signs_of(const std::string& s) {
  if (s == "plus") return {Sign::plus};
  if (s == "minus") return {Sign::minus};
  return {Sign::plus, Sign::minus};
}

// ---- human-readable rendering ----

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt(cplx z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

std::string fmt(const LaurentPoly& p) {
  std::string s = "[";
  bool first = true;
  for (const auto& [k, v] : p.terms()) {
    s += (first ? "" : ", ") + std::string("t^") + std::to_string(k) + ": " + fmt(v);
    first = false;
  }
  return s + "]";
}

std::string fmt(const RationalSymbol& r) {
  if (r.is_laurent()) return fmt(r.num() * (1.0 / r.den().coeff(0)));
  return fmt(r.num()) + " / " + fmt(r.den());
}

void print_basis(std::ostream& out, const char* title, const std::vector<HardyFunction>& basis) {
  out << "  " << title << " (" << basis.size() << "):\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out << "    [" << i << "] " << fmt(basis[i].value()) << "\n        taylor:";
    for (const cplx c : taylor_coeffs(basis[i], 8)) out << ' ' << fmt(c);
    out << '\n';
  }
}

// ---- report sections ----

Json basis_json(const std::vector<HardyFunction>& basis) {
  Json out = Json::array();
  for (const auto& f : basis) out.push_back(hardy_to_json(f));
  return out;
}

Json oracle_report_json(const OracleReport& r) {
  Json res = Json::array();
  for (const auto& [i, v] : r.residuals) res.push_back({i, v});
  // The smallest singular values are the informative ones.
  Json sv = Json::array();
  const std::size_t n = r.singular_values.size();
  for (std::size_t i = n > 8 ? n - 8 : 0; i < n; ++i) sv.push_back(r.singular_values[i]);
  return {{"numeric_dim", r.numeric_kernel_dim}, {"smallest_singular_values", sv}, {"residuals", res}};
}

Json oracle_json(const OracleRun& r) {
  return {{"n_used", r.n_used},
          {"kernel", oracle_report_json(r.kernel)},
          {"cokernel", oracle_report_json(r.cokernel)},
          {"agree", r.agree},
          {"warnings", r.warnings}};
}

Json description_json(const KernelDescription& k) {
  return {{"branch", to_string(k.branch)},
          {"dim_ker", k.dim_ker},
          {"dim_coker", k.dim_coker},
          {"index", k.index},
          {"kernel_basis", basis_json(k.kernel_basis)},
          {"cokernel_basis", basis_json(k.cokernel_basis)},
          {"bases_independent", k.bases_independent}};
}

Json factorization_json(const RationalSymbol& g) {
  const WHFactorization f = factorize(g);
  Json j = {{"g_minus", symbol_to_json(f.g_minus)}, {"index_n", f.index_n}, {"g_plus", symbol_to_json(f.g_plus)}};
  if (f.signature) j["signature"] = *f.signature;
  return j;
}

std::optional<int> try_signature(const RationalSymbol& g) {
  try {
    return factorize(g).signature;
  } catch (const Error&) {
    return std::nullopt;
  }
}

struct SignResult {
  KernelDescription analytic;
  std::optional<OracleRun> oracle;
};

struct Outcome {
  Json report;
  int code = kOk;
  std::vector<std::string> text;  // human-readable lines
};

// ---- modes ----

void mode_pair(const Options& o, const RationalSymbol& a, const RationalSymbol& b, Outcome& out) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::InvalidArgument, "degenerate symbol (identically zero)");
  Json& r = out.report;
  const bool matching = check_matching(a, b);
  r["matching"] = matching;
  if (!matching) throw Error(ErrorCode::NotMatchingPair, "not a matching pair");
  const MatchingAnalysis m = analyze(a, b);
  r["subordinated"] = {{"c", symbol_to_json(m.c)}, {"d", symbol_to_json(m.d)}};
  r["kappa1"] = m.kappa1;
  r["kappa2"] = m.kappa2;
  r["quadrant"] = to_string(m.quadrant);
  if (const auto s = try_signature(m.c)) r["sigma_c"] = *s;
  if (const auto s = try_signature(m.d)) r["sigma_d"] = *s;

  std::ostringstream h;
  h << "matching pair\n  c = " << fmt(m.c) << "\n  d = " << fmt(m.d) << "\n";
  h << "kappa1 = " << m.kappa1 << ", kappa2 = " << m.kappa2 << " (quadrant " << to_string(m.quadrant) << ")\n";
  if (r.contains("sigma_c")) h << "sigma(c) = " << r["sigma_c"].get<int>() << '\n';
  if (r.contains("sigma_d")) h << "sigma(d) = " << r["sigma_d"].get<int>() << '\n';

  const bool with_oracle = o.mode == "analyze" || o.mode == "oracle";
  const auto signs = signs_of(o.sign);
  auto work = [&, n = o.n](Sign s) {
    SignResult sr{kernel_cokernel(a, b, s), std::nullopt};
    if (with_oracle) sr.oracle = run_oracle(a, b, s, sr.analytic, n);
    return sr;
  };
  std::vector<std::future<SignResult>> jobs;
  for (const Sign s : signs) jobs.push_back(std::async(signs.size() > 1 ? std::launch::async : std::launch::deferred, work, s));

  Json results = Json::object();
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const SignResult sr = jobs[i].get();
    const char* name = to_string(signs[i]);
    Json j = description_json(sr.analytic);
    h << "\n[" << name << "] " << to_string(sr.analytic.branch) << ": dim ker " << sr.analytic.dim_ker
      << ", dim coker " << sr.analytic.dim_coker << ", index " << sr.analytic.index << '\n';
    print_basis(h, "kernel basis", sr.analytic.kernel_basis);
    print_basis(h, "cokernel basis", sr.analytic.cokernel_basis);
    if (sr.oracle) {
      j["oracle"] = oracle_json(*sr.oracle);
      for (const auto& w : sr.oracle->warnings) r["warnings"].push_back(std::string(name) + ": " + w);
      h << "  oracle: N = " << sr.oracle->n_used << ", ker " << sr.oracle->kernel.numeric_kernel_dim << ", coker "
        << sr.oracle->cokernel.numeric_kernel_dim << (sr.oracle->agree ? ", agrees\n" : ", DISAGREES\n");
      if (!sr.oracle->agree && o.mode == "oracle") out.code = kOracleFailed;
    }
    results[name] = std::move(j);
  }
  r["results"] = std::move(results);
  out.text.push_back(h.str());
}

void mode_factorize(const Options& o, const RationalSymbol& a, const std::optional<RationalSymbol>& b,
                    Outcome& out) {
  std::vector<std::pair<std::string, RationalSymbol>> targets;
  if (b) {
    if (!check_matching(a, *b)) throw Error(ErrorCode::NotMatchingPair, "not a matching pair");
    const auto [c, d] = subordinated_pair(a, *b);
    targets = {{"c", c}, {"d", d}};
  } else {
    targets = {{"a", a}};
  }
  std::ostringstream h;
  Json section = Json::object();
  for (const auto& [name, g] : targets) {
    if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "degenerate symbol (identically zero)");
    if (o.mode == "factorize") {
      section[name] = factorization_json(g);
      const WHFactorization f = factorize(g);
      h << name << " = g_minus t^" << f.index_n << " g_plus\n  g_minus = " << fmt(f.g_minus)
        << "\n  g_plus  = " << fmt(f.g_plus) << '\n';
      if (f.signature) h << "  signature " << *f.signature << '\n';
    } else {
      Json j = {{"matching_function", is_matching_function(g)}};
      if (const auto s = try_signature(g)) j["signature"] = *s;
      try {
        j["point_check"] = signature_point_check(g);
      } catch (const Error&) {
      }
      h << name << ": matching function " << (j["matching_function"].get<bool>() ? "yes" : "no");
      if (j.contains("signature")) h << ", signature " << j["signature"].get<int>();
      if (j.contains("point_check")) h << ", point check " << j["point_check"].get<int>();
      h << '\n';
      section[name] = std::move(j);
    }
  }
  out.report[o.mode == "factorize" ? "factorizations" : "signatures"] = std::move(section);
  out.text.push_back(h.str());
}

Json pc_report_json(const PCFredholmReport& r) {
  Json w = Json::array();
  for (const auto& x : r.witnesses)
    w.push_back({{"t", cplx_to_json(x.t)}, {"y", x.y}, {"modulus", x.modulus}});
  return {{"p", r.p},
          {"is_fredholm", r.is_fredholm},
          {"min_matrix_det_modulus", r.min_matrix_det_modulus},
          {"min_scalar_modulus", r.min_scalar_modulus},
          {"witnesses", w}};
}

void mode_pc(const Options& o, const Json& ja, const Json& jb, Outcome& out) {
  const PCSymbol a = pc_symbol_from_json(ja);
  const PCSymbol b = jb.is_null() ? PCSymbol::constant(0.0) : pc_symbol_from_json(jb);
  const std::vector<double> ps = o.p_sweep.empty() ? std::vector<double>{o.p} : o.p_sweep;
  const PCSweep sweep = pc_p_sweep(a, b, ps);
  Json reports = Json::array(), cands = Json::array();
  std::ostringstream h;
  for (const auto& r : sweep.reports) {
    reports.push_back(pc_report_json(r));
    h << "p = " << fmt(r.p) << ": " << (r.is_fredholm ? "Fredholm" : "not Fredholm") << " (min |det| "
      << fmt(r.min_matrix_det_modulus) << ", min |scalar| " << fmt(r.min_scalar_modulus) << ")\n";
  }
  for (const auto& [p0, p1] : sweep.critical_candidates) {
    cands.push_back({p0, p1});
    h << "verdict changes between p = " << fmt(p0) << " and p = " << fmt(p1) << '\n';
  }
  out.report["pc"] = {{"reports", reports}, {"critical_candidates", cands}};
  out.text.push_back(h.str());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Kernels and cokernels of Toeplitz-plus-Hankel operators with matching symbols"};
  app.add_option("mode", o.mode, "analyze | factorize | signature | kernel | oracle | pc-check")
      ->required()
      ->check(CLI::IsMember({"analyze", "factorize", "signature", "kernel", "oracle", "pc-check"}));
  app.add_option("--pair", o.pair_file, "JSON file {\"a\": SPEC, \"b\": SPEC}");
  app.add_option("--a", o.a_spec, "symbol literal (JSON, or @file)");
  app.add_option("--b", o.b_spec, "symbol literal (JSON, or @file)");
  app.add_option("--sign", o.sign, "plus | minus | both")->check(CLI::IsMember({"plus", "minus", "both"}));
  app.add_option("--n", o.n, "finite-section size")->check(CLI::Range(1, 512));
  app.add_option("--p", o.p, "Lebesgue exponent for pc-check");
  app.add_option("--p-sweep", o.p_sweep, "list of exponents for pc-check")->delimiter(',');
  app.add_flag("--json", o.json, "print one JSON document");
  app.add_option("--report", o.report_file, "also write the JSON report to FILE");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kBadInput;
  }

  Outcome res;
  Json& r = res.report;
  r["request"] = {{"mode", o.mode}, {"sign", o.sign}, {"n", o.n}, {"p", o.p}};
  r["warnings"] = Json::array();
  try {
    auto [ja, jb] = read_pair(o);
    r["request"]["a"] = ja;
    if (!jb.is_null()) r["request"]["b"] = jb;
    if (o.mode == "pc-check") {
      mode_pc(o, ja, jb, res);
    } else {
      const RationalSymbol a = symbol_from_json(ja);
      std::optional<RationalSymbol> b;
      if (!jb.is_null()) b = symbol_from_json(jb);
      if (o.mode == "factorize" || o.mode == "signature") {
        mode_factorize(o, a, b, res);
      } else {
        if (!b) throw UsageError("mode " + o.mode + " needs both a and b");
        mode_pair(o, a, *b, res);
      }
    }
  } catch (const Error& e) {
    r["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    res.code = exit_code_for(e.code());
  } catch (const UsageError& e) {
    r["error"] = {{"code", "Usage"}, {"message", e.what()}};
    res.code = kBadInput;
  } catch (const std::exception& e) {
    r["error"] = {{"code", "Internal"}, {"message", e.what()}};
    res.code = kInternal;
  }

  const std::string doc = canonical_dump(r);
  if (!o.report_file.empty()) {
    std::ofstream f(o.report_file);
    f << doc << '\n';
    if (!f) {
      err << "cannot write " << o.report_file << '\n';
      if (res.code == kOk) res.code = kInternal;
    }
  }
  if (o.json) {
    out << doc << '\n';
  } else {
    for (const auto& t : res.text) out << t;
    for (const auto& w : r["warnings"]) out << "warning: " << w.get<std::string>() << '\n';
    if (r.contains("error")) err << "error: " << r["error"]["message"].get<std::string>() << '\n';
  }
  return res.code;
}

}  // namespace tph::cli
