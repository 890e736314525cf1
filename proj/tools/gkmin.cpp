// gkmin: compute objects and run verification suites from the command line.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gkmin/coherent.hpp"
#include "gkmin/dyck.hpp"
#include "gkmin/error.hpp"
#include "gkmin/json_io.hpp"
#include "gkmin/kl.hpp"
#include "gkmin/langlands.hpp"
#include "gkmin/tableau.hpp"
#include "gkmin/text_format.hpp"
#include "gkmin/verify.hpp"
#include "gkmin/weights.hpp"

namespace {

using namespace gkmin;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  std::string suite = "all";
  std::string format = "json";
  std::optional<int> oracle_max_n;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string out;

  std::string object;
  std::string u, v, perm, lambda, gamma;
  std::optional<int> i, j;
};

template <class T>
const T& need(const std::optional<T>& x, const char* flag) {
  if (!x) throw UsageError(std::string("missing ") + flag);
  return *x;
}

const std::string& need(const std::string& x, const char* flag) {
  if (x.empty()) throw UsageError(std::string("missing ") + flag);
  return x;
}

int need_n(const Options& o) {
  if (o.n == 0) throw UsageError("missing --n");
  return o.n;
}

std::string csv(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) os << (c ? "," : "") << m(r, c).get_str();
    os << '\n';
  }
  return os.str();
}

// A compute result: JSON always, plus a CSV rendering for tables.
struct Output {
  Json json;
  std::optional<std::string> csv;
};

Output matrix_output(const char* name, int n, const IntMatrix& m, Json labels = nullptr) {
  Json j;
  j["object"] = name;
  j["n"] = n;
  if (!labels.is_null()) j["labels"] = std::move(labels);
  j["matrix"] = to_json(m);
  return {j, csv(m)};
}

Output compute(const Options& o) {
  const std::string& what = o.object;
  if (what == "kl" || what == "r") {
    const Permutation u = parse_permutation(need(o.u, "--u"));
    const Permutation v = parse_permutation(need(o.v, "--v"));
    if (u.degree() != v.degree()) throw DomainError("--u and --v have different degrees");
    Json j;
    j["u"] = to_json(u);
    j["v"] = to_json(v);
    j["bruhat_leq"] = bruhat_leq(u, v);
    const QPoly p = what == "kl" ? kl_polynomial(u, v) : r_polynomial(u, v);
    j[what == "kl" ? "P" : "R"] = to_json(p);
    j["text"] = p.to_string();
    return {j, std::nullopt};
  }
  if (what == "parabolic-kl") {
    const Permutation u = parse_permutation(need(o.u, "--u"));
    const Permutation v = parse_permutation(need(o.v, "--v"));
    Json j;
    j["u"] = to_json(u);
    j["v"] = to_json(v);
    const QPoly q = parabolic_kl_q(u, v);
    if (bruhat_leq(u, v)) {
      const SkewPartition eta(psi_map(v), psi_map(u));
      j["eta"] = to_json(eta);
      j["dyck"] = is_dyck(eta);
      j["depth"] = depth(eta);
    }
    j["q"] = to_json(q);
    j["q_text"] = q.to_string();
    const QPoly m = parabolic_kl_minus(u, v);
    j["minus_one"] = to_json(m);
    j["minus_one_text"] = m.to_string();
    return {j, std::nullopt};
  }
  if (what == "rs") {
    const auto pq = rs(parse_permutation(need(o.perm, "--perm")));
    Json j;
    j["P"] = to_json(pq.insertion);
    j["Q"] = to_json(pq.recording);
    return {j, std::nullopt};
  }
  if (what == "minimal") {
    const Permutation w = parse_permutation(need(o.perm, "--perm"));
    Json j;
    j["w"] = to_json(w);
    j["minimal"] = to_json(minimal_element(w));
    return {j, std::nullopt};
  }
  if (what == "transition") {
    const int n = need_n(o);
    Json labels = Json::array();
    for (const auto& l : basis_labels(n)) labels.push_back(l.to_string());
    return matrix_output("transition", n, transition_psi_to_psibar(n), labels);
  }
  if (what == "transition-inverse") {
    const int n = need_n(o);
    Json labels = Json::array();
    for (const auto& l : basis_labels(n)) labels.push_back(l.to_string());
    return matrix_output("transition-inverse", n, transition_psibar_to_psi(n), labels);
  }
  if (what == "jordan") return matrix_output("jordan", need_n(o), jordan_matrix(need_n(o)));
  if (what == "cell-kl") return matrix_output("cell-kl", need_n(o), cell_kl_matrix(need_n(o)));
  if (what == "psi") {
    const int n = need_n(o);
    return {to_json(psi_induced(need(o.i, "--i"), need(o.j, "--j"), n)), std::nullopt};
  }
  if (what == "bernstein") {
    const WeightVector lambda = parse_weight(need(o.lambda, "--lambda"));
    const int n = lambda.degree();
    Json j;
    j["lambda"] = to_json(lambda);
    if (!o.perm.empty()) {
      const Permutation w = parse_permutation(o.perm);
      j["w"] = to_json(w);
      j["c"] = to_json(bernstein_c(w, lambda));
      return {j, std::nullopt};
    }
    // Table of c_{v_{k,l}} for k, l = 2..n.
    Json rows = Json::array();
    std::ostringstream table;
    table << "k,l,c\n";
    for (int k = 2; k <= n; ++k) {
      for (int l = 2; l <= n; ++l) {
        const Rational c = bernstein_c(v_cycle(k, l, n), lambda);
        rows.push_back(Json{{"k", k}, {"l", l}, {"c", to_json(c)}});
        table << k << ',' << l << ',' << c.get_str() << '\n';
      }
    }
    j["c_v"] = std::move(rows);
    return {j, table.str()};
  }
  if (what == "dim") {
    const WeightVector lambda = parse_weight(need(o.lambda, "--lambda"));
    const int i = need(o.i, "--i"), jj = need(o.j, "--j");
    Json j;
    j["lambda"] = to_json(lambda);
    j["i"] = i;
    j["j"] = jj;
    j["dim_F"] = to_json(dim_F(i, jj, lambda));
    j["degree_functional"] = to_json(degree_functional(psi_induced(i, jj, lambda.degree()), lambda));
    return {j, std::nullopt};
  }
  if (what == "classify") {
    const LanglandsParameter gamma = parse_parameter(need(o.gamma, "--gamma"));
    const GkClass c = gk_dim_class(gamma);
    Json j;
    j["class"] = to_string(c);
    const auto dim = gk_dimension(c, gamma.size());
    j["gk_dim"] = dim ? Json(*dim) : Json(nullptr);
    return {j, std::nullopt};
  }
  if (what == "parameter") {
    const WeightVector lambda = parse_weight(need(o.lambda, "--lambda"));
    const Permutation w = parse_permutation(need(o.perm, "--perm"));
    const LanglandsParameter gamma = parameter_from(lambda, w);
    Json j;
    j["gamma"] = to_json(gamma);
    j["class"] = to_string(gk_dim_class(gamma));
    return {j, std::nullopt};
  }
  if (what == "singular") {
    const SingularPoint sp = singular_point(need(o.i, "--i"), need(o.j, "--j"), need_n(o));
    Json j;
    j["i0"] = sp.i0;
    j["j0"] = sp.j0;
    j["lambda"] = to_json(sp.lambda);
    j["gamma"] = to_json(sp.gamma);
    j["dominant"] = is_dominant(sp.lambda);
    j["regular"] = is_regular(sp.lambda);
    j["class"] = to_string(gk_dim_class(sp.gamma));
    return {j, std::nullopt};
  }
  if (what == "composition") {
    const WeightVector lambda = parse_weight(need(o.lambda, "--lambda"));
    const int i = need(o.i, "--i"), jj = need(o.j, "--j");
    Json parts = Json::array();
    for (const auto& c : composition_series(i, jj, lambda)) parts.push_back(to_json(c));
    Json j;
    j["i"] = i;
    j["j"] = jj;
    j["lambda"] = to_json(lambda);
    j["constituents"] = std::move(parts);
    j["dim_F"] = to_json(dim_F(i, jj, lambda));
    return {j, std::nullopt};
  }
  throw UsageError("unknown object '" + what + "'");
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot open --out file " + o.out);
  f << text;
}

void apply_oracle_bound(const Options& o) {
  if (o.oracle_max_n) {
    OracleLimits limits = oracle_limits();
    limits.max_degree = *o.oracle_max_n;
    set_oracle_limits(limits);
  }
}

int run_verify_command(const Options& o) {
  if (o.format != "json") throw UsageError("verify supports --format json only");
  apply_oracle_bound(o);
  VerifyOptions vo;
  vo.n = need_n(o);
  vo.suite = o.suite;
  vo.oracle_max_n = oracle_limits().max_degree;
  vo.seed = o.seed;
  vo.threads = o.threads;
  const VerificationReport report = run_verify(vo);
  emit(o, report.to_json().dump(2) + "\n");
  return report.passed() ? kExitPass : kExitFail;
}

int run_compute_command(const Options& o) {
  apply_oracle_bound(o);
  const Output out = compute(o);
  if (o.format == "csv") {
    if (!out.csv) throw UsageError("--format csv is only available for matrix and table outputs");
    emit(o, *out.csv);
  } else {
    emit(o, out.json.dump() + "\n");
  }
  return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal Gelfand-Kirillov dimension toolkit for GL_n(C)"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Degree n >= 2");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--oracle-max-n", o.oracle_max_n, "Largest n for the KL oracle (overrides GKMIN_ORACLE_MAX_N)");
    sub->add_option("--out", o.out, "Write output to FILE");
  };

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites at degree n");
  add_common(verify);
  verify->add_option("--suite", o.suite, "Suite to run")->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", o.seed, "Seed for randomized weights");
  verify->add_option("--threads", o.threads, "Worker threads (0 = hardware)");

  CLI::App* comp = app.add_subcommand("compute", "Compute one object and print it");
  add_common(comp);
  comp->add_option("object", o.object,
                   "kl | r | parabolic-kl | rs | minimal | transition | transition-inverse | jordan | cell-kl | psi | "
                   "bernstein | dim | classify | parameter | singular | composition")
      ->required();
  comp->add_option("--u", o.u, "Permutation, one-line, comma separated");
  comp->add_option("--v", o.v, "Permutation, one-line, comma separated");
  comp->add_option("--perm", o.perm, "Permutation, one-line, comma separated");
  comp->add_option("--lambda", o.lambda, "2n rationals a_1..a_n,b_1..b_n");
  comp->add_option("--gamma", o.gamma, "Parameter \"a:b;a:b;...\"");
  comp->add_option("--i", o.i, "Index i");
  comp->add_option("--j", o.j, "Index j");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return run_verify_command(o);
    return run_compute_command(o);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
