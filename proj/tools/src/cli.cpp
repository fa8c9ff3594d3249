#include "leavitt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "leavitt/bimodule.hpp"
#include "leavitt/complex.hpp"
#include "leavitt/homology.hpp"
#include "leavitt/injective.hpp"
#include "leavitt/literal.hpp"
#include "leavitt/lpa.hpp"
#include "leavitt/quiver.hpp"

namespace leavitt {

namespace {

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// --field wins over LEAVITT_FIELD; the default is Q.
Field resolve_field(const std::string& flag) {
  std::string text = flag;
  if (text.empty()) {
    const char* env = std::getenv("LEAVITT_FIELD");
    text = env != nullptr ? env : "Q";
  }
  try {
    return Field::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const nlohmann::ordered_json& report, const std::string& out_path, std::ostream& out) {
  std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file || !(file << text)) throw std::runtime_error("cannot write '" + out_path + "'");
}

nlohmann::ordered_json window_json(const WindowSpec& w) {
  return {{"lmin", w.l_min}, {"lmax", w.l_max}, {"N", w.N}};
}

struct VerifyOptions {
  std::string path;
  std::string suite = "all";
  int l_min = -2;
  int l_max = 2;
  int N = 4;
  std::uint64_t seed = 1;
  int samples = 50;
  std::string field;
  std::string out;
};

using SuiteRunner = std::function<std::vector<Certificate>(const Quiver&, const VerifyOptions&, const Field&)>;

std::vector<Certificate> complex_suite(const Quiver& q, const VerifyOptions& o, const Field&) {
  std::vector<Certificate> out;
  ComplexWindow w = build_window(q, o.l_min, o.l_max, o.N);
  out.push_back(verify_delta_squared(w));
  out.push_back(verify_acyclicity(w));
  for (int l = o.l_min; l < o.l_max; ++l) out.push_back(check_delta_condition_W(w, l));
  out.push_back(subcomplex_K(w).certificate);
  SubWindowResult c = cokernel_C(w);
  out.push_back(c.certificate);
  out.push_back(verify_decomposition(c.window));
  int L = std::max(1, o.l_max);
  int N = std::max(o.N, L);
  out.push_back(build_M_resolution(q, L, N).certificate);
  out.push_back(nakayama_compare(q, L, N));
  return out;
}

std::vector<Certificate> lpa_suite(const Quiver& q, const VerifyOptions& o, const Field& field) {
  LeavittAlgebra b(q);
  return {verify_lpa_relations(b), verify_lpa_associativity(b, o.seed, 200, std::max(1, o.N / 2), field),
          verify_chi_bijection(b, o.l_min, o.l_max, o.N)};
}

std::vector<Certificate> bimodule_suite(const Quiver& q, const VerifyOptions& o, const Field&) {
  LeavittAlgebra b(q);
  RightAction action(b);
  ComplexWindow w = build_window(q, o.l_min, o.l_max, o.N);
  return {verify_relations(action, w, o.seed, o.samples), verify_dg_compat(action, w),
          verify_delta_phi(b, w, o.seed, o.samples), verify_unit_section(action, w),
          verify_action_associativity(action, w, o.seed, o.samples)};
}

std::vector<Certificate> cohomology_suite(const Quiver& q, const VerifyOptions& o, const Field& field) {
  RightAction action{LeavittAlgebra(q)};
  HomWindow w(q, o.N);
  std::vector<Certificate> out;
  for (int n = o.l_min; n <= o.l_max; ++n) out.push_back(verify_coboundary_lemma(w, n, o.seed, 5));
  out.push_back(verify_embedding(action, w, o.l_min, o.l_max));
  QuasiBalancedOptions qb;
  qb.n_min = o.l_min;
  qb.n_max = o.l_max;
  qb.seed = o.seed;
  qb.cocycles = o.samples;
  qb.field = field;
  out.push_back(quasi_balanced_report(action, w, qb));
  return out;
}

const std::vector<std::pair<std::string, SuiteRunner>>& suites() {
  static const std::vector<std::pair<std::string, SuiteRunner>> table{
      {"complex", complex_suite},
      {"lpa", lpa_suite},
      {"bimodule", bimodule_suite},
      {"cohomology", cohomology_suite},
  };
  return table;
}

int cmd_validate(const std::string& path, const std::string& out_path, std::ostream& out) {
  Quiver q = load_quiver(path, ParseMode::kLenient);
  Diagnostics d = validate(q);
  nlohmann::ordered_json report;
  report["schema"] = kSchemaVersion;
  report["command"] = "validate";
  report["quiver"] = q.name();
  report["status"] = d.ok ? "pass" : "fail";
  report["failures"] = d.failures;
  report["notes"] = d.notes;
  emit(report, out_path, out);
  return d.ok ? kExitPass : kExitFail;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.l_min > o.l_max) throw UsageError("--lmin must not exceed --lmax");
  if (o.N < 2) throw UsageError("--N must be at least 2");
  if (o.samples < 0) throw UsageError("--samples must be nonnegative");
  Field field = resolve_field(o.field);
  Quiver q = load_quiver(o.path);

  nlohmann::ordered_json report;
  report["schema"] = kSchemaVersion;
  report["command"] = "verify";
  report["quiver"] = q.name();
  report["field"] = field.to_string();
  report["window"] = window_json(WindowSpec{o.l_min, o.l_max, o.N});
  report["seed"] = o.seed;
  nlohmann::ordered_json suite_reports = nlohmann::ordered_json::array();
  bool all_pass = true;
  for (const auto& [name, run] : suites()) {
    if (o.suite != "all" && o.suite != name) continue;
    bool pass = true;
    nlohmann::ordered_json certs = nlohmann::ordered_json::array();
    for (const Certificate& c : run(q, o, field)) {
      pass = pass && c.passed;
      certs.push_back(c.to_json());
    }
    all_pass = all_pass && pass;
    suite_reports.push_back({{"suite", name}, {"status", pass ? "pass" : "fail"}, {"certificates", std::move(certs)}});
  }
  report["suites"] = std::move(suite_reports);
  report["status"] = all_pass ? "pass" : "fail";
  emit(report, o.out, out);
  return all_pass ? kExitPass : kExitFail;
}

int cmd_lpa_mul(const std::string& path, const std::string& a, const std::string& b, const std::string& field_flag,
                std::ostream& out) {
  Field field = resolve_field(field_flag);
  LeavittAlgebra alg(load_quiver(path));
  LpaElement x = parse_lpa_element(alg, a, field);
  LpaElement y = parse_lpa_element(alg, b, field);
  out << format_element(alg.quiver(), alg.multiply(x, y)) << "\n";
  return kExitPass;
}

int cmd_act(const std::string& path, const std::string& m_text, const std::string& b_text,
            const std::string& field_flag, std::ostream& out) {
  Field field = resolve_field(field_flag);
  RightAction action{LeavittAlgebra(load_quiver(path))};
  const Quiver& q = action.quiver();
  ModuleElement m = parse_module_element(q, m_text, field);
  if (!m.is_homogeneous()) throw UsageError("module element is not homogeneous");
  LpaElement b = parse_lpa_element(action.algebra(), b_text, field);
  out << format_element(q, action.act(m, b)) << "\n";
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification engine for the projective Leavitt complex of a quiver without sources", "leavitt"};
  app.require_subcommand(1);

  std::string path;
  std::string out_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a quiver file");
  validate_cmd->add_option("quiver", path, "Quiver file")->required();
  validate_cmd->add_option("--out", out_path, "Write the JSON report here instead of stdout");

  VerifyOptions vo;
  std::vector<std::string> suite_names{"all"};
  for (const auto& entry : suites()) suite_names.push_back(entry.first);
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites and emit a JSON report");
  verify_cmd->add_option("quiver", vo.path, "Quiver file")->required();
  verify_cmd->add_option("--suite", vo.suite, "Suite to run")->check(CLI::IsMember(suite_names));
  verify_cmd->add_option("--lmin", vo.l_min, "Lowest degree of the window");
  verify_cmd->add_option("--lmax", vo.l_max, "Highest degree of the window");
  verify_cmd->add_option("--N", vo.N, "Bound on l(p) + l(q)");
  verify_cmd->add_option("--seed", vo.seed, "Seed for sampled checks");
  verify_cmd->add_option("--samples", vo.samples, "Random samples per sampled check");
  verify_cmd->add_option("--field", vo.field, "Q or Fp:<prime>; overrides LEAVITT_FIELD");
  verify_cmd->add_option("--out", vo.out, "Write the JSON report here instead of stdout");

  std::string lhs;
  std::string rhs;
  std::string field_flag;
  auto* mul_cmd = app.add_subcommand("lpa-mul", "Multiply two elements of L_k(Q^op)");
  mul_cmd->add_option("quiver", path, "Quiver file")->required();
  mul_cmd->add_option("a", lhs, "Left factor")->required();
  mul_cmd->add_option("b", rhs, "Right factor")->required();
  mul_cmd->add_option("--field", field_flag, "Q or Fp:<prime>; overrides LEAVITT_FIELD");

  auto* act_cmd = app.add_subcommand("act", "Right action of an L_k(Q^op) element on a complex element");
  act_cmd->add_option("quiver", path, "Quiver file")->required();
  act_cmd->add_option("module", lhs, "Complex element")->required();
  act_cmd->add_option("element", rhs, "Algebra element")->required();
  act_cmd->add_option("--field", field_flag, "Q or Fp:<prime>; overrides LEAVITT_FIELD");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(path, out_path, out);
    if (verify_cmd->parsed()) return cmd_verify(vo, out);
    if (mul_cmd->parsed()) return cmd_lpa_mul(path, lhs, rhs, field_flag, out);
    if (act_cmd->parsed()) return cmd_act(path, lhs, rhs, field_flag, out);
  } catch (const std::exception& e) {
    err << "leavitt: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace leavitt
