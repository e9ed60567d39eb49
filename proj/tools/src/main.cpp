#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccrfock/random.hpp"
#include "ccrfock/serialization.hpp"

using namespace ccrfock;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

struct Options {
  std::string input;
  std::string fixture;
  std::string output = "-";
  int cutoff = 16;
  double tol = 0.0;  // 0 keeps the tiered defaults
  std::uint64_t seed = 7;
  int max_alpha_len = 2;
  std::vector<int> alpha;
  std::vector<std::string> suites;
  // emit-fixture parameters for the "random" family
  int m = 1;
  int big_m = 2;
  double z_bound = 0.3;
};

SuiteConfig config_of(const Options& o) {
  SuiteConfig c;
  c.cutoff = o.cutoff;
  if (o.tol > 0.0) {
    c.tol_structural = o.tol;
    c.tol_composite = o.tol;
    c.tol_truncation = o.tol;
  }
  c.seed = o.seed;
  c.max_alpha_len = o.max_alpha_len;
  return c;
}

// Shared flags for every command that consumes an operator.
void add_common(CLI::App* cmd, Options& o, bool needs_input) {
  if (needs_input) {
    auto* in = cmd->add_option("-i,--input", o.input,
                               "operator description (JSON file)");
    auto* fx = cmd->add_option("--fixture", o.fixture,
                               "named example instead of --input "
                               "(identity|squeeze|embed12|random)");
    in->excludes(fx);
  }
  cmd->add_option("-o,--output", o.output, "report destination, - for stdout");
  cmd->add_option("--cutoff", o.cutoff, "total particle number cutoff")
      ->check(CLI::Range(2, 255));
  cmd->add_option("--tol", o.tol,
                  "override all tolerance tiers with one value")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "seed for probe vectors");
  cmd->add_option("--max-alpha", o.max_alpha_len,
                  "largest multi-index length exercised")
      ->check(CLI::Range(0, 6));
}

BogoliubovOperator load_operator(const Options& o, Json* echo) {
  if (!o.fixture.empty()) {
    const BogoliubovOperator v = make_fixture(o.fixture, o.seed);
    *echo = bogoliubov_json(v);
    return v;
  }
  if (o.input.empty()) throw Error("no --input file and no --fixture given");
  *echo = load_json_file(o.input);
  return bogoliubov_from_json(*echo);
}

int finish(const Options& o, const std::string& command, const Json& input,
           const SuiteConfig& cfg, const std::vector<CheckResult>& checks,
           const Json& payload) {
  Json report = report_json(command, input, cfg, checks);
  for (const auto& [key, value] : payload.items()) report[key] = value;
  write_json_file(o.output, report);
  if (o.output != "-") {
    for (const CheckResult& c : checks)
      std::printf("%-24s %11.4e vs %.1e  %s%s%s\n", c.name.c_str(), c.residual,
                  c.tolerance, c.pass ? "pass" : "FAIL",
                  c.note.empty() ? "" : "  ", c.note.c_str());
    std::printf("report written to %s\n", o.output.c_str());
  }
  return all_passed(checks) ? kExitPass : kExitCheckFailed;
}

CheckResult make_check(const std::string& name, double residual, double tol,
                       std::string note = "") {
  return CheckResult{name, residual, tol, residual <= tol, std::move(note)};
}

int run_validate(const Options& o) {
  Json echo;
  const BogoliubovOperator v = load_operator(o, &echo);
  const SuiteConfig cfg = config_of(o);
  const RelationResiduals rel = check_relations(v);
  const ShaleDiagnostics shale = shale_diagnostics(v);

  std::vector<CheckResult> checks;
  checks.push_back(make_check("relations", rel.max(), cfg.tol_structural));

  Json payload;
  payload["operator"] = {{"m", v.m()},
                         {"M", v.M()},
                         {"index", v.index()},
                         {"automorphism", v.is_automorphism()}};
  payload["relations"] = {{"isometry_diag", rel.isometry_diag},
                          {"isometry_off", rel.isometry_off},
                          {"conj_21", rel.conj_21},
                          {"conj_22", rel.conj_22}};
  payload["shale"] = {{"off_diagonal_hs", shale.off_diagonal_hs},
                      {"polar_defect", shale.polar_defect}};
  return finish(o, "validate", echo, cfg, checks, payload);
}

int run_decompose(const Options& o) {
  Json echo;
  const BogoliubovOperator v = load_operator(o, &echo);
  const SuiteConfig cfg = config_of(o);
  const Decomposition d = canonical_decomposition(v);

  std::vector<CheckResult> checks;
  checks.push_back(make_check(
      "reconstruction", (d.u_v.matrix() * d.w_v.matrix() - v.matrix()).norm(),
      cfg.tol_structural));
  checks.push_back(make_check(
      "projection",
      (d.u_v.matrix() * v.target().p1() * d.u_v.adjoint_matrix() -
       d.p_v.matrix())
          .norm(),
      cfg.tol_composite));
  checks.push_back(make_check("w-explicit", w_explicit_check(v, d).max(),
                              cfg.tol_composite));
  checks.push_back(make_check(
      "index",
      std::abs(d.u_v.index()) + std::abs(d.w_v.index() - v.index()), 0.0));
  if (v.is_automorphism()) {
    const SpecialForm sf = automorphism_special_form(v);
    checks.push_back(make_check("special-form",
                                (sf.u - d.u_v.matrix()).norm() +
                                    (sf.w - d.w_v.matrix()).norm(),
                                cfg.tol_composite));
  }

  Json payload;
  payload["decomposition"] = decomposition_json(d);
  return finish(o, "decompose", echo, cfg, checks, payload);
}

int run_implement(const Options& o) {
  Json echo;
  const BogoliubovOperator v = load_operator(o, &echo);
  const SuiteConfig cfg = config_of(o);
  const ImplementerFamily fam = build_family(v, cfg.cutoff);

  std::vector<CheckResult> checks;
  const GaussianNormCheck gn = gaussian_vacuum_norm_check(fam.target, fam.h);
  checks.push_back(
      make_check("gaussian-norm", gn.residual, cfg.tol_truncation));
  checks.push_back(make_check(
      "vacuum-norm", std::abs(fam.psi0.col(0).norm() - 1.0),
      cfg.tol_truncation));
  if (fam.generators() > 0)
    checks.push_back(make_check(
        "annihilation",
        verify_annihilation(fam, std::max(0, std::min(cfg.cutoff - 3, 6)))
            .max(),
        cfg.tol_truncation));

  Json payload;
  payload["family"] = family_summary_json(fam);
  payload["matrices"] = Json::object();
  payload["matrices"]["psi0"] = matrix_json(fam.psi0);
  payload["matrices"]["gaussian"] = matrix_json(fam.gaussian);
  payload["matrices"]["embed"] = matrix_json(fam.embed);
  Json psis = Json::array();
  for (const Matrix& p : fam.psi) psis.push_back(matrix_json(p));
  payload["matrices"]["psi"] = std::move(psis);
  if (!o.alpha.empty()) {
    const MultiIndex alpha(o.alpha);
    payload["alpha"] = o.alpha;
    payload["matrices"]["psi_alpha"] = matrix_json(psi_alpha(fam, alpha));
  }
  return finish(o, "implement", echo, cfg, checks, payload);
}

int run_verify(const Options& o) {
  Json echo;
  const BogoliubovOperator v = load_operator(o, &echo);
  const SuiteConfig cfg = config_of(o);
  std::vector<std::string> selection;
  for (const std::string& s : o.suites)
    if (s != "all") selection.push_back(s);
  const std::vector<CheckResult> checks = run_verify_suite(v, cfg, selection);
  return finish(o, "verify", echo, cfg, checks, Json::object());
}

int run_state(const Options& o) {
  Json echo;
  const BogoliubovOperator v = load_operator(o, &echo);
  const SuiteConfig cfg = config_of(o);
  const StateOperators so = state_operators(v);
  const PurityDefects pd = purity_equivalence(v);

  // The two purity defects vanish together; discordance at the composite
  // tolerance is the failure mode, pure vs mixed is plain information.
  const bool idem = pd.s_idempotency <= cfg.tol_composite;
  const bool comm = pd.range_commutator <= cfg.tol_composite;
  std::vector<CheckResult> checks;
  checks.push_back(make_check(
      "purity-equivalence",
      idem == comm ? 0.0 : std::abs(pd.s_idempotency - pd.range_commutator),
      0.0, idem ? "pure" : "mixed"));

  // Two-point function of the transported state against gamma(f, S g).
  Rng rng(cfg.seed);
  const FockSpace target(v.M(), std::min(cfg.cutoff, 6));
  const Vector omega = vacuum(target);
  Vector f = rng.complex_gaussian(v.source().dim(), 1).col(0).normalized();
  Vector g = rng.complex_gaussian(v.source().dim(), 1).col(0).normalized();
  const Matrix pf = field(target, KVector(v.target(), v.matrix() * f)).matrix;
  const Matrix pg = field(target, KVector(v.target(), v.matrix() * g)).matrix;
  const Complex lhs = omega.dot(pf.adjoint() * pg * omega);
  const Complex rhs =
      gamma_form(KVector(v.source(), f),
                 KVector(v.source(), Vector(so.s * g)));
  checks.push_back(
      make_check("two-point", std::abs(lhs - rhs), cfg.tol_structural));

  Json payload;
  payload["S"] = matrix_json(so.s);
  payload["S_tilde"] = matrix_json(so.s_tilde);
  payload["purity"] = {{"s_idempotency", pd.s_idempotency},
                       {"range_commutator", pd.range_commutator},
                       {"pure", idem && comm}};
  return finish(o, "state", echo, cfg, checks, payload);
}

int run_emit_fixture(const Options& o, const std::string& name) {
  const BogoliubovOperator v =
      (name == "random" && (o.m != 1 || o.big_m != 2 || o.z_bound != 0.3))
          ? random_bogoliubov(o.m, o.big_m, o.z_bound, o.seed)
          : make_fixture(name, o.seed);
  write_json_file(o.output, bogoliubov_json(v));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bogoliubov endomorphisms on truncated Bose Fock space: "
               "validation, disk decomposition, Gaussian implementers and "
               "their verification suite"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand(
      "validate", "check the defining relations of an operator");
  add_common(validate, o, true);

  auto* decompose = app.add_subcommand(
      "decompose", "canonical factorization V = U_V W_V through the disk");
  add_common(decompose, o, true);

  auto* implement = app.add_subcommand(
      "implement", "build the implementer family and export its matrices");
  add_common(implement, o, true);
  implement->add_option("--alpha", o.alpha,
                        "multi-index, e.g. --alpha 1,1,2 (nondecreasing)")
      ->delimiter(',');

  auto* verify =
      app.add_subcommand("verify", "run the full verification suite");
  add_common(verify, o, true);
  verify->add_option("--suite", o.suites,
                     "check selection (name or all), repeatable")
      ->delimiter(',');

  auto* state = app.add_subcommand(
      "state", "two-point operator S, purity equivalence, state transport");
  add_common(state, o, true);

  auto* emit = app.add_subcommand("emit-fixture",
                                  "write a named example operator as JSON");
  std::string fixture_name;
  emit->add_option("name", fixture_name,
                   "identity|squeeze|embed12|random")
      ->required();
  add_common(emit, o, false);
  emit->add_option("-m,--source-modes", o.m, "source modes (random only)");
  emit->add_option("-M,--target-modes", o.big_m, "target modes (random only)");
  emit->add_option("--z-bound", o.z_bound,
                   "disk norm bound for the random draw")
      ->check(CLI::Range(0.0, 0.999));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(o);
    if (app.got_subcommand(decompose)) return run_decompose(o);
    if (app.got_subcommand(implement)) return run_implement(o);
    if (app.got_subcommand(verify)) return run_verify(o);
    if (app.got_subcommand(state)) return run_state(o);
    if (app.got_subcommand(emit)) return run_emit_fixture(o, fixture_name);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    return kExitBadInput;
  }
  return kExitBadInput;
}
