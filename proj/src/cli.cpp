#include "wedgegroup/cli.hpp"

#include <CLI11/CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "wedgegroup/acceptance.hpp"
#include "wedgegroup/errors.hpp"
#include "wedgegroup/modular.hpp"
#include "wedgegroup/reconstruction.hpp"
#include "wedgegroup/sampling.hpp"

namespace wg {

const char* to_string(CommandStatus s)
{
  switch (s) {
    case CommandStatus::Ok: return "ok";
    case CommandStatus::Fail: return "fail";
    case CommandStatus::Error: return "error";
  }
  return "error";
}

int CommandResult::exit_code() const
{
  switch (status) {
    case CommandStatus::Ok: return 0;
    case CommandStatus::Fail: return 1;
    case CommandStatus::Error: return 2;
  }
  return 2;
}

Json CommandResult::to_json() const
{
  return {{"status", wg::to_string(status)}, {"payload", payload}, {"diagnostics", diagnostics}};
}

namespace {

struct Common {
  std::string file;
  std::optional<double> tol;
};

CommandResult error_result(CommandStatus status, const std::string& message)
{
  CommandResult r;
  r.status = status;
  r.payload = nullptr;
  r.diagnostics.push_back(message);
  return r;
}

// Parse and specification errors are usage problems; everything else the
// library rejects is a failed check.
CommandResult from_library_error(const Error& e)
{
  const bool usage = e.code() == ErrorCode::Parse || e.code() == ErrorCode::BadSpec;
  return error_result(usage ? CommandStatus::Error : CommandStatus::Fail, e.what());
}

Json read_input(const Common& c, std::istream& in)
{
  std::stringstream buffer;
  if (c.file.empty()) {
    buffer << in.rdbuf();
  } else {
    std::ifstream f(c.file);
    if (!f) throw Error(ErrorCode::Parse, "cannot open input file " + c.file);
    buffer << f.rdbuf();
  }
  return parse_document(buffer.str());
}

double resolve_tol(const Common& c, double fallback)
{
  return c.tol.value_or(fallback);
}

const Json& unwrap(const Json& doc, const char* key)
{
  return doc.is_object() && doc.contains(key) ? doc.at(key) : doc;
}

Json optional_vec(const std::optional<Vec3>& v)
{
  return v ? to_json(*v) : Json(nullptr);
}

CommandResult cmd_polar(const Common& c, std::istream& in)
{
  const Json doc = read_input(c, in);
  const double tol = resolve_tol(c, kDefaultTolerance);
  const LorentzElement lambda = LorentzElement::from_matrix(parse_matrix4(unwrap(doc, "matrix")), tol);
  const PolarData p = polar_decompose(lambda, tol);
  CommandResult r;
  r.payload = {{"R", to_json(p.rotation.matrix())},
               {"B", to_json(p.boost.matrix())},
               {"axis", optional_vec(p.axis)},
               {"angle", p.angle},
               {"boost_dir", optional_vec(p.boost_dir)},
               {"rapidity", p.rapidity},
               {"residual", (p.rotation.matrix() * p.boost.matrix() - lambda.matrix()).norm()}};
  return r;
}

struct FactorArgs {
  bool random = false;
  std::uint64_t seed = 42;
};

CommandResult cmd_factor(const Common& c, const FactorArgs& a, std::istream& in)
{
  const double tol = resolve_tol(c, kDefaultTolerance);
  LorentzElement lambda;
  std::optional<Vec3> e;
  if (a.random) {
    Sampler s(a.seed, 0, 0);
    lambda = s.lorentz(3.0);
  } else {
    const Json doc = read_input(c, in);
    lambda = LorentzElement::from_matrix(parse_matrix4(unwrap(doc, "matrix")), tol);
    if (doc.is_object() && doc.contains("e")) {
      const Json& ej = doc.at("e");
      if (!ej.is_array() || ej.size() != 3) throw Error(ErrorCode::Parse, "\"e\" must be a 3-vector");
      e = Vec3(ej[0].get<double>(), ej[1].get<double>(), ej[2].get<double>());
    }
  }
  const PolarData p = polar_decompose(lambda, tol);
  if (!e) e = admissible_axis(p.axis, p.boost_dir);
  const ReflectionPair pair = factor_into_reflections(lambda, *e, tol);
  const double residual = (pair.first.linear().matrix() * pair.second.linear().matrix() - lambda.matrix()).norm();
  CommandResult r;
  r.payload = {{"lambda", to_json(lambda.matrix())},
               {"lambda1", to_json(pair.first.linear().matrix())},
               {"lambda2", to_json(pair.second.linear().matrix())},
               {"e", to_json(*e)},
               {"residual", residual}};
  if (!(residual <= tol)) {
    r.status = CommandStatus::Fail;
    r.diagnostics.push_back("product residual exceeds tolerance");
  }
  return r;
}

struct ReconstructArgs {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
};

CommandResult cmd_reconstruct(const Common& c, const ReconstructArgs& a, std::istream& in)
{
  const MapSpec spec = parse_map_spec(read_input(c, in));
  const ReflectionMap map = builtin_map(spec);
  CommandResult r;
  if (a.samples == 0) r.diagnostics.push_back("warning: samples=0, checks pass vacuously");

  const CheckReport axioms = verify_axioms(map, a.samples, a.seed, resolve_tol(c, kDefaultTolerance));
  r.payload = {{"map", to_string(spec.kind)}, {"axioms", to_json(axioms)}, {"homomorphism", nullptr}};
  if (!axioms.pass) {
    r.status = CommandStatus::Fail;
    r.payload["stage"] = "axioms";
    r.diagnostics.push_back("axiom check failed; homomorphism check skipped");
    return r;
  }
  const CheckReport hom = verify_homomorphism(map, a.samples, a.seed, resolve_tol(c, 1e-8));
  r.payload["homomorphism"] = to_json(hom);
  r.payload["stage"] = "homomorphism";
  if (!hom.pass) {
    r.status = CommandStatus::Fail;
    r.diagnostics.push_back("homomorphism check failed");
  }
  return r;
}

CommandResult cmd_modular(const Common& c, std::istream& in)
{
  const Json doc = read_input(c, in);
  const MatrixAlgebra m = parse_algebra(doc);
  if (!doc.contains("vector")) throw Error(ErrorCode::Parse, "missing field \"vector\"");
  const CVec omega = parse_cvector(doc.at("vector"));
  if (omega.size() != m.d()) throw Error(ErrorCode::Parse, "vector length does not match d");
  const double tol = resolve_tol(c, 1e-8);
  const ModularData md = modular_data(m, omega);
  const ModularResiduals res = modular_residuals(m, omega, md);
  CommandResult r;
  r.payload = {{"J", to_json(md.j)},
               {"Delta", to_json(md.delta)},
               {"algebra_dimension", m.dimension()},
               {"residuals",
                {{"j_squared", res.j_squared},
                 {"j_omega", res.j_omega},
                 {"delta_omega", res.delta_omega},
                 {"j_delta_j", res.j_delta_j},
                 {"duality", res.duality},
                 {"flow", res.flow}}},
               {"max_residual", res.max()}};
  if (!(res.max() <= tol)) {
    r.status = CommandStatus::Fail;
    r.diagnostics.push_back("modular residual exceeds tolerance");
  }
  return r;
}

struct SuiteArgs {
  std::string level = "full";
  std::uint64_t seed = 42;
  int parallel = 1;
  bool force_fail = false;
};

CommandResult cmd_suite(const SuiteArgs& a, std::ostream& err)
{
  SuiteOptions o;
  o.seed = a.seed;
  o.level = a.level == "quick" ? SuiteLevel::Quick : SuiteLevel::Full;
  o.threads = a.parallel;
  o.force_fail = a.force_fail;
  const std::vector<CriterionResult> results = run_acceptance(o);

  CommandResult r;
  Json criteria = Json::array();
  for (const CriterionResult& cr : results) {
    criteria.push_back({{"id", cr.id},
                        {"name", cr.name},
                        {"pass", cr.pass()},
                        {"time_limit", cr.time_limit},
                        {"report", to_json(cr.report)}});
    err << "criterion " << cr.id << ' ' << cr.name << ' ' << std::fixed << std::setprecision(3) << cr.seconds
        << " s" << (cr.within_time() ? "" : " (over time limit)") << '\n';
    if (!cr.pass()) {
      r.status = CommandStatus::Fail;
      r.diagnostics.push_back("failed: " + cr.name);
    }
  }
  r.payload = {{"level", a.level}, {"seed", a.seed}, {"criteria", criteria}};
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Reflection maps, Poincare reconstruction and finite modular theory"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  double tol_flag = 0.0;
  auto* tol_opt = app.add_option("--tol", tol_flag, "Tolerance override (wins over WEDGEGROUP_TOL)")
                    ->check(CLI::PositiveNumber);
  app.add_option("--file", common.file, "Read the JSON input from this file instead of stdin");

  auto* polar = app.add_subcommand("polar", "Polar decomposition of a Lorentz matrix");

  FactorArgs fa;
  auto* factor = app.add_subcommand("factor", "Factor a Lorentz matrix into two reflections");
  factor->add_flag("--random", fa.random, "Factor a random element instead of reading input");
  factor->add_option("--seed", fa.seed, "Seed for --random");

  ReconstructArgs ra;
  auto* reconstruct = app.add_subcommand("reconstruct", "Check the axioms and the induced homomorphism of a map");
  reconstruct->add_option("--samples", ra.samples, "Number of samples per check");
  reconstruct->add_option("--seed", ra.seed, "Sampling seed");

  auto* modular = app.add_subcommand("modular", "Modular conjugation and operator of (algebra, vector)");

  SuiteArgs sa;
  auto* suite = app.add_subcommand("suite", "Run the acceptance suite");
  suite->add_option("--level", sa.level, "Sample-count level")->check(CLI::IsMember({"quick", "full"}));
  suite->add_option("--seed", sa.seed, "Sampling seed");
  suite->add_option("--parallel", sa.parallel, "OpenMP threads used inside each check")->check(CLI::PositiveNumber);
  suite->add_flag("--force-fail", sa.force_fail, "Append a check that always fails");

  auto emit = [&](const CommandResult& r) {
    out << canonical_dump(r.to_json()) << '\n';
    return r.exit_code();
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << app.help();
    return emit(error_result(CommandStatus::Error, std::string("usage: ") + e.what()));
  }

  if (tol_opt->count() > 0) {
    common.tol = tol_flag;
  } else if (const char* env = std::getenv("WEDGEGROUP_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
      return emit(error_result(CommandStatus::Error, "usage: WEDGEGROUP_TOL must be a positive number"));
    }
    common.tol = v;
  }

  try {
    if (polar->parsed()) return emit(cmd_polar(common, in));
    if (factor->parsed()) return emit(cmd_factor(common, fa, in));
    if (reconstruct->parsed()) return emit(cmd_reconstruct(common, ra, in));
    if (modular->parsed()) return emit(cmd_modular(common, in));
    return emit(cmd_suite(sa, err));
  } catch (const Error& e) {
    return emit(from_library_error(e));
  } catch (const Json::exception& e) {
    return emit(error_result(CommandStatus::Error, std::string("Parse: ") + e.what()));
  }
}

}  // namespace wg
