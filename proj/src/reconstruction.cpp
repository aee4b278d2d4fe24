#include "wedgegroup/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wedgegroup/errors.hpp"
#include "wedgegroup/sampling.hpp"
#include "wedgegroup/sweep.hpp"

namespace wg {

namespace {

constexpr Complex kI(0.0, 1.0);

CMat to_complex(const Mat5& m)
{
  return m.cast<Complex>();
}

TargetElement tautological_value(const Reflection& r)
{
  return {to_complex(r.affine()), !r.linear().orthochronous()};
}

std::array<CMat, 3> pauli()
{
  CMat sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0.0, 1.0, 1.0, 0.0;
  sy << 0.0, -kI, kI, 0.0;
  sz << 1.0, 0.0, 0.0, -1.0;
  return {sx, sy, sz};
}

CMat sigma_dot(const Vec3& v)
{
  static const std::array<CMat, 3> s = pauli();
  return v[0] * s[0] + v[1] * s[1] + v[2] * s[2];
}

// Second admissible axis: e rotated by pi/3 about the defined axis, or e_y
// when no axis is defined.
Vec3 alternate_axis(const std::optional<Vec3>& axis, const Vec3& e)
{
  if (!axis) return Vec3::UnitY();
  return Eigen::AngleAxisd(std::numbers::pi / 3.0, *axis) * e;
}

TargetElement guarded(const ReflectionMap& j, const LorentzElement& g, const Vec3& e, const Vec3& alt, double guard)
{
  const TargetElement primary = v_e(j, g, e);
  const TargetElement check = v_e(j, g, alt);
  const double d = distance(primary, check);
  if (!(d <= guard)) {
    throw Error(ErrorCode::AxiomViolation,
                "V_e depends on the admissible e (distance " + std::to_string(d) + "); not a reflection map");
  }
  return primary;
}

bool involutive(const Mat4& m, double tol)
{
  return (m * m - Mat4::Identity()).norm() <= 10.0 * tol * scale_of(m);
}

double abs_distance(const TargetElement& a, const TargetElement& b)
{
  if (a.antilinear != b.antilinear) return std::numeric_limits<double>::infinity();
  return (a.matrix - b.matrix).norm();
}

LorentzElement random_proper(Sampler& s, double max_rapidity)
{
  const LorentzElement l = s.lorentz(max_rapidity);
  if (s.uniform(0.0, 1.0) < 0.5) return l;
  return reference_reflection().linear() * l;
}

}  // namespace

const char* to_string(MapKind kind)
{
  switch (kind) {
    case MapKind::Tautological: return "tautological";
    case MapKind::Conjugated: return "conjugated";
    case MapKind::SpinorialNegative: return "spinorial-negative";
  }
  return "unknown";
}

ReflectionMap::ReflectionMap(Evaluator evaluator, Eigen::Index dimension, MapSpec spec)
  : evaluator_(std::move(evaluator)), dimension_(dimension), spec_(std::move(spec))
{
}

CMat spinor_lift(const LorentzElement& lambda)
{
  const PolarData p = polar_decompose(lambda);
  CMat a_r = CMat::Identity(2, 2);
  if (p.axis) {
    a_r = std::cos(0.5 * p.angle) * CMat::Identity(2, 2) - kI * std::sin(0.5 * p.angle) * sigma_dot(*p.axis);
  }
  CMat a_b = CMat::Identity(2, 2);
  if (p.boost_dir) {
    a_b = std::cosh(0.5 * p.rapidity) * CMat::Identity(2, 2) + std::sinh(0.5 * p.rapidity) * sigma_dot(*p.boost_dir);
  }
  return a_r * a_b;
}

ReflectionMap builtin_map(const MapSpec& spec)
{
  switch (spec.kind) {
    case MapKind::Tautological:
      return ReflectionMap(tautological_value, 5, spec);

    case MapKind::Conjugated: {
      if (spec.g.rows() != 5 || spec.g.cols() != 5) {
        throw Error(ErrorCode::BadSpec, "conjugating matrix must be 5x5 (or 4x4 embedded)");
      }
      if (!spec.g.allFinite()) throw Error(ErrorCode::BadSpec, "conjugating matrix has non-finite entries");
      Eigen::JacobiSVD<CMat> svd(spec.g);
      const auto& sv = svd.singularValues();
      if (!(sv[sv.size() - 1] > 1e-12 * sv[0])) throw Error(ErrorCode::BadSpec, "conjugating matrix is singular");
      const TargetElement g{spec.g, false};
      const TargetElement ginv{spec.g.inverse(), false};
      return ReflectionMap([g, ginv](const Reflection& r) { return g * tautological_value(r) * ginv; }, 5, spec);
    }

    case MapKind::SpinorialNegative: {
      CMat minus_i_sx(2, 2);
      minus_i_sx << 0.0, -kI, -kI, 0.0;
      return ReflectionMap(
        [minus_i_sx](const Reflection& r) {
          const CMat a = spinor_lift(reflection_conjugator(r).lorentz());
          return TargetElement{a * minus_i_sx * a.inverse(), false};
        },
        2, spec);
    }
  }
  throw Error(ErrorCode::BadSpec, "unknown map kind");
}

const Reflection& reference_reflection()
{
  static const Reflection r = reflection_about_axis(Vec3::UnitX());
  return r;
}

TargetElement v_e(const ReflectionMap& j, const LorentzElement& g, const Vec3& e, double tol)
{
  const Reflection le = reflection_about_axis(e, tol);
  const LorentzElement gl = g * le.linear();
  if (!involutive(gl.matrix(), tol)) throw Error(ErrorCode::NotAdmissible, "g lambda_e is not a reflection");
  return j(Reflection::trusted(PoincareElement(gl))) * j(le);
}

TargetElement v_of_rotation(const ReflectionMap& j, const LorentzElement& r, double guard)
{
  const Mat4& m = r.matrix();
  if ((m.row(0) - Vec4::UnitX().transpose()).norm() > 1e-9 || (m.col(0) - Vec4::UnitX()).norm() > 1e-9) {
    throw Error(ErrorCode::PreconditionViolated, "element is not a spatial rotation");
  }
  const auto [angle, axis] = rotation_angle_axis(m.bottomRightCorner<3, 3>());
  const Vec3 e = admissible_axis(axis, std::nullopt);
  return guarded(j, r, e, alternate_axis(axis, e), guard);
}

TargetElement v_of_boost(const ReflectionMap& j, const LorentzElement& b, double guard)
{
  const Mat4& m = b.matrix();
  if ((m - m.transpose()).norm() > 1e-9 * scale_of(m) || m(0, 0) < 1.0 - 1e-9) {
    throw Error(ErrorCode::PreconditionViolated, "element is not a pure boost");
  }
  const Vec3 v = m.block<1, 3>(0, 1).transpose();
  const std::optional<Vec3> dir = v.norm() > 1e-300 ? std::optional<Vec3>(v.normalized()) : std::nullopt;
  const Vec3 e = admissible_axis(std::nullopt, dir);
  return guarded(j, b, e, alternate_axis(dir, e), guard);
}

TargetElement v_of_lorentz(const ReflectionMap& j, const LorentzElement& lambda, double guard)
{
  const PolarData p = polar_decompose(lambda);
  return v_of_rotation(j, p.rotation, guard) * v_of_boost(j, p.boost, guard);
}

TargetElement v_of_lorentz_boost_first(const ReflectionMap& j, const LorentzElement& lambda, double guard)
{
  const PolarData p = polar_decompose(lambda);
  const LorentzElement left_boost = p.rotation * p.boost * p.rotation.inverse();
  return v_of_boost(j, left_boost, guard) * v_of_rotation(j, p.rotation, guard);
}

TargetElement v_of_proper(const ReflectionMap& j, const LorentzElement& g, double guard, const Reflection& lambda0)
{
  if (!g.proper()) throw Error(ErrorCode::NotProper, "determinant is negative");
  if (g.orthochronous()) return v_of_lorentz(j, g, guard);
  return j(lambda0) * v_of_lorentz(j, lambda0.linear() * g, guard);
}

TargetElement u_translation_fixed_reflection(const ReflectionMap& j, const Reflection& lambda, const FourVector& x,
                                             double tol)
{
  const LorentzElement& m = lambda.linear();
  const double defect = (m * x + x).vec().norm();
  if (defect > 10.0 * tol * std::max(1.0, m.matrix().norm()) * (1.0 + x.vec().norm())) {
    throw Error(ErrorCode::NotAdmissible, "translation is not in the -1 eigenspace of the reflection");
  }
  return j(Reflection::trusted({m, x})) * j(Reflection::trusted(PoincareElement(m)));
}

TargetElement u_timelike_translation(const ReflectionMap& j, const FourVector& x, double guard)
{
  if (x.vec().squaredNorm() == 0.0) return j.identity();
  const PoincareElement frame(rest_frame_boost(x));
  const Reflection l1 = reflection_about_axis(Vec3::UnitX()).conjugated_by(frame);
  const Reflection l2 = reflection_about_axis(Vec3::UnitY()).conjugated_by(frame);
  const TargetElement primary = u_translation_fixed_reflection(j, l1, x);
  const TargetElement check = u_translation_fixed_reflection(j, l2, x);
  const double d = distance(primary, check);
  if (!(d <= guard)) {
    throw Error(ErrorCode::AxiomViolation,
                "U(1,x) depends on the admissible reflection (distance " + std::to_string(d) + ")");
  }
  return primary;
}

TargetElement u_translation_split(const ReflectionMap& j, const FourVector& z, const FourVector& shift, double guard)
{
  const FourVector x = 0.5 * z + shift;
  const FourVector y = shift - 0.5 * z;
  for (const FourVector* v : {&x, &y}) {
    const CausalClass c = classify_vector(*v);
    if (c != CausalClass::TimelikeFuture && c != CausalClass::TimelikePast) {
      throw Error(ErrorCode::PreconditionViolated, "split of the translation is not into timelike vectors");
    }
  }
  return u_timelike_translation(j, x, guard) * u_timelike_translation(j, -y, guard);
}

TargetElement u_translation(const ReflectionMap& j, const FourVector& z, double guard)
{
  if (z.vec().squaredNorm() == 0.0) return j.identity();
  return u_translation_split(j, z, FourVector(z.vec().norm() + 1.0, 0.0, 0.0, 0.0), guard);
}

TargetElement u_poincare(const ReflectionMap& j, const PoincareElement& g, double guard)
{
  const TargetElement v = v_of_proper(j, g.lorentz(), guard);
  if (g.translation().vec().squaredNorm() == 0.0) return v;
  return u_translation(j, g.translation(), guard) * v;
}

CheckReport verify_axioms(const ReflectionMap& j, std::size_t samples, std::uint64_t seed, double tol, int threads)
{
  const SweepResult r = run_sweep(
    samples, 2,
    [&](std::size_t i, std::span<double> out) {
      Sampler s(seed, 1, i);
      const Reflection l1 = s.reflection(1.5, 1.0);
      const Reflection l2 = s.reflection(1.5, 1.0);
      const TargetElement j1 = j(l1);
      out[0] = distance(j1 * j1, j.identity());
      const Reflection l121 = Reflection::trusted(l1.element() * l2.element() * l1.element());
      out[1] = distance(j1 * j(l2) * j1, j(l121));
    },
    threads);
  return summarize("axioms", tol, r, {"involution", "covariance"});
}

CheckReport verify_homomorphism(const ReflectionMap& j, std::size_t samples, std::uint64_t seed, double tol,
                                int threads)
{
  const CheckReport axioms = verify_axioms(j, std::min<std::size_t>(samples, 1000), seed, kDefaultTolerance, threads);
  if (!axioms.pass) {
    CheckReport report;
    report.check = "homomorphism";
    report.samples = 0;
    report.tolerance = tol;
    report.pass = false;
    report.max_residual = axioms.max_residual;
    report.details["skipped"] = true;
    report.details["axioms"] = axioms.details;
    report.diagnostics.push_back("axiom check failed; homomorphism check skipped");
    return report;
  }

  const SweepResult r = run_sweep(
    samples, 8,
    [&](std::size_t i, std::span<double> out) {
      Sampler s(seed, 2, i);
      const LorentzElement a = s.lorentz(2.0);
      const LorentzElement b = s.lorentz(2.0);
      out[0] = distance(v_of_lorentz(j, a * b), v_of_lorentz(j, a) * v_of_lorentz(j, b));

      const LorentzElement pa = random_proper(s, 2.0);
      const LorentzElement pb = random_proper(s, 2.0);
      out[1] = distance(v_of_proper(j, pa * pb), v_of_proper(j, pa) * v_of_proper(j, pb));

      const PoincareElement ga(random_proper(s, 1.5), s.vector(1.0));
      const PoincareElement gb(random_proper(s, 1.5), s.vector(1.0));
      out[2] = distance(u_poincare(j, ga * gb), u_poincare(j, ga) * u_poincare(j, gb));

      const Vec3 n = s.unit_vector();
      const double u = s.uniform(-1.5, 1.5);
      const double v = s.uniform(-1.5, 1.5);
      const double rot = distance(v_of_rotation(j, make_rotation(n, u)) * v_of_rotation(j, make_rotation(n, v)),
                                  v_of_rotation(j, make_rotation(n, u + v)));
      const double bst = distance(v_of_boost(j, make_boost(n, u)) * v_of_boost(j, make_boost(n, v)),
                                  v_of_boost(j, make_boost(n, u + v)));
      out[3] = std::max(rot, bst);

      const LorentzElement rr = s.rotation();
      const LorentzElement bb = s.boost(2.0);
      const TargetElement vr = v_of_rotation(j, rr);
      out[4] = distance(vr * v_of_boost(j, bb) * vr.inverse(), v_of_boost(j, rr * bb * rr.inverse()));

      const Reflection lin = s.reflection(1.5, 0.0);
      out[5] = distance(v_of_proper(j, lin.linear()), j(lin));

      const Reflection moved = s.reflection(1.5, 1.0);
      out[6] = distance(u_poincare(j, moved.element()), j(moved));

      out[7] = distance(v_of_lorentz(j, a), v_of_lorentz_boost_first(j, a));
    },
    threads);
  CheckReport report = summarize("homomorphism", tol, r,
                                 {"lorentz", "proper", "poincare", "one-parameter", "rotation-boost",
                                  "restriction", "translated-restriction", "uniqueness"});
  report.details["axioms"] = axioms.max_residual;
  return report;
}

CheckReport verify_e_independence(const ReflectionMap& j, std::size_t samples, std::size_t axes, std::uint64_t seed,
                                  double tol, int threads)
{
  const SweepResult r = run_sweep(
    samples, 2,
    [&](std::size_t i, std::span<double> out) {
      Sampler s(seed, 3, i);
      const bool rotation = i % 2 == 0;
      const Vec3 axis = s.unit_vector();
      const LorentzElement g = rotation ? make_rotation(axis, s.uniform(0.0, std::numbers::pi))
                                        : make_boost(axis, s.uniform(0.0, 3.0));
      std::vector<TargetElement> values;
      values.reserve(axes);
      for (std::size_t k = 0; k < axes; ++k) values.push_back(v_e(j, g, s.orthogonal_unit(axis)));
      double worst = 0.0;
      for (std::size_t a = 0; a < values.size(); ++a) {
        for (std::size_t b = a + 1; b < values.size(); ++b) worst = std::max(worst, distance(values[a], values[b]));
      }
      out[rotation ? 0 : 1] = worst;
    },
    threads);
  return summarize("e-independence", tol, r, {"rotations", "boosts"});
}

CheckReport verify_factorization_independence(const ReflectionMap& j, std::size_t samples, std::size_t pairs,
                                              std::uint64_t seed, double tol, int threads)
{
  const SweepResult r = run_sweep(
    samples, 1,
    [&](std::size_t i, std::span<double> out) {
      Sampler s(seed, 4, i);
      const LorentzElement lambda = s.l0_conjugate(1.0);
      const StabilityConjugation sc = stability_conjugation(lambda);
      const ReflectionPair canonical = factor_into_reflections(lambda);
      const TargetElement v = v_of_lorentz(j, lambda);
      double worst = 0.0;
      for (std::size_t k = 0; k < pairs; ++k) {
        const LorentzElement c = sc.frame *
                                 stability_group_element(Vec3::UnitZ(), s.uniform(-std::numbers::pi, std::numbers::pi),
                                                         s.uniform(-1.0, 1.0)) *
                                 sc.frame.inverse();
        const ReflectionPair alt = ambiguity_conjugate(c, canonical);
        worst = std::max(worst, distance(j(alt.first) * j(alt.second), v));
      }
      out[0] = worst;
    },
    threads);
  return summarize("factorization-independence", tol, r, {"pairs"});
}

CheckReport verify_translations(const ReflectionMap& j, std::size_t samples, std::uint64_t seed, double tol,
                                int threads)
{
  const SweepResult r = run_sweep(
    samples, 6,
    [&](std::size_t i, std::span<double> out) {
      Sampler s(seed, 5, i);
      const FourVector z1 = s.vector(1.0);
      const FourVector z2 = s.vector(1.0);
      const TargetElement u1 = u_translation(j, z1);
      out[0] = distance(u1 * u_translation(j, z2), u_translation(j, z1 + z2));
      out[1] = distance(u1 * u_translation(j, -z1), j.identity());

      const Reflection lam = s.reflection(1.0, 0.0);
      const Mat4 onto_t = 0.5 * (Mat4::Identity() - lam.linear().matrix());
      const FourVector x(Vec4(onto_t * s.vector(1.0).vec()));
      const FourVector y(Vec4(onto_t * s.vector(1.0).vec()));
      const double law = distance(u_translation_fixed_reflection(j, lam, x) * u_translation_fixed_reflection(j, lam, y),
                                  u_translation_fixed_reflection(j, lam, x + y));
      out[2] = law;

      const FourVector t = s.uniform(0.0, 1.0) < 0.5 ? s.timelike_future(1.0) : -s.timelike_future(1.0);
      const Reflection other = reflection_about_axis(s.unit_vector()).conjugated_by(PoincareElement(rest_frame_boost(t)));
      out[3] = distance(u_translation_fixed_reflection(j, other, t), u_timelike_translation(j, t));

      const Vec3 w = s.uniform(0.0, 0.3) * s.unit_vector();
      const FourVector shift = FourVector::from_spatial(z1.vec().norm() + 1.0 + w.norm() + s.uniform(0.0, 1.0), w);
      out[4] = distance(u_translation_split(j, z1, shift), u1);

      const PoincareElement g(random_proper(s, 1.5));
      const TargetElement ug = u_poincare(j, g);
      out[5] = distance(ug * u_translation(j, z2) * ug.inverse(), u_translation(j, g.lorentz() * z2));
    },
    threads);
  return summarize("translations", tol, r,
                   {"additivity", "inverse", "fixed-reflection-law", "reflection-independence", "split-independence",
                    "lorentz-covariance"});
}

CheckReport verify_continuity_probe(const ReflectionMap& j, const std::vector<Reflection>& path)
{
  CheckReport report;
  report.check = "continuity-probe";
  report.samples = path.size();
  report.tolerance = std::numeric_limits<double>::infinity();
  nlohmann::json steps_j = nlohmann::json::array();
  nlohmann::json steps_v = nlohmann::json::array();
  double max_j = 0.0;
  double max_v = 0.0;
  try {
    TargetElement prev_j = path.empty() ? j.identity() : j(path.front());
    TargetElement prev_v = j.identity();
    for (std::size_t t = 1; t < path.size(); ++t) {
      const TargetElement cur_j = j(path[t]);
      const TargetElement cur_v = v_of_lorentz(j, path[t].linear() * path.front().linear());
      const double dj = abs_distance(cur_j, prev_j);
      const double dv = abs_distance(cur_v, prev_v);
      steps_j.push_back(dj);
      steps_v.push_back(dv);
      max_j = std::max(max_j, dj);
      max_v = std::max(max_v, dv);
      prev_j = cur_j;
      prev_v = cur_v;
    }
  } catch (const std::exception& e) {
    report.pass = false;
    report.diagnostics.push_back(e.what());
  }
  report.record(max_j);
  report.record(max_v);
  report.details["max_step_j"] = max_j;
  report.details["max_step_v"] = max_v;
  report.details["steps_j"] = steps_j;
  report.details["steps_v"] = steps_v;
  report.pass = report.pass && std::isfinite(report.max_residual);
  return report;
}

CheckReport boost_continuity_probe(const ReflectionMap& j, int steps, std::uint64_t seed, double final_bound)
{
  CheckReport report;
  report.check = "boost-continuity";
  report.samples = static_cast<std::size_t>(std::max(steps, 0));
  report.tolerance = final_bound;
  Sampler s(seed, 6, 0);
  const Vec3 start = s.unit_vector();
  const Vec3 spin = s.unit_vector();
  nlohmann::json values = nlohmann::json::array();
  bool monotone = true;
  double prev = std::numeric_limits<double>::infinity();
  double last = 0.0;
  try {
    for (int k = 1; k <= steps; ++k) {
      const Vec3 n = Eigen::AngleAxisd(2.0 * k, spin) * start;
      // Turn the admissible e by an irregular angle each step so that no
      // fixed choice of unit disk is followed.
      const Vec3 e = Eigen::AngleAxisd(2.7 * k, n) * admissible_axis(std::nullopt, n);
      const LorentzElement b = make_boost(n, std::ldexp(1.0, -k));
      last = abs_distance(v_e(j, b, e), j.identity());
      values.push_back(last);
      if (!(last < prev)) monotone = false;
      prev = last;
    }
  } catch (const std::exception& e) {
    report.pass = false;
    monotone = false;
    last = std::numeric_limits<double>::infinity();
    report.diagnostics.push_back(e.what());
  }
  report.record(last);
  report.details["values"] = values;
  report.details["monotone"] = monotone;
  report.pass = report.pass && monotone && last < final_bound;
  return report;
}

}  // namespace wg
