#include "wedgegroup/serialization.hpp"

#include <cmath>
#include <cstdio>

#include "wedgegroup/errors.hpp"

namespace wg {

namespace {

[[noreturn]] void parse_fail(const std::string& what)
{
  throw Error(ErrorCode::Parse, what);
}

double number(const Json& j, const char* what)
{
  if (!j.is_number()) parse_fail(std::string(what) + ": expected a number");
  return j.get<double>();
}

const Json& field(const Json& j, const char* key)
{
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<double> flat_reals(const Json& j, const char* what)
{
  if (!j.is_array()) parse_fail(std::string(what) + ": expected an array");
  std::vector<double> out;
  for (const Json& e : j) {
    if (e.is_array()) {
      for (const Json& x : e) out.push_back(number(x, what));
    } else {
      out.push_back(number(e, what));
    }
  }
  return out;
}

Complex complex_entry(const Json& j)
{
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0], "real part"), number(j[1], "imaginary part")};
  parse_fail("complex entry must be a number or [re, im]");
}

void dump(const Json& j, std::string& out)
{
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        dump(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ',';
        dump(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isnan(v)) {
        out += "\"nan\"";
      } else if (std::isinf(v)) {
        out += v > 0 ? "\"inf\"" : "\"-inf\"";
      } else {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += buf;
      }
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string canonical_dump(const Json& doc)
{
  std::string out;
  dump(doc, out);
  return out;
}

Json parse_document(const std::string& text)
{
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
}

Mat4 parse_matrix4(const Json& j)
{
  const std::vector<double> v = flat_reals(j, "matrix");
  if (v.size() != 16) parse_fail("matrix must have 16 entries");
  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = v[static_cast<std::size_t>(4 * r + c)];
  }
  return m;
}

FourVector parse_four_vector(const Json& j)
{
  const std::vector<double> v = flat_reals(j, "four-vector");
  if (v.size() != 4) parse_fail("four-vector must have 4 entries");
  try {
    return {v[0], v[1], v[2], v[3]};
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

PoincareElement parse_poincare(const Json& j)
{
  const Mat4 m = parse_matrix4(field(j, "lorentz"));
  const FourVector a = j.contains("translation") ? parse_four_vector(j.at("translation")) : FourVector();
  return {LorentzElement::from_matrix(m), a};
}

Wedge parse_wedge(const Json& j)
{
  return Wedge::make(parse_four_vector(field(j, "l1")), parse_four_vector(field(j, "l2")),
                     parse_four_vector(field(j, "p")));
}

DoubleCone parse_double_cone(const Json& j)
{
  return DoubleCone::make(parse_four_vector(field(j, "past")), parse_four_vector(field(j, "future")));
}

MapSpec parse_map_spec(const Json& j)
{
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw Error(ErrorCode::BadSpec, "map spec needs a string field \"kind\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  MapSpec spec;
  if (kind == "tautological") {
    spec.kind = MapKind::Tautological;
  } else if (kind == "spinorial-negative") {
    spec.kind = MapKind::SpinorialNegative;
  } else if (kind == "conjugated") {
    spec.kind = MapKind::Conjugated;
    if (!j.contains("G")) throw Error(ErrorCode::BadSpec, "conjugated map needs \"G\"");
    std::vector<double> re;
    std::vector<double> im;
    try {
      re = flat_reals(j.at("G"), "G");
      im = j.contains("G_imag") ? flat_reals(j.at("G_imag"), "G_imag") : std::vector<double>(re.size(), 0.0);
    } catch (const Error& e) {
      throw Error(ErrorCode::BadSpec, e.what());
    }
    if ((re.size() != 16 && re.size() != 25) || im.size() != re.size()) {
      throw Error(ErrorCode::BadSpec, "G must have 16 or 25 entries (and G_imag the same count)");
    }
    const int n = re.size() == 16 ? 4 : 5;
    spec.g = CMat::Identity(5, 5);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        const auto k = static_cast<std::size_t>(n * r + c);
        spec.g(r, c) = Complex(re[k], im[k]);
      }
    }
  } else {
    throw Error(ErrorCode::BadSpec, "unknown map kind \"" + kind + "\"");
  }
  return spec;
}

CMat parse_cmatrix(const Json& j, Eigen::Index d)
{
  if (!j.is_array()) parse_fail("matrix must be an array");
  const auto n = static_cast<Eigen::Index>(j.size());
  const bool flat = n == d * d && !(d == 1 && j[0].is_array() && j[0].size() == 1);
  CMat m(d, d);
  if (flat) {
    for (Eigen::Index k = 0; k < d * d; ++k) m(k / d, k % d) = complex_entry(j[static_cast<std::size_t>(k)]);
    return m;
  }
  if (n != d) parse_fail("matrix must have d rows or d*d entries");
  for (Eigen::Index r = 0; r < d; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) parse_fail("matrix row has wrong length");
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = complex_entry(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

CVec parse_cvector(const Json& j)
{
  if (!j.is_array()) parse_fail("vector must be an array");
  CVec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_entry(j[i]);
  return v;
}

MatrixAlgebra parse_algebra(const Json& j)
{
  const Json& dj = field(j, "d");
  if (!dj.is_number_integer() || dj.get<long long>() <= 0) parse_fail("\"d\" must be a positive integer");
  const auto d = static_cast<Eigen::Index>(dj.get<long long>());
  if (d > MatrixAlgebra::kMaxDimension) {
    throw Error(ErrorCode::DimensionCap, "matrix size " + std::to_string(d) + " exceeds the cap of 16");
  }
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) parse_fail("\"generators\" must be an array");
  std::vector<CMat> mats{CMat::Identity(d, d)};
  for (const Json& g : gens) mats.push_back(parse_cmatrix(g, d));
  return MatrixAlgebra::generated_by(mats);
}

Json to_json(const Mat4& m)
{
  Json out = Json::array();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out.push_back(m(r, c));
  }
  return out;
}

Json to_json(const FourVector& v)
{
  return Json::array({v.t(), v.x(), v.y(), v.z()});
}

Json to_json(const Vec3& v)
{
  return Json::array({v[0], v[1], v[2]});
}

Json to_json(const PoincareElement& g)
{
  return {{"lorentz", to_json(g.lorentz().matrix())}, {"translation", to_json(g.translation())}};
}

Json to_json(const Reflection& r)
{
  Json out = to_json(r.element());
  out["validated"] = true;
  return out;
}

Json to_json(const Wedge& w)
{
  return {{"l1", to_json(w.l1())}, {"l2", to_json(w.l2())}, {"p", to_json(w.p())}};
}

Json to_json(const CMat& m)
{
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    out.push_back(row);
  }
  return out;
}

Json to_json(const CVec& v)
{
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(Json::array({v[i].real(), v[i].imag()}));
  return out;
}

Json to_json(const TargetElement& t)
{
  return {{"matrix", to_json(t.matrix)}, {"antilinear", t.antilinear}};
}

Json to_json(const CheckReport& r)
{
  return {{"check", r.check},         {"samples", r.samples}, {"max_residual", r.max_residual},
          {"pass", r.pass},           {"tolerance", r.tolerance}, {"details", r.details},
          {"diagnostics", r.diagnostics}};
}

}  // namespace wg
