#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "wedgegroup/modular.hpp"
#include "wedgegroup/reconstruction.hpp"
#include "wedgegroup/report.hpp"
#include "wedgegroup/wedge.hpp"

namespace wg {

using Json = nlohmann::json;

/// Keys sorted, doubles printed with 17 significant digits, non-finite
/// doubles as the strings "inf", "-inf", "nan". Byte-identical for equal
/// documents.
std::string canonical_dump(const Json& doc);

/// Parsing failures throw Error(ErrorCode::Parse).
Json parse_document(const std::string& text);

/// 16 row-major reals or a nested 4x4 array.
Mat4 parse_matrix4(const Json& j);
FourVector parse_four_vector(const Json& j);
/// {"lorentz": matrix, "translation": optional four-vector}
PoincareElement parse_poincare(const Json& j);
/// {"l1", "l2", "p"}
Wedge parse_wedge(const Json& j);
/// {"past", "future"}
DoubleCone parse_double_cone(const Json& j);
/// {"kind": "tautological" | "conjugated" | "spinorial-negative",
///  "G": 16 or 25 reals, "G_imag": optional imaginary parts}
MapSpec parse_map_spec(const Json& j);
/// Entries are [re, im] pairs or plain reals; a matrix is either nested
/// rows or a flat row-major list of d*d entries.
CMat parse_cmatrix(const Json& j, Eigen::Index d);
CVec parse_cvector(const Json& j);
/// {"d": n, "generators": [matrix, ...]}
MatrixAlgebra parse_algebra(const Json& j);

Json to_json(const Mat4& m);
Json to_json(const FourVector& v);
Json to_json(const Vec3& v);
Json to_json(const PoincareElement& g);
/// Poincare JSON plus "validated": true.
Json to_json(const Reflection& r);
Json to_json(const Wedge& w);
Json to_json(const CMat& m);
Json to_json(const CVec& v);
Json to_json(const TargetElement& t);
Json to_json(const CheckReport& r);

}  // namespace wg
