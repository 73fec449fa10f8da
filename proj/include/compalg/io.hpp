#ifndef COMPALG_IO_HPP
#define COMPALG_IO_HPP

#include <json.hpp>
#include <string>

#include "compalg/magic.hpp"

namespace compalg {

using json = nlohmann::json;

json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const json& j);

// Compact field spec strings for the command line:
//   q | gf:<p> | omega:<base> | ratfun:<base>:<var> | cubic:<base>:<alpha>
// A string starting with '{' is parsed as the JSON descriptor instead.
FieldPtr field_from_spec(const std::string& spec);

json quadform_to_json(const QuadraticForm& q);
QuadraticForm quadform_from_json(const FieldPtr& f, const json& j);

json algebra_to_json(const AlgebraPtr& a);
AlgebraPtr algebra_from_json(const json& j);

json lie_to_json(const LieAlgebra& l);
LieAlgebra lie_from_json(const json& j);

json matrix_to_json(const Mat& m);

enum class TableLayout { canonical, figure1, figure2 };

// Row-by-column multiplication table in the requested layout. figure1
// groups columns (e1,e2 | u1,u2,u3 | v1,v2,v3); figure2 reorders to
// (e1,e2 | u1,v1 | u2,v2 | u3,v3). Both need dimension 8.
std::string render_table(const AlgebraPtr& a, TableLayout layout);

}  // namespace compalg

#endif
