#ifndef NPOLY_IO_HPP
#define NPOLY_IO_HPP

#include <string>

#include <json.hpp>

#include "npoly/hodge.hpp"
#include "npoly/lfunction.hpp"
#include "npoly/polygon.hpp"
#include "npoly/polytope.hpp"

namespace npoly {

using Json = nlohmann::ordered_json;

// {"n": int, "basis": [[int,...],...] (columns are f_i),
//  "segments": [{"d": int, "dp": int}, ...]}
DirectSumPolytope polytope_from_json(const Json& j);
Json polytope_to_json(const DirectSumPolytope& P);

// list of strings "r/s"
TwistVector twist_from_json(const Json& j);
// comma-separated "r/s,r/s,..." (CLI flag form)
TwistVector twist_from_string(const std::string& s);
Json twist_to_json(const TwistVector& t);

// {"p": int, "n": int, "terms": [{"exp": [int,...], "coeff": int}, ...]}
LaurentPolynomial laurent_from_json(const Json& j);
Json laurent_to_json(const LaurentPolynomial& f);

// [["slope-as-a/b", multiplicity], ...] with derived exact vertices
Json polygon_to_json(const ConvexPolygon& p);
ConvexPolygon polygon_from_json(const Json& j);

// {"D": int, "coeffs": [int, ...]}
Json poincare_to_json(const PoincarePolynomial& p);

Json load_json_file(const std::string& path);

}  // namespace npoly

#endif
