#pragma once

#include "logconcave/area_dynamics.hpp"
#include "logconcave/counterexamples.hpp"
#include "logconcave/dihedral.hpp"
#include "logconcave/parallelogram_oracle.hpp"
#include "logconcave/transversal.hpp"

#include <json.hpp>

namespace logconcave {

using Json = nlohmann::ordered_json;

/// {"exact": "p/q", "decimal": d}
Json scalar_json(const Scalar& value);

/// {"vertices": [["p/q", "r/s"], ...], "symmetry": "..."}
Json polygon_json(const ConvexPolygon& p);

/// Accepts rationals as strings or JSON integers and vertices in either
/// orientation. A missing symmetry field means the detected one. Throws
/// Parse on malformed input.
ConvexPolygon polygon_from_json(const Json& j);

Json to_json(const TransversalityDiagnosis& d);
Json to_json(const PropertyBReport& r);
Json to_json(const MidpointWitness& w);
Json to_json(const BoundaryComponent& c);
Json to_json(const ExtendedPair& p);
Json to_json(const AdditivityLedger& l);
Json to_json(const Matrix2& t);
Json to_json(const TerminalCase& t);
Json to_json(const OracleVerdict& v);
Json to_json(const GridPoint& g);
Json to_json(const UniformWitness& w);
Json to_json(const QuasiConcaveWitness& w);
Json to_json(const DihedralReport& r);

}  // namespace logconcave
