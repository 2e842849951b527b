#pragma once

#include <string>

#include "json.hpp"
#include "traceforms/affine.hpp"
#include "traceforms/modforms.hpp"
#include "traceforms/qseries.hpp"
#include "traceforms/zmodes.hpp"

namespace traceforms {

// All serializers use ordered_json so that key order (and therefore the byte
// stream) is stable across runs.  Rationals travel as exact "p/q" strings.
using Json = nlohmann::ordered_json;

// { "offset24": int, "coeffs": [ "p/q", ... ], "prec": int }
Json to_json(const QSeries& f);
QSeries qseries_from_json(const Json& j);

// { "wt": int, "n": int, "entries": { "<m>": "p/q", ... } }
Json to_json(const ConversionTable& t);
ConversionTable conversion_table_from_json(const Json& j);

// { "weight": int, "dim": int, "basis": [ QSeries, ... ] } — emit-only, the
// cusp flag and Sturm bound are reconstruction parameters, not data.
Json to_json(const FormSpace& space);

// { "check": str, "algebra": str, "level": "p/q", "draws": int,
//   "seed": int, "status": "pass"|"fail", "witness": str (only on fail) }
Json to_json(const OracleReport& rep);
OracleReport oracle_report_from_json(const Json& j);

}  // namespace traceforms
