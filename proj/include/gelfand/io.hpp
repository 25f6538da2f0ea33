#pragma once

#include <string>

#include "json.hpp"

#include "gelfand/prob.hpp"
#include "gelfand/triangle.hpp"

namespace gelfand {

using Json = nlohmann::json;

// File formats. Elements and states carry their blocks as flat row-major
// lists of [re, im] pairs; the signature is inferred from block lengths.
Json element_to_json(const Element& x);
Element element_from_json(const Json& j);

Json state_to_json(const State& sigma);
State state_from_json(const Json& j);

Json measure_to_json(const FinMeasure& mu);
FinMeasure measure_from_json(const Json& j);

Json linmap_to_json(const LinMap& f);
LinMap linmap_from_json(const Json& j);

Json dist_to_json(const Dist& d);
Dist dist_from_json(const Json& j);

Json function_map_to_json(const FunctionMap& f);
FunctionMap function_map_from_json(const Json& j);

// Stochastic matrices travel as CSV, one row per line.
std::string kleisli_to_csv(const KleisliMap& f);
KleisliMap kleisli_from_csv(const std::string& text);

Json map_class_to_json(const MapClass& cls);
Json norm_bound_report_to_json(const NormBoundReport& report);
Json triangle_report_to_json(const TriangleReport& report);
Json stat_functor_report_to_json(const StatFunctorReport& report);
Json emod_check_report_to_json(const EModCheckReport& report);

// Serialises doubles with 17 significant digits so emitted artifacts
// round-trip bit-for-bit; keys come out sorted, output is deterministic.
std::string dump_json(const Json& j);
std::string format_double(double value);

// Filesystem helpers; read failures and malformed content raise ParseError.
Json load_json_file(const std::string& path);
std::string load_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gelfand
