#pragma once

#include "fano/classify.hpp"
#include "fano/invariants.hpp"
#include "fano/laurent.hpp"
#include "fano/mutation.hpp"

#include "json.hpp"

#include <string>

namespace fano {

using Json = nlohmann::ordered_json;

// Integers that fit in int64 are JSON numbers, larger ones strings.
Json integer_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json point_json(const LatticePoint& p);
Json polygon_json(const Polygon& p);  // {"vertices": [[x,y], ...]}
Polygon polygon_from_json(const Json& j);
Polygon read_polygon_file(const std::string& path);

Json singularity_content_json(const SingularityContent& sc);
Json rational_function_json(const RationalFunction1& f);
Json edge_json(const EdgeData& e);
Json analyze_json(const Polygon& p, std::size_t series_order = 8);
Json trace_json(const MutationTrace& t);
Json minimize_json(const Polygon& input, const MinimizeResult& r);
Json period_json(const PeriodPrefix& p);

Json run_json(const ClassificationRun& run);
ClassificationRun run_from_json(const Json& j);

// Columns #, vertices, n, one column per basket type, degree.
std::string table_csv(const ClassificationRun& run, const BasketSpec& spec);
Json table_json(const ClassificationRun& run, const BasketSpec& spec);

// Lattice dots, filled polygon, ringed origin; window fitted with a 0.3 margin.
std::string render_svg(const Polygon& p);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fano
