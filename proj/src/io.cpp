#include "fano/io.hpp"

#include "fano/error.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace fano {

Json integer_json(const Integer& v) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min(), hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos || s.find('-', 1) != std::string::npos)
      throw Error(ErrorKind::ParseError, "not an integer: " + s);
    return Integer(s);
  }
  throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

Json point_json(const LatticePoint& p) { return Json::array({integer_json(p.x), integer_json(p.y)}); }

Json polygon_json(const Polygon& p) {
  Json v = Json::array();
  for (const auto& q : p.vertices()) v.push_back(point_json(q));
  return Json{{"vertices", v}};
}

Polygon polygon_from_json(const Json& j) {
  const Json& v = j.is_object() ? j.at("vertices") : j;
  if (!v.is_array()) throw Error(ErrorKind::ParseError, "vertices must be an array");
  std::vector<LatticePoint> pts;
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "vertex must be [x, y]");
    pts.push_back({integer_from_json(e[0]), integer_from_json(e[1])});
  }
  return convex_hull(pts);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ConfigError, "cannot write " + path);
  out << text;
}

Polygon read_polygon_file(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return polygon_from_json(j);
}

Json singularity_content_json(const SingularityContent& sc) {
  Json basket = Json::array();
  for (const auto& s : sc.sorted_basket()) basket.push_back(s.str());
  return Json{{"n", integer_json(sc.n)}, {"basket", basket}};
}

Json rational_function_json(const RationalFunction1& f) {
  Json num = Json::array();
  for (const auto& c : f.numerator().coeffs()) num.push_back(to_string(c));
  Json den = Json::array();
  for (const auto& [d, e] : f.denominator()) den.push_back(Json::array({d, e}));
  return Json{{"numerator", num}, {"denominator", den}, {"text", f.str()}};
}

Json edge_json(const EdgeData& e) {
  auto ec = edge_singularity_content(e);
  return Json{{"from", point_json(e.from)},
              {"to", point_json(e.to)},
              {"normal", Json::array({integer_json(e.inner_normal.u), integer_json(e.inner_normal.v)})},
              {"height", integer_json(e.height)},
              {"length", integer_json(e.length)},
              {"cone", cone_singularity(e).str()},
              {"t_count", integer_json(ec.n)},
              {"residue", ec.residue ? Json(ec.residue->str()) : Json(nullptr)}};
}

Json analyze_json(const Polygon& p, std::size_t series_order) {
  auto sc = singularity_content(p);
  auto hs = hilbert_series(p, series_order);
  Json series = Json::array();
  for (const auto& c : hs.series) series.push_back(to_string(c));
  Json edge_list = Json::array();
  for (const auto& e : edges(p)) edge_list.push_back(edge_json(e));
  Json special = Json::array();
  for (const auto& e : special_facets(p)) special.push_back(Json::array({point_json(e.from), point_json(e.to)}));
  auto w = minimality_witnesses(p);
  Json hilbert = rational_function_json(hs.function);
  hilbert["series"] = series;
  return Json{{"polygon", polygon_json(p)["vertices"]},
              {"normal_form", polygon_json(normal_form(p))["vertices"]},
              {"sc", singularity_content_json(sc)},
              {"degree", to_string(anticanonical_degree(p))},
              {"hilbert", hilbert},
              {"boundary_points", integer_json(boundary_count(p))},
              {"interior_points", integer_json(interior_count(p))},
              {"area2", integer_json(area2(p))},
              {"max_local_index", integer_json(max_local_index(p))},
              {"edges", edge_list},
              {"special_facets", special},
              {"minimal", is_minimal(p)},
              {"witnesses",
               {{"boundary", w.by_boundary},
                {"interior", w.by_interior},
                {"volume", w.by_volume},
                {"edge_condition", w.by_edge_condition}}}};
}

Json trace_json(const MutationTrace& t) {
  Json slices = Json::array();
  for (const auto& [h, s] : t.slices) {
    Json row{{"h", integer_json(h)}, {"slice", Json::array({integer_json(s.lo), integer_json(s.hi)})}};
    row["result"] = s.empty_after ? Json(nullptr) : Json::array({integer_json(s.new_lo), integer_json(s.new_hi)});
    slices.push_back(row);
  }
  const auto& w = t.spec.edge.inner_normal;
  return Json{{"source", polygon_json(t.source)["vertices"]},
              {"edge", Json::array({point_json(t.spec.edge.from), point_json(t.spec.edge.to)})},
              {"omega", Json::array({integer_json(w.u), integer_json(w.v)})},
              {"factor", point_json(t.spec.factor)},
              {"level_one", point_json(t.level_one)},
              {"mutated", polygon_json(t.raw_target)["vertices"]},
              {"target", polygon_json(t.target)["vertices"]},
              {"slices", slices}};
}

Json minimize_json(const Polygon& input, const MinimizeResult& r) {
  Json path = Json::array();
  for (const auto& t : r.path) path.push_back(trace_json(t));
  return Json{{"input", polygon_json(input)["vertices"]},
              {"minimal", polygon_json(r.minimal)["vertices"]},
              {"normal_form", polygon_json(normal_form(r.minimal))["vertices"]},
              {"boundary_points", integer_json(boundary_count(r.minimal))},
              {"path", path}};
}

Json period_json(const PeriodPrefix& p) {
  Json values = Json::array();
  for (std::size_t n = 0; n < p.values.size(); ++n) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.values[n].terms()) {
      Json mono = Json::object();
      for (const auto& [name, e] : m) mono[name] = e;
      terms.push_back(Json{{"monomial", mono}, {"coefficient", to_string(c)}});
    }
    values.push_back(Json{{"n", n}, {"value", p.values[n].str()}, {"terms", terms}});
  }
  Json params = Json::array();
  for (const auto& s : p.parameters()) params.push_back(s);
  return Json{{"parameters", params}, {"periods", values}};
}

// ---------------------------------------------------------------- runs

namespace {

Json polygon_list(const std::vector<Polygon>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(polygon_json(p)["vertices"]);
  return out;
}

std::vector<Polygon> polygon_list_from(const Json& j) {
  std::vector<Polygon> out;
  for (const auto& v : j) out.push_back(polygon_from_json(v));
  return out;
}

}  // namespace

Json run_json(const ClassificationRun& run) {
  Json bounds{{"n_max", run.bounds.n_max ? integer_json(*run.bounds.n_max) : Json(nullptr)},
              {"mult_max", run.bounds.mult_max},
              {"region_expand", run.bounds.region_expand},
              {"t_height_max", run.bounds.t_height_max ? Json(*run.bounds.t_height_max) : Json(nullptr)}};
  Json budget{{"boundary_factor", run.budget.boundary_factor}, {"max_depth", run.budget.max_depth}};
  Json inputs = Json::array();
  for (const auto& r : run.inputs)
    inputs.push_back(Json{{"basket", r.basket},
                          {"l", r.input.l},
                          {"a", r.input.a},
                          {"b", r.input.b},
                          {"nodes", r.nodes},
                          {"outputs", polygon_list(r.outputs)}});
  Json rows = Json::array();
  for (const auto& row : run.rows)
    rows.push_back(Json{{"index", row.index},
                        {"vertices", polygon_json(row.representative)["vertices"]},
                        {"n", integer_json(row.n)},
                        {"multiplicities", row.multiplicities},
                        {"degree", to_string(row.degree)},
                        {"members", polygon_list(row.members)}});
  Json seps = Json::array();
  for (const auto& s : run.separations)
    seps.push_back(Json{{"rows", Json::array({s.class_a + 1, s.class_b + 1})},
                        {"kind", to_string(s.kind)},
                        {"detail", s.detail}});
  return Json{{"basket", run.basket_spec},
              {"config_hash", run.config_hash},
              {"bounds", bounds},
              {"budget", budget},
              {"complete", run.complete},
              {"disclaimer", run.disclaimer},
              {"inputs", inputs},
              {"outputs", polygon_list(run.outputs)},
              {"classes", rows},
              {"separations", seps}};
}

ClassificationRun run_from_json(const Json& j) {
  try {
    ClassificationRun run;
    run.basket_spec = j.at("basket").get<std::string>();
    run.config_hash = j.at("config_hash").get<std::string>();
    const auto& b = j.at("bounds");
    if (!b.at("n_max").is_null()) run.bounds.n_max = integer_from_json(b.at("n_max"));
    run.bounds.mult_max = b.at("mult_max").get<unsigned>();
    run.bounds.region_expand = b.at("region_expand").get<std::int64_t>();
    if (!b.at("t_height_max").is_null()) run.bounds.t_height_max = b.at("t_height_max").get<std::int64_t>();
    run.budget.boundary_factor = j.at("budget").at("boundary_factor").get<unsigned>();
    run.budget.max_depth = j.at("budget").at("max_depth").get<unsigned>();
    run.complete = false;  // rows are recomputed on completion
    run.disclaimer = j.at("disclaimer").get<std::string>();
    for (const auto& r : j.at("inputs")) {
      InputRecord rec{r.at("basket").get<std::string>(),
                      {r.at("l").get<std::int64_t>(), r.at("a").get<std::int64_t>(), r.at("b").get<std::int64_t>()},
                      polygon_list_from(r.at("outputs")),
                      r.at("nodes").get<std::uint64_t>()};
      run.inputs.push_back(std::move(rec));
    }
    return run;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed run file: ") + e.what());
  }
}

std::string table_csv(const ClassificationRun& run, const BasketSpec& spec) {
  std::ostringstream out;
  out << "#,vertices,n";
  if (spec.types.size() == 1) {
    out << ",m";
  } else {
    for (std::size_t i = 0; i < spec.types.size(); ++i) out << ",m" << i + 1;
  }
  out << ",degree\n";
  for (const auto& row : run.rows) {
    std::string verts;
    for (const auto& v : row.representative.vertices()) verts += (verts.empty() ? "" : " ") + v.str();
    out << row.index << ",\"" << verts << "\"," << row.n;
    for (auto m : row.multiplicities) out << "," << m;
    out << "," << to_string(row.degree) << "\n";
  }
  return out.str();
}

Json table_json(const ClassificationRun& run, const BasketSpec& spec) {
  Json types = Json::array();
  for (const auto& t : spec.types) types.push_back(t.str());
  Json rows = Json::array();
  for (const auto& row : run.rows)
    rows.push_back(Json{{"#", row.index},
                        {"vertices", polygon_json(row.representative)["vertices"]},
                        {"n", integer_json(row.n)},
                        {"multiplicities", row.multiplicities},
                        {"degree", to_string(row.degree)}});
  return Json{{"basket", run.basket_spec}, {"types", types}, {"rows", rows}};
}

// ---------------------------------------------------------------- SVG

std::string render_svg(const Polygon& p) {
  const auto& v = p.vertices();
  std::int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto& q : v) {
    std::int64_t x = to_int64(q.x), y = to_int64(q.y);
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (xmax - xmin > 400 || ymax - ymin > 400) throw Error(ErrorKind::OutOfRange, "polygon too large to render");
  const int unit = 40;
  const double margin = 0.3;
  auto px = [&](double x) { return (x - xmin + margin) * unit; };
  auto py = [&](double y) { return (ymax - y + margin) * unit; };
  const double width = (xmax - xmin + 2 * margin) * unit, height = (ymax - ymin + 2 * margin) * unit;

  std::ostringstream out;
  out << std::fixed << std::setprecision(1);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
      << width << " " << height << "\">\n";
  out << "  <polygon points=\"";
  for (std::size_t i = 0; i < v.size(); ++i)
    out << (i ? " " : "") << px(to_int64(v[i].x)) << "," << py(to_int64(v[i].y));
  out << "\" fill=\"#7fd4ff\" stroke=\"#1f4fbf\" stroke-width=\"2.0\"/>\n";
  for (std::int64_t y = ymax; y >= ymin; --y)
    for (std::int64_t x = xmin; x <= xmax; ++x)
      out << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3.0\" fill=\"#000000\"/>\n";
  out << "  <circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"9.0\" fill=\"none\" stroke=\"#000000\" "
      << "stroke-width=\"1.5\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace fano
