#include "ccm/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace ccm {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(ErrorKind::kParse, "field '" + path + "': " + what);
}

const Json& need(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) bad(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

Int int_from(const Json& v, const std::string& path) {
  if (v.is_number_unsigned()) {
    if (v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      bad(path, "integer out of range");
    return static_cast<std::int64_t>(v.get<std::uint64_t>());
  }
  if (!v.is_number_integer()) bad(path, "expected an integer");
  return v.get<std::int64_t>();
}

Index index_from(const Json& v, const std::string& path) {
  const Int i = int_from(v, path);
  if (i < 0) bad(path, "expected a nonnegative integer");
  return static_cast<Index>(i.value());
}

IntVec vec_from(const Json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array of integers");
  IntVec out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Index>(i)) = int_from(v[i], path + "[" + std::to_string(i) + "]");
  return out;
}

std::vector<IntVec> vecs_from(const Json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array of integer arrays");
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(vec_from(v[i], path + "[" + std::to_string(i) + "]"));
    if (out.back().size() != out.front().size()) bad(path, "rows differ in length");
  }
  return out;
}

std::optional<Int> bound_from(const Json& v, const std::string& path) {
  if (v.is_null()) return std::nullopt;
  return int_from(v, path);
}

Json bound_to_json(const std::optional<Int>& b) { return b ? Json(b->value()) : Json(nullptr); }

FeasibleSet set_from(const Json& o) {
  const std::string p = "oracle";
  const Json& kind_j = need(o, "kind", p);
  if (!kind_j.is_string()) bad("oracle.kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "explicit") {
    auto pts = vecs_from(need(o, "points", p), "oracle.points");
    if (pts.empty()) bad("oracle.points", "needs at least one point");
    return ExplicitSpec{std::move(pts)};
  }
  if (kind == "uniform_matroid")
    return MatroidSpec::uniform(index_from(need(o, "n", p), "oracle.n"), index_from(need(o, "rank", p), "oracle.rank"));
  if (kind == "graphic_matroid") {
    const Index vertices = index_from(need(o, "vertices", p), "oracle.vertices");
    std::vector<std::pair<Index, Index>> edges;
    const auto raw = vecs_from(need(o, "edges", p), "oracle.edges");
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i].size() != 2) bad("oracle.edges[" + std::to_string(i) + "]", "expected [u, v]");
      edges.emplace_back(raw[i](0).value(), raw[i](1).value());
    }
    return MatroidSpec::graphic(vertices, std::move(edges));
  }
  if (kind == "transshipment") {
    TransshipmentSpec t;
    t.vertices = index_from(need(o, "vertices", p), "oracle.vertices");
    const auto raw = vecs_from(need(o, "arcs", p), "oracle.arcs");
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i].size() != 2) bad("oracle.arcs[" + std::to_string(i) + "]", "expected [tail, head]");
      t.arcs.push_back({raw[i](0).value(), raw[i](1).value()});
    }
    t.demand = vec_from(need(o, "demand", p), "oracle.demand");
    t.lower = vec_from(need(o, "lower", p), "oracle.lower");
    t.upper = vec_from(need(o, "upper", p), "oracle.upper");
    return t;
  }
  if (kind == "ilp") {
    IlpSpec s;
    const Json& lower = need(o, "lower", p);
    const Json& upper = need(o, "upper", p);
    if (!lower.is_array()) bad("oracle.lower", "expected an array of integers or nulls");
    if (!upper.is_array()) bad("oracle.upper", "expected an array of integers or nulls");
    for (std::size_t i = 0; i < lower.size(); ++i)
      s.lower.push_back(bound_from(lower[i], "oracle.lower[" + std::to_string(i) + "]"));
    for (std::size_t i = 0; i < upper.size(); ++i)
      s.upper.push_back(bound_from(upper[i], "oracle.upper[" + std::to_string(i) + "]"));
    const Json& A = need(o, "A", p);
    s.A = (A.is_array() && A.empty()) ? IntMatrix(0, static_cast<Index>(s.lower.size())) : matrix_from_json(A, "oracle.A");
    s.b = vec_from(need(o, "b", p), "oracle.b");
    return s;
  }
  if (kind == "tables") {
    TablesSpec t;
    t.l = index_from(need(o, "l", p), "oracle.l");
    t.m = index_from(need(o, "m", p), "oracle.m");
    t.n = index_from(need(o, "n", p), "oracle.n");
    t.a = matrix_from_json(need(o, "a", p), "oracle.a");
    t.b = matrix_from_json(need(o, "b", p), "oracle.b");
    t.c = matrix_from_json(need(o, "c", p), "oracle.c");
    return t;
  }
  if (kind == "partition") {
    PartitionSpec s;
    s.players = index_from(need(o, "players", p), "oracle.players");
    s.items = index_from(need(o, "items", p), "oracle.items");
    s.sizes = vec_from(need(o, "sizes", p), "oracle.sizes");
    return s;
  }
  bad("oracle.kind", "unknown kind '" + kind + "'");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Json set_to_json(const FeasibleSet& set) {
  Json o;
  o["kind"] = kind_name(set);
  std::visit(Overloaded{
                 [&](const ExplicitSpec& e) { o["points"] = to_json(e.points); },
                 [&](const MatroidSpec& m) {
                   if (m.kind == MatroidSpec::Kind::kUniform) {
                     o["n"] = m.n;
                     o["rank"] = m.rank;
                   } else if (m.kind == MatroidSpec::Kind::kGraphic) {
                     o["vertices"] = m.vertices;
                     Json edges = Json::array();
                     for (const auto& [a, b] : m.edges) edges.push_back({a, b});
                     o["edges"] = edges;
                   } else {
                     fail(ErrorKind::kInvalidArgument, "a custom matroid has no file form");
                   }
                 },
                 [&](const TransshipmentSpec& t) {
                   o["vertices"] = t.vertices;
                   Json arcs = Json::array();
                   for (const auto& a : t.arcs) arcs.push_back({a.tail, a.head});
                   o["arcs"] = arcs;
                   o["demand"] = to_json(t.demand);
                   o["lower"] = to_json(t.lower);
                   o["upper"] = to_json(t.upper);
                 },
                 [&](const IlpSpec& s) {
                   o["A"] = to_json(s.A);
                   o["b"] = to_json(s.b);
                   Json lo = Json::array(), hi = Json::array();
                   for (const auto& b : s.lower) lo.push_back(bound_to_json(b));
                   for (const auto& b : s.upper) hi.push_back(bound_to_json(b));
                   o["lower"] = lo;
                   o["upper"] = hi;
                 },
                 [&](const TablesSpec& t) {
                   o["l"] = t.l;
                   o["m"] = t.m;
                   o["n"] = t.n;
                   o["a"] = to_json(t.a);
                   o["b"] = to_json(t.b);
                   o["c"] = to_json(t.c);
                 },
                 [&](const PartitionSpec& s) {
                   o["players"] = s.players;
                   o["items"] = s.items;
                   o["sizes"] = to_json(s.sizes);
                 },
             },
             set);
  return o;
}

bool scalar_array(const Json& j) {
  for (const auto& e : j)
    if (e.is_array() || e.is_object()) return false;
  return true;
}

void dump_into(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      dump_into(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty() && !scalar_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      dump_into(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    out += j.dump(-1, ' ', false, Json::error_handler_t::strict);
  }
}

Json stats_json(const ProjectionConfig& cfg, const ProjectionResult& r, const RunStats& stats) {
  Json s;
  s["edge_bound"] = cfg.edge_bound.value();
  s["mode"] = to_string(r.mode_used);
  s["directions"] = r.directions;
  s["chambers"] = r.chambers;
  s["oracle_queries"] = r.queries;
  s["candidates"] = r.candidates.size();
  if (stats.wall_ms) s["wall_ms"] = *stats.wall_ms;
  return s;
}

}  // namespace

Json to_json(const IntVec& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i).value());
  return a;
}

Json to_json(const std::vector<IntVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Json to_json(const IntMatrix& M) {
  Json a = Json::array();
  for (Index i = 0; i < M.rows(); ++i) a.push_back(to_json(IntVec(M.row(i).transpose())));
  return a;
}

IntMatrix matrix_from_json(const Json& j, const std::string& field) {
  const auto rows = vecs_from(j, field);
  if (rows.empty() || rows.front().size() == 0) bad(field, "expected a nonempty matrix");
  IntMatrix M(static_cast<Index>(rows.size()), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) M.row(static_cast<Index>(i)) = rows[i].transpose();
  return M;
}

ConvexObjective objective_from_json(const Json& j, Index d) {
  const std::string p = "objective";
  const Json& kind_j = need(j, "kind", p);
  if (!kind_j.is_string()) bad("objective.kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();
  auto check = [&](const IntVec& v, const std::string& field) {
    if (v.size() != d) bad(field, "expected " + std::to_string(d) + " entries, one per row of W");
    return v;
  };
  if (kind == "linear") return ConvexObjective::linear(check(vec_from(need(j, "c", p), "objective.c"), "objective.c"));
  if (kind == "squared_euclidean")
    return ConvexObjective::squared_euclidean(
        check(vec_from(need(j, "center", p), "objective.center"), "objective.center"));
  if (kind == "max_of_linear") {
    auto c = vecs_from(need(j, "c", p), "objective.c");
    if (c.empty()) bad("objective.c", "needs at least one vector");
    for (const auto& v : c) check(v, "objective.c");
    std::vector<Int> offsets(c.size(), Int(0));
    if (j.contains("offsets")) {
      const IntVec o = vec_from(j["offsets"], "objective.offsets");
      if (o.size() != static_cast<Index>(c.size())) bad("objective.offsets", "one offset per vector");
      for (Index i = 0; i < o.size(); ++i) offsets[static_cast<std::size_t>(i)] = o(i);
    }
    return ConvexObjective::max_of_linear(std::move(c), std::move(offsets));
  }
  if (kind == "weighted_p_norm") {
    const Json& pj = need(j, "p", p);
    int pv = 0;
    if (pj.is_string() && pj.get<std::string>() == "inf") {
      pv = 0;
    } else {
      const Int v = int_from(pj, "objective.p");
      if (v != 1 && v != 2) bad("objective.p", "expected 1, 2 or \"inf\"");
      pv = static_cast<int>(v.value());
    }
    const IntVec w = check(vec_from(need(j, "weights", p), "objective.weights"), "objective.weights");
    for (Index i = 0; i < w.size(); ++i)
      if (w(i) < 0) bad("objective.weights", "weights must be nonnegative");
    return ConvexObjective::weighted_p_norm(pv, w);
  }
  bad("objective.kind", "unknown kind '" + kind + "'");
}

Json objective_to_json(const ConvexObjective& f) {
  Json o;
  switch (f.kind()) {
    case ConvexObjective::Kind::kLinear:
      o["kind"] = "linear";
      o["c"] = to_json(f.vectors().front());
      break;
    case ConvexObjective::Kind::kMaxOfLinear: {
      o["kind"] = "max_of_linear";
      o["c"] = to_json(f.vectors());
      Json off = Json::array();
      for (const auto& v : f.offsets()) off.push_back(v.value());
      o["offsets"] = off;
      break;
    }
    case ConvexObjective::Kind::kSquaredEuclidean:
      o["kind"] = "squared_euclidean";
      o["center"] = to_json(f.vectors().front());
      break;
    case ConvexObjective::Kind::kWeightedPNorm:
      o["kind"] = "weighted_p_norm";
      o["p"] = f.p() == 0 ? Json("inf") : Json(f.p());
      o["weights"] = to_json(f.vectors().front());
      break;
  }
  return o;
}

InstanceFile instance_from_json(const Json& j) {
  if (!j.is_object()) bad("", "an instance file is a JSON object");
  InstanceFile file;
  Instance& inst = file.instance;
  inst.name = "instance";
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("name", "expected a string");
    inst.name = j["name"].get<std::string>();
  }
  inst.set = set_from(need(j, "oracle", ""));
  validate_set(inst.set);
  inst.W = matrix_from_json(need(j, "W", ""), "W");
  if (inst.W.cols() != ambient_dimension(inst.set))
    fail(ErrorKind::kDimensionMismatch, "field 'W': has " + std::to_string(inst.W.cols()) +
                                            " columns but the oracle works in dimension " +
                                            std::to_string(ambient_dimension(inst.set)));
  const Int e = int_from(need(j, "edge_bound", ""), "edge_bound");
  if (e < 0) bad("edge_bound", "must be nonnegative");
  inst.edge_bound = e;
  if (j.contains("edge_generators")) {
    inst.edge_generators = vecs_from(j["edge_generators"], "edge_generators");
    for (const auto& g : *inst.edge_generators)
      if (g.size() != inst.W.cols()) bad("edge_generators", "generators must have one entry per column of W");
  }
  if (j.contains("expected")) {
    const Json& x = j["expected"];
    if (!x.is_object()) bad("expected", "expected an object");
    if (x.contains("vertices")) inst.expected_vertices = vecs_from(x["vertices"], "expected.vertices");
    if (x.contains("count")) inst.expected_count = index_from(x["count"], "expected.count");
    if (x.contains("note")) {
      if (!x["note"].is_string()) bad("expected.note", "expected a string");
      inst.note = x["note"].get<std::string>();
    }
  }
  if (j.contains("witnesses")) inst.witnesses = vecs_from(j["witnesses"], "witnesses");
  if (j.contains("objective") && !j["objective"].is_null())
    file.objective = objective_from_json(j["objective"], inst.W.rows());
  return file;
}

Json instance_to_json(const Instance& instance, const std::optional<ConvexObjective>& objective) {
  Json j;
  j["name"] = instance.name;
  j["oracle"] = set_to_json(instance.set);
  j["W"] = to_json(instance.W);
  j["edge_bound"] = instance.edge_bound.value();
  if (instance.edge_generators) j["edge_generators"] = to_json(*instance.edge_generators);
  if (instance.expected_vertices || instance.expected_count || !instance.note.empty()) {
    Json x;
    if (instance.expected_vertices) x["vertices"] = to_json(*instance.expected_vertices);
    if (instance.expected_count) x["count"] = *instance.expected_count;
    if (!instance.note.empty()) x["note"] = instance.note;
    j["expected"] = x;
  }
  if (!instance.witnesses.empty()) j["witnesses"] = to_json(instance.witnesses);
  if (objective) j["objective"] = objective_to_json(*objective);
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::kParse, std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kParse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string canonical_dump(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  out += "\n";
  return out;
}

Json projection_to_json(const Instance& instance, const ProjectionConfig& cfg, const ProjectionResult& r,
                        const RunStats& stats) {
  Json j;
  j["instance"] = instance.name;
  j["vertices"] = to_json(r.V);
  Json pre = Json::array(), wit = Json::array();
  for (const auto& c : r.certificates) {
    pre.push_back(to_json(c.x));
    wit.push_back(to_json(c.h));
  }
  j["preimages"] = pre;
  j["witnesses"] = wit;
  j["stats"] = stats_json(cfg, r, stats);
  return j;
}

Json maximize_to_json(const Instance& instance, const ProjectionConfig& cfg, const ConvexObjective& f,
                      const MaximizeResult& m, const RunStats& stats) {
  Json j = projection_to_json(instance, cfg, m.projection, stats);
  Json opt;
  opt["x"] = to_json(m.x);
  opt["y"] = to_json(m.y);
  const auto v = f.value(m.y);
  opt["value_rational"] = v ? Json(to_fraction_string(*v)) : Json(nullptr);
  opt["value"] = f.value_string(m.y);
  Json out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "stats") {
      out["objective"] = objective_to_json(f);
      out["optimal"] = opt;
    }
    out[it.key()] = it.value();
  }
  return out;
}

Json verify_to_json(const Instance& instance, const VerifyReport& r) {
  Json j;
  j["instance"] = instance.name;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["bound"] = r.bound_verified ? "VERIFIED" : "UNVERIFIED_BOUND";
  j["edge_bound"] = r.edge_bound.value();
  j["certified_bound"] = r.certified_bound.value();
  j["exact_edge_complexity"] = r.exact_edge_complexity ? Json(r.exact_edge_complexity->value()) : Json(nullptr);
  j["points"] = r.points;
  j["vertices"] = to_json(r.projected);
  j["reference"] = to_json(r.reference);
  j["missing"] = to_json(r.missing);
  j["extra"] = to_json(r.extra);
  Json s;
  s["chambers"] = r.projection.chambers;
  s["oracle_queries"] = r.projection.queries;
  s["mode"] = to_string(r.projection.mode_used);
  j["stats"] = s;
  return j;
}

}  // namespace ccm
