#include "logcy/pair_io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace logcy {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& why) { throw ParseError(where + ": " + why); }

void only_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(where, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : obj.items())
    if (!ok.count(k)) fail(where, "unknown field \"" + k + "\"");
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

long long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long long>();
}

int index(const Json& j, const std::string& where) {
  long long x = integer(j, where);
  if (x < 0 || x > 1'000'000) fail(where, "index out of range");
  return static_cast<int>(x);
}

BigInt big_integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    BigInt x;
    if (x.set_str(j.get<std::string>(), 10) != 0) fail(where, "bad integer \"" + j.get<std::string>() + "\"");
    return x;
  }
  fail(where, "expected an integer");
}

GaussianRational coordinate(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "coordinates are exact strings such as \"3/2\" or \"1-2*i\"");
  try {
    return GaussianRational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

Edge edge(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected a pair of ray indices");
  return {index(j[0], where + "[0]"), index(j[1], where + "[1]")};
}

void header(const Json& doc, const char* format, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object");
  const Json& f = field(doc, "format", where);
  if (!f.is_string() || f.get<std::string>() != format) fail(where + ".format", std::string("expected \"") + format + "\"");
  if (integer(field(doc, "version", where), where + ".version") != 1) fail(where + ".version", "unsupported version");
}

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

CurveClass curve_class(const Json& j, const std::string& where) {
  only_keys(j, where, {"boundary", "exceptional"});
  CurveClass c;
  if (auto it = j.find("boundary"); it != j.end()) {
    const Json& b = array(*it, where + ".boundary");
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_array() || b[i].size() != 2) fail(at(where + ".boundary", i), "expected [neighbour, coefficient]");
      c.boundary.emplace_back(index(b[i][0], at(where + ".boundary", i)), big_integer(b[i][1], at(where + ".boundary", i)));
    }
  }
  if (auto it = j.find("exceptional"); it != j.end()) {
    const Json& e = array(*it, where + ".exceptional");
    for (std::size_t i = 0; i < e.size(); ++i) {
      const std::string w = at(where + ".exceptional", i);
      if (!e[i].is_array() || e[i].size() != 3) fail(w, "expected [step, index, coefficient]");
      c.exceptional.emplace_back(index(e[i][0], w), index(e[i][1], w), big_integer(e[i][2], w));
    }
  }
  return c;
}

BlowupStep blowup(const Json& j, const std::string& where) {
  const Json& kind = field(j, "kind", where);
  if (!kind.is_string()) fail(where + ".kind", "expected \"point\" or \"curve\"");
  if (kind.get<std::string>() == "point") {
    only_keys(j, where, {"kind", "edge", "coord"});
    return PointBlowup{edge(field(j, "edge", where), where + ".edge"),
                       coordinate(field(j, "coord", where), where + ".coord")};
  }
  if (kind.get<std::string>() == "curve") {
    only_keys(j, where, {"kind", "component", "class", "points"});
    CurveBlowup c;
    c.component = index(field(j, "component", where), where + ".component");
    c.cls = curve_class(field(j, "class", where), where + ".class");
    const Json& pts = array(field(j, "points", where), where + ".points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::string w = at(where + ".points", i);
      only_keys(pts[i], w, {"neighbour", "coords"});
      CurvePoints cp;
      cp.neighbour = index(field(pts[i], "neighbour", w), w + ".neighbour");
      const Json& cs = array(field(pts[i], "coords", w), w + ".coords");
      for (std::size_t k = 0; k < cs.size(); ++k) cp.coords.push_back(coordinate(cs[k], at(w + ".coords", k)));
      c.points.push_back(std::move(cp));
    }
    return c;
  }
  fail(where + ".kind", "expected \"point\" or \"curve\"");
}

Json edge_json(const Edge& e) { return Json::array({e.tail, e.head}); }

std::string big(const BigInt& x) { return x.get_str(); }

}  // namespace

std::vector<std::pair<Edge, GaussianRational>> parse_markings(const Json& list, const std::string& where) {
  std::vector<std::pair<Edge, GaussianRational>> out;
  const Json& a = array(list, where);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string w = at(where, i);
    only_keys(a[i], w, {"edge", "coord"});
    out.emplace_back(edge(field(a[i], "edge", w), w + ".edge"), coordinate(field(a[i], "coord", w), w + ".coord"));
  }
  return out;
}

PairData parse_pair(const Json& doc) {
  const std::string root = "pair";
  header(doc, "logcy3-pair", root);
  only_keys(doc, root, {"format", "version", "lattice_rank", "rays", "cones", "orientation", "edge_orientations",
                        "blowups", "markings"});
  if (integer(field(doc, "lattice_rank", root), "pair.lattice_rank") != 3) fail("pair.lattice_rank", "only rank 3 is supported");
  PairData d;
  const Json& rays = array(field(doc, "rays", root), "pair.rays");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string w = at("pair.rays", i);
    if (!rays[i].is_array() || rays[i].size() != 3) fail(w, "expected an integer triple");
    d.fan.rays.push_back({integer(rays[i][0], w), integer(rays[i][1], w), integer(rays[i][2], w)});
  }
  const Json& cones = array(field(doc, "cones", root), "pair.cones");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string w = at("pair.cones", i);
    if (!cones[i].is_array() || cones[i].size() != 3) fail(w, "expected a triple of ray indices");
    d.fan.cones.push_back({index(cones[i][0], w), index(cones[i][1], w), index(cones[i][2], w)});
  }
  if (auto it = doc.find("orientation"); it != doc.end()) {
    only_keys(*it, "pair.orientation", {"cone", "sign"});
    d.fan.orientation.reference_cone = index(field(*it, "cone", "pair.orientation"), "pair.orientation.cone");
    d.fan.orientation.sign = static_cast<int>(integer(field(*it, "sign", "pair.orientation"), "pair.orientation.sign"));
  }
  if (auto it = doc.find("edge_orientations"); it != doc.end()) {
    const Json& eo = array(*it, "pair.edge_orientations");
    for (std::size_t i = 0; i < eo.size(); ++i) d.edge_orientations.push_back(edge(eo[i], at("pair.edge_orientations", i)));
  }
  if (auto it = doc.find("blowups"); it != doc.end()) {
    const Json& b = array(*it, "pair.blowups");
    for (std::size_t i = 0; i < b.size(); ++i) d.program.push_back(blowup(b[i], at("pair.blowups", i)));
  }
  if (auto it = doc.find("markings"); it != doc.end()) d.markings = parse_markings(*it, "pair.markings");
  return d;
}

Json pair_to_json(const PairData& d) {
  Json doc;
  doc["format"] = "logcy3-pair";
  doc["version"] = 1;
  doc["lattice_rank"] = 3;
  doc["rays"] = Json::array();
  for (const auto& r : d.fan.rays) doc["rays"].push_back({r[0], r[1], r[2]});
  doc["cones"] = Json::array();
  for (const auto& c : d.fan.cones) doc["cones"].push_back({c[0], c[1], c[2]});
  doc["orientation"] = {{"cone", d.fan.orientation.reference_cone}, {"sign", d.fan.orientation.sign}};
  if (!d.edge_orientations.empty()) {
    doc["edge_orientations"] = Json::array();
    for (const auto& e : d.edge_orientations) doc["edge_orientations"].push_back(edge_json(e));
  }
  doc["blowups"] = Json::array();
  for (const auto& s : d.program) {
    if (const auto* pb = std::get_if<PointBlowup>(&s)) {
      doc["blowups"].push_back({{"kind", "point"}, {"edge", edge_json(pb->edge)}, {"coord", pb->coord.to_string()}});
      continue;
    }
    const auto& cb = std::get<CurveBlowup>(s);
    Json cls = Json::object();
    if (!cb.cls.boundary.empty()) {
      cls["boundary"] = Json::array();
      for (const auto& [w, c] : cb.cls.boundary) cls["boundary"].push_back({w, big(c)});
    }
    if (!cb.cls.exceptional.empty()) {
      cls["exceptional"] = Json::array();
      for (const auto& [st, i, c] : cb.cls.exceptional) cls["exceptional"].push_back({st, i, big(c)});
    }
    Json pts = Json::array();
    for (const auto& cp : cb.points) {
      Json cs = Json::array();
      for (const auto& z : cp.coords) cs.push_back(z.to_string());
      pts.push_back({{"neighbour", cp.neighbour}, {"coords", cs}});
    }
    doc["blowups"].push_back({{"kind", "curve"}, {"component", cb.component}, {"class", cls}, {"points", pts}});
  }
  if (!d.markings.empty()) {
    doc["markings"] = Json::array();
    for (const auto& [e, z] : d.markings) doc["markings"].push_back({{"edge", edge_json(e)}, {"coord", z.to_string()}});
  }
  return doc;
}

IntMatrix matrix_from_json(const Json& j, const std::string& where) {
  const Json& rows = array(j, where);
  std::vector<IntVector> r;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Json& row = array(rows[i], at(where, i));
    if (row.size() != cols) fail(at(where, i), "rows of unequal length");
    IntVector v;
    for (std::size_t k = 0; k < row.size(); ++k) v.push_back(big_integer(row[k], at(at(where, i), k)));
    r.push_back(std::move(v));
  }
  return IntMatrix::from_rows(r, cols);
}

Correspondence parse_correspondence(const Json& doc) {
  const std::string root = "correspondence";
  header(doc, "logcy3-correspondence", root);
  only_keys(doc, root, {"format", "version", "vertices", "steps", "exceptional_order", "mu", "mu_components"});
  Correspondence c;
  const Json& v = array(field(doc, "vertices", root), root + ".vertices");
  for (std::size_t i = 0; i < v.size(); ++i) c.vertex_map.push_back(index(v[i], at(root + ".vertices", i)));
  if (auto it = doc.find("steps"); it != doc.end()) {
    const Json& s = array(*it, root + ".steps");
    for (std::size_t i = 0; i < s.size(); ++i) c.step_map.push_back(index(s[i], at(root + ".steps", i)));
  }
  if (auto it = doc.find("exceptional_order"); it != doc.end()) {
    const Json& e = array(*it, root + ".exceptional_order");
    for (std::size_t i = 0; i < e.size(); ++i) {
      const std::string w = at(root + ".exceptional_order", i);
      only_keys(e[i], w, {"step", "component", "order"});
      std::vector<int> order;
      const Json& o = array(field(e[i], "order", w), w + ".order");
      for (std::size_t k = 0; k < o.size(); ++k) order.push_back(index(o[k], at(w + ".order", k)));
      c.exceptional_order[{index(field(e[i], "step", w), w + ".step"), index(field(e[i], "component", w), w + ".component")}] =
          std::move(order);
    }
  }
  if (auto it = doc.find("mu"); it != doc.end()) c.mu = matrix_from_json(*it, root + ".mu");
  if (auto it = doc.find("mu_components"); it != doc.end()) {
    const Json& m = array(*it, root + ".mu_components");
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::string w = at(root + ".mu_components", i);
      only_keys(m[i], w, {"component", "matrix"});
      c.mu_components[index(field(m[i], "component", w), w + ".component")] =
          matrix_from_json(field(m[i], "matrix", w), w + ".matrix");
    }
  }
  return c;
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(big(x));
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json correspondence_to_json(const Correspondence& c) {
  Json doc;
  doc["format"] = "logcy3-correspondence";
  doc["version"] = 1;
  doc["vertices"] = c.vertex_map;
  if (!c.step_map.empty()) doc["steps"] = c.step_map;
  if (!c.exceptional_order.empty()) {
    doc["exceptional_order"] = Json::array();
    for (const auto& [key, order] : c.exceptional_order)
      doc["exceptional_order"].push_back({{"step", key.first}, {"component", key.second}, {"order", order}});
  }
  if (c.mu) doc["mu"] = to_json(*c.mu);
  if (!c.mu_components.empty()) {
    doc["mu_components"] = Json::array();
    for (const auto& [v, m] : c.mu_components) doc["mu_components"].push_back({{"component", v}, {"matrix", to_json(m)}});
  }
  return doc;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string fnv1a_digest(const std::vector<std::string>& inputs) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& s : inputs)
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace logcy
