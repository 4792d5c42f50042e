#include "logcy/report.hpp"

#include "logcy/sampling.hpp"

#include <functional>
#include <sstream>

namespace logcy {

namespace {

struct Loaded {
  std::string text;
  PairData data;
};

Loaded load_pair_data(const std::string& path) {
  Loaded l;
  l.text = read_text_file(path);
  Json doc;
  try {
    doc = Json::parse(l.text);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  l.data = parse_pair(doc);
  return l;
}

Json strings(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json vectors(const std::vector<IntVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Json values(const std::vector<GaussianRational>& vs) {
  Json a = Json::array();
  for (const auto& z : vs) a.push_back(z.to_string());
  return a;
}

Json cokernel_json(const CokernelStructure& c) { return {{"free_rank", c.free_rank}, {"torsion", strings(c.torsion)}}; }

IntVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  IntVector v;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError(where + ": integers are strings");
    v.emplace_back(x.get<std::string>());
  }
  return v;
}

// Error reports carry the message and exit 2.
CommandResult guarded(const std::string& command, const std::vector<std::string>& paths,
                      const std::function<CommandResult(std::vector<std::string>&)>& body) {
  std::vector<std::string> texts;
  try {
    return body(texts);
  } catch (const Error& e) {
    std::string kind = dynamic_cast<const ParseError*>(&e) ? "parse-error" : "error";
    Json results = {{"status", kind}, {"message", e.what()}};
    if (texts.empty())
      for (const auto& p : paths) texts.push_back(p);
    return {make_report(command, texts, results), 2};
  }
}

Marking marking_from_file(const LogCY3Pair& p, const std::string& path, std::string& text) {
  text = read_text_file(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("marking: expected an object");
  for (const auto& [k, v] : doc.items())
    if (k != "format" && k != "version" && k != "markings") throw ParseError("marking: unknown field \"" + k + "\"");
  if (doc.value("format", "") != "logcy3-marking") throw ParseError("marking.format: expected \"logcy3-marking\"");
  if (!doc.contains("version") || doc["version"] != 1) throw ParseError("marking.version: unsupported version");
  if (!doc.contains("markings")) throw ParseError("marking: missing field \"markings\"");
  Marking m = marker_marking(p.complex());
  for (const auto& [edge, z] : parse_markings(doc["markings"], "marking.markings")) {
    if (z.is_zero()) throw DomainError("marking: a marking point must lie in C^x");
    m[p.resolve_edge(edge).first] = p.to_edge_chart(edge, z);
  }
  return m;
}

}  // namespace

Json make_report(const std::string& command, const std::vector<std::string>& input_texts, Json results) {
  return {{"format", "logcy3-report"},
          {"version", 1},
          {"command", command},
          {"inputs_digest", fnv1a_digest(input_texts)},
          {"exact", true},
          {"results", std::move(results)}};
}

Json verdict_to_json(const Verdict& v) {
  Json j = {{"kind", to_string(v.kind)}, {"reason", v.reason}, {"transcript", v.transcript}, {"orientation", v.orientation}};
  if (v.fan_map) {
    Json rows = Json::array();
    for (const auto& r : v.fan_map->matrix) rows.push_back({r[0], r[1], r[2]});
    j["fan_map"] = {{"matrix", rows}, {"ray_map", v.fan_map->ray_map}};
  }
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (v.witness_image) j["witness_image"] = to_json(*v.witness_image);
  if (v.value) j["value"] = v.value->to_string();
  if (v.value_prime) j["value_prime"] = v.value_prime->to_string();
  return j;
}

Verdict verdict_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("verdict: expected an object with \"kind\"");
  Verdict v;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "Isomorphic") v.kind = VerdictKind::Isomorphic;
  else if (kind == "Distinct") v.kind = VerdictKind::Distinct;
  else if (kind == "Inconclusive") v.kind = VerdictKind::Inconclusive;
  else throw ParseError("verdict.kind: unknown verdict \"" + kind + "\"");
  v.reason = j.value("reason", "");
  v.orientation = j.value("orientation", 1);
  if (j.contains("witness")) v.witness = vector_from_json(j["witness"], "verdict.witness");
  if (j.contains("witness_image")) v.witness_image = vector_from_json(j["witness_image"], "verdict.witness_image");
  if (j.contains("value")) v.value = GaussianRational::parse(j["value"].get<std::string>());
  if (j.contains("value_prime")) v.value_prime = GaussianRational::parse(j["value_prime"].get<std::string>());
  return v;
}

CommandResult cmd_validate(const std::string& pair_path) {
  std::string text;
  try {
    text = read_text_file(pair_path);
    Loaded l = load_pair_data(pair_path);
    Diagnostic d = validate_pair(l.data);
    if (!d) return {make_report("validate", {text}, {{"status", "diagnostic"}, {"message", d.message}}), 1};
    LogCY3Pair p(l.data);
    Json results = {{"status", "ok"},
                    {"rays", p.toric().ray_count()},
                    {"cones", p.toric().fan().cones.size()},
                    {"steps", p.step_count()},
                    {"picard_rank", p.rank()},
                    {"warnings", p.warnings()}};
    return {make_report("validate", {text}, results), 0};
  } catch (const ParseError& e) {
    return {make_report("validate", {text}, {{"status", "parse-error"}, {"message", e.what()}}), 2};
  } catch (const Error& e) {
    return {make_report("validate", {text}, {{"status", "diagnostic"}, {"message", e.what()}}), 1};
  }
}

CommandResult cmd_invariants(const std::string& pair_path, std::uint64_t seed, int trials) {
  return guarded("invariants", {pair_path}, [&](std::vector<std::string>& texts) {
    Loaded l = load_pair_data(pair_path);
    texts.push_back(l.text);
    LogCY3Pair p(l.data);
    Json r;
    r["picard_rank"] = p.rank();
    r["sum_rank"] = p.sum_rank();
    PicVector k = p.canonical();
    r["anticanonical_cube"] = BigInt(-p.cubic(k, k, k)).get_str();

    auto lambda = lambda_lattice(p);
    r["lambda"] = {{"rank", lambda.size()}, {"basis", vectors(lambda)}};
    ImageLattice img = k_image(p);
    r["k"] = {{"rank", img.basis.size()}, {"saturated", img.saturated}};
    GammaReport g = gamma_report(p);
    r["coker_ell"] = cokernel_json(g.coker_ell);
    r["gamma"] = {{"matrix", to_json(g.gamma)}, {"n_prime", cokernel_json(g.n_prime)}, {"composite_vanishes", g.composite_vanishes}};
    try {
      QuotientClass q = quotient_class(p);
      r["quotient"] = {{"free_rank", q.free_generators.size()},
                       {"torsion", strings(q.torsion)},
                       {"free_generators", vectors(q.free_generators)},
                       {"free_values", values(q.free_values)},
                       {"torsion_values", values(q.torsion_values)}};
    } catch (const Error& e) {
      r["quotient"] = {{"error", e.what()}};
    }
    r["period_trivial"] = unmarked_period(p).is_trivial() ? "yes" : "no";
    r["complexity"] = complexity(p, boundary_decomposition(p)).get_str();

    Json contractions = Json::array();
    for (std::size_t s = 0; s < p.step_count(); ++s) {
      try {
        MoriClass m = classify_contraction(p, s);
        contractions.push_back({{"step", s},
                                {"type", m.type},
                                {"triple", strings({m.triple[0], m.triple[1], m.triple[2]})},
                                {"contracts_to_curve", m.contracts_to_curve}});
      } catch (const Error& e) {
        contractions.push_back({{"step", s}, {"error", e.what()}});
      }
    }
    r["contractions"] = contractions;
    r["warnings"] = p.warnings();

    PropertySuiteResult suite = run_property_suite(p, seed, trials);
    r["property_suite"] = {{"seed", suite.seed},
                           {"trials", suite.trials},
                           {"marking_independent", suite.marking_independent},
                           {"torsor_identity", suite.torsor_identity},
                           {"k_trivial", suite.k_trivial},
                           {"first_failure", suite.first_failure}};
    r["status"] = suite.ok() ? "ok" : "property-failure";
    return CommandResult{make_report("invariants", texts, r), suite.ok() ? 0 : 1};
  });
}

CommandResult cmd_periods(const std::string& pair_path, const std::optional<std::string>& marking_path) {
  return guarded("periods", {pair_path}, [&](std::vector<std::string>& texts) {
    Loaded l = load_pair_data(pair_path);
    texts.push_back(l.text);
    LogCY3Pair p(l.data);
    Marking m = p.marking();
    std::string source = l.data.markings.empty() ? "markers" : "pair";
    if (marking_path) {
      std::string mt;
      m = marking_from_file(p, *marking_path, mt);
      texts.push_back(mt);
      source = "file";
    }
    Json r;
    r["marking_source"] = source;
    Json marking = Json::array();
    for (const auto& [e, z] : m) {
      const Edge& ed = p.complex().edges()[e];
      marking.push_back({{"edge", {ed.tail, ed.head}}, {"coord", z.to_string()}});
    }
    r["marking"] = marking;

    PeriodCharacter marked = marked_period(p, m);
    Json table = Json::array();
    for (const auto& comp : p.components())
      for (std::size_t b = 0; b < comp.rank(); ++b)
        table.push_back({{"component", comp.vertex()}, {"basis", b}, {"value", marked.values[p.offset(comp.vertex()) + b].to_string()}});
    r["marked"] = table;

    PeriodCharacter unmarked = unmarked_period(p, m);
    Json ut = Json::array();
    for (std::size_t i = 0; i < unmarked.domain.size(); ++i)
      ut.push_back({{"generator", to_json(unmarked.domain[i])}, {"value", unmarked.values[i].to_string()}});
    r["unmarked"] = ut;
    r["trivial"] = unmarked.is_trivial();
    r["status"] = "ok";
    return CommandResult{make_report("periods", texts, r), 0};
  });
}

CommandResult cmd_compare(const std::string& pair_a, const std::string& pair_b,
                          const std::optional<std::string>& corr_path, std::optional<std::size_t> search_bound) {
  return guarded("compare", {pair_a, pair_b}, [&](std::vector<std::string>& texts) {
    Loaded a = load_pair_data(pair_a), b = load_pair_data(pair_b);
    texts = {a.text, b.text};
    LogCY3Pair p(a.data), q(b.data);
    Correspondence corr = Correspondence::identity(p);
    if (corr_path) {
      texts.push_back(read_text_file(*corr_path));
      corr = parse_correspondence(read_json_file(*corr_path));
    }
    Verdict v = search_bound ? decide_isomorphism(p, q, corr, *search_bound) : decide_isomorphism(p, q, corr);
    Json r;
    r["verdict"] = verdict_to_json(v);
    if (v.kind == VerdictKind::Distinct && v.witness) r["witness_reverified"] = recheck_witness(p, q, corr, v);
    r["correspondence"] = correspondence_to_json(corr);
    if (search_bound) r["search_bound"] = *search_bound;
    int code = v.kind == VerdictKind::Isomorphic ? 0 : v.kind == VerdictKind::Distinct ? 1 : 2;
    return CommandResult{make_report("compare", texts, r), code};
  });
}

CommandResult cmd_oracle_check(const std::string& pair_path, bool flip_orientation) {
  return guarded("oracle-check", {pair_path}, [&](std::vector<std::string>& texts) {
    Loaded l = load_pair_data(pair_path);
    texts.push_back(l.text);
    LogCY3Pair p(l.data);
    Json r;
    r["flip_orientation"] = flip_orientation;

    bool agree = true;
    PeriodCharacter phi = unmarked_period(p);
    Json periods = {{"generators", phi.domain.size()}, {"agree", true}};
    for (std::size_t i = 0; i < phi.domain.size(); ++i) {
      GaussianRational c = cocycle_period(p, phi.domain[i], flip_orientation);
      if (!(c == phi.values[i])) {
        periods["agree"] = false;
        periods["first_discrepancy"] = {{"generator", to_json(phi.domain[i])},
                                        {"lambda_product", phi.values[i].to_string()},
                                        {"cocycle_product", c.to_string()}};
        agree = false;
        break;
      }
    }
    r["periods"] = periods;

    // Torus-invariant centers of the toric model: every max cone and every wall.
    const ToricVariety& t = p.toric();
    std::vector<std::vector<int>> centers;
    for (const auto& c : t.fan().cones) centers.push_back({c[0], c[1], c[2]});
    for (const auto& e : t.complex().edges()) centers.push_back({e.tail, e.head});
    Json cubic = {{"centers", centers.size()}, {"agree", true}};
    for (const auto& c : centers)
      if (!(blowup_formula_cubic(t, c) == subdivision_cubic(t, c))) {
        cubic["agree"] = false;
        cubic["first_discrepancy"] = c;
        agree = false;
        break;
      }
    r["cubic"] = cubic;
    PicVector k = p.canonical();
    r["anticanonical_cube"] = BigInt(-p.cubic(k, k, k)).get_str();
    r["status"] = agree ? "agree" : "discrepancy";
    return CommandResult{make_report("oracle-check", texts, r), agree ? 0 : 1};
  });
}

CommandResult cmd_recheck(const std::string& pair_a, const std::string& pair_b,
                          const std::optional<std::string>& corr_path, const std::string& report_path) {
  return guarded("recheck", {pair_a, pair_b, report_path}, [&](std::vector<std::string>& texts) {
    Loaded a = load_pair_data(pair_a), b = load_pair_data(pair_b);
    texts = {a.text, b.text};
    LogCY3Pair p(a.data), q(b.data);
    Correspondence corr = Correspondence::identity(p);
    if (corr_path) {
      texts.push_back(read_text_file(*corr_path));
      corr = parse_correspondence(read_json_file(*corr_path));
    }
    texts.push_back(read_text_file(report_path));
    Json report = read_json_file(report_path);
    if (!report.is_object() || report.value("format", "") != "logcy3-report" || report.value("command", "") != "compare")
      throw ParseError("report: expected a logcy3-report from compare");
    if (!report.contains("results") || !report["results"].contains("verdict"))
      throw ParseError("report.results: missing field \"verdict\"");
    Verdict v = verdict_from_json(report["results"]["verdict"]);
    bool ok = recheck_witness(p, q, corr, v);
    Json r = {{"verdict", to_string(v.kind)}, {"reverified", ok}, {"status", ok ? "ok" : "not-reverified"}};
    return CommandResult{make_report("recheck", texts, r), ok ? 0 : 1};
  });
}

namespace {

void render(std::ostringstream& os, const std::string& prefix, const Json& j) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render(os, prefix.empty() ? k : prefix + "." + k, v);
    return;
  }
  os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << "command: " << report.value("command", "?") << "\n";
  os << "inputs_digest: " << report.value("inputs_digest", "?") << "\n";
  if (report.contains("results")) render(os, "", report["results"]);
  return os.str();
}

}  // namespace logcy
