#include "racgk/serialize.hpp"

namespace racgk {

Json labels_json(const Graph& g, VertexMask m) {
  Json a = Json::array();
  for (const auto& l : g.labels_of(m)) a.push_back(l);
  return a;
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.labels();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  j["edges"] = std::move(edges);
  return j;
}

namespace {

template <typename Terms>
Json terms_json(const Terms& terms, const Graph& g) {
  Json out = Json::array();
  for (const auto& [k, c] : terms) {
    Json t;
    t["monomial"] = labels_json(g, k);
    t["coeff"] = decimal(c);
    out.push_back(std::move(t));
  }
  return out;
}

VertexMask mask_from(const Json& labels, const Graph& g, const char* what) {
  if (!labels.is_array()) throw ParseError(what, "expected an array of vertex labels");
  VertexMask m = 0;
  for (const auto& l : labels) {
    if (!l.is_string()) throw ParseError(what, "vertex labels must be strings");
    auto i = g.index_of(l.get<std::string>());
    if (!i) throw ParseError(what, "unknown vertex '" + l.get<std::string>() + "'");
    m |= bit(*i);
  }
  return m;
}

BigInt coefficient_from(const Json& c) {
  if (c.is_string()) {
    BigInt v;
    if (v.set_str(c.get<std::string>(), 10) != 0) throw ParseError("coeff", "not a decimal integer");
    return v;
  }
  if (c.is_number_integer()) return BigInt(c.get<long>());
  throw ParseError("coeff", "expected a decimal string");
}

template <typename AddTerm>
void read_terms(const Json& j, const Graph& g, AddTerm&& add) {
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("terms", "expected an array");
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("monomial") || !t.contains("coeff"))
      throw ParseError("terms", "each term needs 'monomial' and 'coeff'");
    add(mask_from(t["monomial"], g, "monomial"), coefficient_from(t["coeff"]));
  }
}

}  // namespace

Json to_json(const RepRingElement& e, const Graph& g) {
  Json j;
  j["ambient"] = labels_json(g, e.ambient());
  j["terms"] = terms_json(e.terms(), g);
  return j;
}

RepRingElement rep_element_from_json(const Json& j, const Graph& g) {
  if (!j.is_object() || !j.contains("ambient")) throw ParseError("ambient", "missing ambient group");
  RepRingElement e(mask_from(j["ambient"], g, "ambient"));
  read_terms(j, g, [&](VertexMask k, const BigInt& c) { e.add_term(k, c); });
  return e;
}

Json to_json(const KRingElement& e) {
  Json j;
  j["basis"] = to_string(e.basis());
  j["ambient"] = e.graph().labels();
  j["terms"] = terms_json(e.terms(), e.graph());
  return j;
}

KRingElement kring_element_from_json(const Json& j, const GraphPtr& graph) {
  if (!j.is_object() || !j.contains("basis") || !j["basis"].is_string()) throw ParseError("basis", "missing basis");
  const auto b = j["basis"].get<std::string>();
  if (b != "star" && b != "bar") throw ParseError("basis", "expected 'star' or 'bar'");
  if (j.contains("ambient") && mask_from(j["ambient"], *graph, "ambient") != graph->all_vertices())
    throw ParseError("ambient", "K-ring elements live over the full vertex set");
  KRingElement e(graph, b == "star" ? Basis::kStar : Basis::kBar);
  read_terms(j, *graph, [&](VertexMask k, const BigInt& c) { e.add_term(k, c); });
  return e;
}

Json to_json(const CompletedElement& e) {
  Json j;
  j["basis"] = "bar";
  j["precision"] = e.precision();
  j["ambient"] = e.graph().labels();
  j["constant"] = decimal(e.constant());
  j["terms"] = terms_json(e.terms(), e.graph());
  return j;
}

Json to_json(const CohomologyResult& h) {
  Json out = Json::array();
  for (const auto& d : h) {
    Json j;
    j["degree"] = d.degree;
    j["free_rank"] = d.free_rank;
    Json t = Json::array();
    for (const auto& f : d.torsion) {
      if (f.fits_slong_p())
        t.push_back(f.get_si());
      else
        t.push_back(decimal(f));
    }
    j["torsion"] = std::move(t);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace racgk
