#include "hopfcm/serialize.hpp"

#include <algorithm>
#include <limits>

namespace hopfcm {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw ValidationError(ValidationErrorKind::Malformed, what);
}

std::vector<std::string> string_list(const Json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_array()) malformed(std::string("missing list '") + field + "'");
  std::vector<std::string> out;
  for (const auto& item : doc[field]) {
    if (!item.is_string()) malformed(std::string("non-string entry in '") + field + "'");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<LabelPair> pair_list(const Json& doc, const char* field) {
  std::vector<LabelPair> out;
  if (!doc.contains(field)) return out;
  if (!doc[field].is_array()) malformed(std::string("'") + field + "' is not a list");
  for (const auto& item : doc[field]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
      malformed(std::string("entries of '") + field + "' must be 2-element string lists");
    }
    out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
  }
  return out;
}

Json labeled_pairs(const GroundSet& ground, const std::vector<IndexPair>& pairs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& [u, v] : pairs) out.push_back({ground.label(u), ground.label(v)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

Structure parse_structure(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    malformed("structure document needs a string field 'kind'");
  }
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "mixed-graph") {
    return MixedGraph::from_edges(string_list(doc, "vertices"), pair_list(doc, "undirected"),
                                  pair_list(doc, "directed"));
  }
  if (kind == "double-poset") {
    return DoublePoset::from_relations(string_list(doc, "elements"), pair_list(doc, "order1"),
                                       pair_list(doc, "order2"));
  }
  malformed("unknown structure kind '" + kind + "'");
}

Structure parse_structure_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(std::string("not a JSON document: ") + e.what());
  }
  return parse_structure(doc);
}

Json to_json(const Structure& h) {
  Json doc;
  if (const MixedGraph* g = h.mixed_graph()) {
    doc["kind"] = "mixed-graph";
    doc["vertices"] = g->ground().labels();
    doc["undirected"] = labeled_pairs(g->ground(), g->undirected_edges());
    doc["directed"] = labeled_pairs(g->ground(), g->directed_edges());
  } else {
    const DoublePoset& p = *h.double_poset();
    doc["kind"] = "double-poset";
    doc["elements"] = p.carrier().labels();
    doc["order1"] = labeled_pairs(p.carrier(), p.relation1());
    doc["order2"] = labeled_pairs(p.carrier(), p.relation2());
  }
  return doc;
}

std::string serialize(const Structure& h) { return to_json(h).dump(); }

Json to_json(const SimplicialComplex& c) {
  Json doc;
  doc["void"] = c.is_void();
  doc["facets"] = labeled_facets(c);
  doc["f_vector"] = f_vector(c);
  if (auto d = c.dimension()) doc["dimension"] = *d;
  else doc["dimension"] = nullptr;
  return doc;
}

Json to_json(const HomologyProfile& p) {
  Json table = Json::array();
  for (int d = -1; d <= p.top_dimension(); ++d) table.push_back({{"dimension", d}, {"betti", p.at(d)}});
  return table;
}

Json to_json(const RationalPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) {
    coeffs.push_back({boost::multiprecision::numerator(c).str(), boost::multiprecision::denominator(c).str()});
  }
  return {{"coefficients", coeffs}, {"display", p.to_string()}};
}

Json to_json(const HVector& h) {
  Json entries = Json::array();
  for (const auto& e : h.entries) entries.push_back(integer_json(e));
  return {{"entries", entries}, {"display", h.display()}, {"h_positive", is_h_positive(h)}};
}

Json to_json(const QSymExpansion& q) {
  Json terms = Json::object();
  for (const auto& [alpha, c] : q.coefficients) terms[render_composition(alpha)] = integer_json(c);
  return {{"basis", q.basis == QSymBasis::Monomial ? "monomial" : "fundamental"},
          {"degree", q.degree},
          {"terms", terms},
          {"display", q.display()}};
}

Json to_json(const MinorKey& key, const GroundSet& ground) {
  return {{"S", ground.labels_of(key.lower)}, {"T", ground.labels_of(key.upper)}};
}

Json to_json(const CmReport& r, const GroundSet& ground) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json item{{"dimension", f.dimension}, {"reason", f.reason}};
    if (f.minor) item["minor"] = to_json(*f.minor, ground);
    else item["face"] = f.face;
    if (f.betti) item["betti"] = f.betti;
    failures.push_back(std::move(item));
  }
  return {{"verdict", r.verdict}, {"failures", failures}};
}

}  // namespace hopfcm
