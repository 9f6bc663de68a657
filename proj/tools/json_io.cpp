#include "json_io.hpp"

namespace kltan::io {

json envelope(const std::string& command) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

json word_json(const Word& w) { return json(std::vector<int>(w.letters().begin(), w.letters().end())); }

Word word_from_json(const json& j) { return Word(j.get<std::vector<int>>()); }

json weight_json(const RootSystem& rs, const LatticeVector& v) {
  return json{{"coeffs", std::vector<int>(v.coeffs().begin(), v.coeffs().end())}, {"root", rs.format(v)}};
}

json element_json(const RootSystem& rs, const WeylElement& x) {
  return json{{"word", word_json(canonical_reduced_word(rs, x))}, {"length", x.length()}};
}

json poly_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back(json{{"exponent", std::vector<int>(e.coeffs().begin(), e.coeffs().end())}, {"coeff", c.str()}});
  }
  return out;
}

LaurentPoly poly_from_json(int rank, const json& j) {
  LaurentPoly p(rank);
  for (const auto& term : j) {
    const auto exp = term.at("exponent").get<std::vector<int>>();
    if (static_cast<int>(exp.size()) != rank) fail(ErrorKind::RankMismatch, "exponent length differs from rank");
    p.add_term(LatticeVector(std::span<const int>(exp)), BigInt(term.at("coeff").get<std::string>()));
  }
  return p;
}

json index_sequence_json(const IndexSequence& t) {
  return json(std::vector<int>(t.positions().begin(), t.positions().end()));
}

namespace {

json weights_json(const RootSystem& rs, const std::vector<Root>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(weight_json(rs, w));
  return out;
}

json sequences_json(const std::vector<IndexSequence>& ts) {
  json out = json::array();
  for (const auto& t : ts) out.push_back(index_sequence_json(t));
  return out;
}

}  // namespace

json report_json(const RootSystem& rs, const TangentReport& r) {
  json j = envelope("tangent");
  j["type"] = rs.cartan_type().to_string();
  j["x_word"] = word_json(r.x_word);
  j["x"] = element_json(rs, r.x);
  j["w"] = element_json(rs, r.w);
  j["gamma"] = weights_json(rs, r.gamma.gammas);

  json statuses = json::array();
  for (std::size_t k = 0; k < r.statuses.size(); ++k) {
    const auto& st = r.statuses[k];
    const auto& ev = st.evidence;
    json evidence{{"indecomposable", ev.indecomposable},
                  {"demazure_ok", ev.demazure_ok},
                  {"ordinary_product_ok", ev.ordinary_product_ok},
                  {"explicit_factor", ev.explicit_factor},
                  {"oracle_applied", ev.oracle_applied}};
    evidence["cone_coefficient"] = ev.cone_coefficient ? json(ev.cone_coefficient->str()) : json(nullptr);
    statuses.push_back(json{{"position", k + 1},
                            {"weight", weight_json(rs, r.gamma.gammas[k])},
                            {"verdict", std::string(to_string(st.verdict))},
                            {"evidence", evidence}});
  }
  j["statuses"] = statuses;
  j["kl_tangent_weights"] = weights_json(rs, r.kl_tangent_weights);
  j["schubert_extra_weights"] = weights_json(rs, r.schubert_extra_weights);
  j["complete"] = r.complete;
  j["parabolic"] = r.parabolic ? json(*r.parabolic) : json(nullptr);
  return j;
}

json demazure_json(const RootSystem& rs, const HeckeWordStats& st) {
  json j = envelope("demazure");
  j["type"] = rs.cartan_type().to_string();
  j["delta"] = element_json(rs, st.delta);
  j["length"] = st.length;
  j["excess"] = st.excess;
  return j;
}

json complex_json(const RootSystem& rs, const SubwordComplex& c, const EulerCharacteristics& chi) {
  json j = envelope("subword-complex");
  j["type"] = rs.cartan_type().to_string();
  j["word"] = word_json(c.word);
  j["target"] = element_json(rs, c.target);
  j["dimension"] = c.dimension();
  j["faces"] = sequences_json(c.faces);
  j["facets"] = sequences_json(c.facets);
  j["boundary"] = sequences_json(c.boundary);
  j["euler"] = json{{"reduced", chi.reduced}, {"interior", chi.interior}};
  return j;
}

json error_json(const std::string& command, ErrorKind kind, const std::string& message) {
  json j = envelope(command);
  j["error"] = json{{"kind", std::string(to_string(kind))}, {"message", message}};
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace kltan::io
