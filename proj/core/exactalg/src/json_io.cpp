#include "lm/json_io.hpp"

namespace lm {

using nlohmann::json;

static json order_to_json(const MonomialOrder& o) {
  switch (o.kind) {
    case MonomialOrder::LEX: return "lex";
    case MonomialOrder::BLOCK: return json{{"block", o.elim}};
    default: return "grevlex";
  }
}

static MonomialOrder order_from_json(const json& j) {
  if (j.is_string()) {
    if (j == "grevlex") return MonomialOrder::grevlex();
    if (j == "lex") return MonomialOrder::lex();
  } else if (j.is_object() && j.contains("block")) {
    return MonomialOrder::block(j["block"].get<int>());
  }
  throw std::invalid_argument("bad order: " + j.dump());
}

json poly_to_json(const Polynomial& p) {
  json terms = json::array();
  for (auto& t : p.terms()) terms.push_back(json::array({t.c.str(), t.m.e}));
  return terms;
}

json ideal_to_json(const Ideal& I) {
  json j;
  const Field& f = I.ring()->field;
  j["field"] = f.is_fp() ? json{{"Fp", f.p}} : json("Q");
  j["vars"] = I.ring()->vars;
  j["order"] = order_to_json(I.order());
  json gens = json::array();
  for (auto& g : I.gens()) gens.push_back(poly_to_json(g));
  j["gens"] = gens;
  return j;
}

Ideal ideal_from_json(const json& j) {
  Field f = j.at("field").is_string() ? Field::Q() : Field::Fp(j.at("field").at("Fp").get<long long>());
  RingPtr R = make_ring(f, j.at("vars").get<std::vector<std::string>>());
  MonomialOrder ord = j.contains("order") ? order_from_json(j["order"]) : MonomialOrder::grevlex();
  std::vector<Polynomial> gens;
  for (auto& jg : j.at("gens")) {
    std::vector<Term> terms;
    for (auto& jt : jg) {
      Monomial m{jt.at(1).get<std::vector<int>>()};
      terms.push_back({m, FieldElem::parse(f, jt.at(0).get<std::string>())});
    }
    gens.emplace_back(R, ord, terms);
  }
  return Ideal(std::move(gens), ord);
}

}  // namespace lm
