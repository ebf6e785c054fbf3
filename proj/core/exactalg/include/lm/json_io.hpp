#ifndef LM_JSON_IO_HPP
#define LM_JSON_IO_HPP

#include "json.hpp"  // vendored single-header nlohmann/json

#include "lm/ideal.hpp"

namespace lm {

// { "field": "Q" | {"Fp": p}, "vars": [...], "order": "grevlex"|"lex"|{"block": k},
//   "gens": [[ [coeff-string, [exponents...]], ... ], ...] }
nlohmann::json ideal_to_json(const Ideal& I);
Ideal ideal_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const Polynomial& p);

}  // namespace lm

#endif
