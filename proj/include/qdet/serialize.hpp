#pragma once

#include <json.hpp>

#include "qdet/alpha_poly.hpp"
#include "qdet/combinat.hpp"
#include "qdet/matrix.hpp"

namespace qdet {

using Json = nlohmann::json;

// Canonical forms: LaurentPoly as [[exponent, "num/den"], ...] sorted by
// exponent; RatFuncQ as {num, den}; AlphaPoly as coefficient list by
// ascending alpha power.
Json to_json(const Rational& r);
Json to_json(const LaurentPoly& p);
Json to_json(const RatFuncQ& f);
Json to_json(const AlphaPoly<RatFuncQ>& p);
Json to_json(const AlphaPoly<Rational>& p);

Rational rational_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
RatFuncQ ratfunc_from_json(const Json& j);
template <class K>
AlphaPoly<K> alpha_from_json(const Json& j);
template <>
AlphaPoly<RatFuncQ> alpha_from_json<RatFuncQ>(const Json& j);
template <>
AlphaPoly<Rational> alpha_from_json<Rational>(const Json& j);

template <class T>
Json matrix_to_json(const PolyMatrix<T>& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

uint64_t fnv1a64(const std::string& data);
std::string content_hash(const std::string& key);

// Display helpers: polynomials printed in the q, alpha conventions.  plain
// formatting suits tables; latex mode wraps exponents in braces.
std::string format_q(const LaurentPoly& p, bool latex = false);
std::string format_q(const RatFuncQ& f, bool latex = false);
std::string format_alpha(const AlphaPoly<RatFuncQ>& p, bool latex = false);
std::string format_alpha(const AlphaPoly<Rational>& p, bool latex = false);

}  // namespace qdet
