#include "qdet/serialize.hpp"

#include <sstream>

namespace qdet {

Json to_json(const Rational& r) { return rat_str(r); }

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  if (!p.is_zero()) {
    for (long e = p.valuation(); e <= p.degree(); ++e) {
      Rational c = p.coeff(e);
      if (!is_zero(c)) terms.push_back(Json::array({e, rat_str(c)}));
    }
  }
  return terms;
}

Json to_json(const RatFuncQ& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const AlphaPoly<RatFuncQ>& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return coeffs;
}

Json to_json(const AlphaPoly<Rational>& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return coeffs;
}

Rational rational_from_json(const Json& j) { return rat_parse(j.get<std::string>()); }

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& term : j)
    p += LaurentPoly::v_power(term.at(0).get<long>(), rat_parse(term.at(1).get<std::string>()));
  return p;
}

RatFuncQ ratfunc_from_json(const Json& j) {
  return RatFuncQ(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

template <>
AlphaPoly<RatFuncQ> alpha_from_json<RatFuncQ>(const Json& j) {
  std::vector<RatFuncQ> c;
  for (const auto& e : j) c.push_back(ratfunc_from_json(e));
  return AlphaPoly<RatFuncQ>(std::move(c));
}

template <>
AlphaPoly<Rational> alpha_from_json<Rational>(const Json& j) {
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return AlphaPoly<Rational>(std::move(c));
}

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char b : data) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string content_hash(const std::string& key) {
  std::ostringstream os;
  os << std::hex << fnv1a64(key);
  return os.str();
}

namespace {

void append_power(std::ostream& os, const char* sym, long e, bool latex) {
  os << sym;
  if (e == 1) return;
  if (latex) {
    os << "^{" << e << "}";
  } else {
    os << "^" << e;
  }
}

}  // namespace

std::string format_q(const LaurentPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool even = p.even_only();
  bool first = true;
  for (long e = p.degree(); e >= p.valuation(); --e) {
    Rational c = p.coeff(e);
    if (is_zero(c)) continue;
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    } else if (sgn(c) < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    bool want_symbol = e != 0;
    if (!is_one(c) || !want_symbol) {
      os << rat_str(c);
      if (want_symbol) os << (latex ? " " : "*");
    }
    if (want_symbol) {
      if (even) {
        append_power(os, "q", e / 2, latex);
      } else {
        append_power(os, latex ? "q^{1/2}" : "v", latex ? e : e, latex);
      }
    }
  }
  return os.str();
}

std::string format_q(const RatFuncQ& f, bool latex) {
  if (f.is_polynomial()) return format_q(f.num(), latex);
  if (latex) return "\\frac{" + format_q(f.num(), true) + "}{" + format_q(f.den(), true) + "}";
  return "(" + format_q(f.num(), false) + ")/(" + format_q(f.den(), false) + ")";
}

namespace {

template <class K>
std::string format_alpha_impl(const AlphaPoly<K>& p, bool latex,
                              std::string (*fmt)(const K&, bool)) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  const char* alpha = latex ? "\\alpha" : "al";
  bool first = true;
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    const K& c = p[i];
    if (is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = fmt(c, latex);
    bool unit = is_one(c);
    if (i == 0) {
      os << cs;
      continue;
    }
    if (!unit) {
      bool needs_parens = cs.find_first_of("+-") != std::string::npos && cs[0] != '-';
      needs_parens = needs_parens || cs.find(" - ") != std::string::npos ||
                     cs.find(" + ") != std::string::npos || cs[0] == '-';
      if (needs_parens)
        os << "(" << cs << ")";
      else
        os << cs;
      os << (latex ? " " : "*");
    }
    os << alpha;
    if (i > 1) {
      if (latex)
        os << "^{" << i << "}";
      else
        os << "^" << i;
    }
  }
  return os.str();
}

std::string fmt_ratfunc(const RatFuncQ& c, bool latex) { return format_q(c, latex); }
std::string fmt_rational(const Rational& c, bool latex) {
  (void)latex;
  return rat_str(c);
}

}  // namespace

std::string format_alpha(const AlphaPoly<RatFuncQ>& p, bool latex) {
  return format_alpha_impl<RatFuncQ>(p, latex, fmt_ratfunc);
}
std::string format_alpha(const AlphaPoly<Rational>& p, bool latex) {
  return format_alpha_impl<Rational>(p, latex, fmt_rational);
}

}  // namespace qdet
