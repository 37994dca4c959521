#include "tph/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "tph/errors.hpp"

namespace tph {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number(const Json& j, const char* what) {
  if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
  return j.get<double>();
}

LaurentPoly triples_to_poly(const Json& j) {
  if (!j.is_array()) parse_fail("coefficients must be a list of [k, re, im] triples");
  std::map<int, cplx> terms;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 3) parse_fail("coefficient entry must be [k, re, im]");
    if (!t[0].is_number_integer()) parse_fail("exponent must be an integer");
    const cplx v(number(t[1], "real part"), number(t[2], "imaginary part"));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) parse_fail("coefficient is not finite");
    terms[t[0].get<int>()] += v;
  }
  return LaurentPoly::from_terms(terms);
}

Json poly_to_triples(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [k, v] : p.terms()) out.push_back({k, v.real(), v.imag()});
  return out;
}

void dump_to(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(k).dump();
        out += ':';
        dump_to(v, out);
      }
      out += '}';
      return;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_to(j[i], out);
      }
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isnan(v)) {
        out += "\"nan\"";
      } else if (std::isinf(v)) {
        out += v > 0 ? "\"inf\"" : "\"-inf\"";
      } else if (v == 0.0) {
        out += '0';  // "-0" would read back as the integer 0
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += buf;
      }
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

RationalSymbol symbol_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) parse_fail("symbol must be an object with one key");
  if (j.contains("laurent")) return RationalSymbol(triples_to_poly(j["laurent"]));
  if (j.contains("rational")) {
    const Json& r = j["rational"];
    if (!r.is_object() || !r.contains("num") || !r.contains("den"))
      parse_fail("rational symbol needs num and den");
    const LaurentPoly den = triples_to_poly(r["den"]);
    if (den.is_zero()) parse_fail("denominator is zero");
    return RationalSymbol(triples_to_poly(r["num"]), den);
  }
  parse_fail("symbol key must be laurent or rational");
}

Json symbol_to_json(const RationalSymbol& s) {
  if (s.is_laurent()) {
    const cplx d = s.den().coeff(0);
    return {{"laurent", poly_to_triples(s.num() * (1.0 / d))}};
  }
  return {{"rational", {{"num", poly_to_triples(s.num())}, {"den", poly_to_triples(s.den())}}}};
}

PCSymbol pc_symbol_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("arcs") || !j["arcs"].is_array())
    parse_fail("PC symbol must be {\"arcs\": [[angle, re, im], ...]}");
  std::vector<PCSymbol::Arc> arcs;
  for (const Json& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 3) parse_fail("arc entry must be [angle, re, im]");
    arcs.push_back({number(a[0], "angle"), {number(a[1], "real part"), number(a[2], "imaginary part")}});
  }
  return PCSymbol(std::move(arcs));
}

Json pc_symbol_to_json(const PCSymbol& s) {
  Json arcs = Json::array();
  for (const auto& a : s.arcs()) arcs.push_back({a.start, a.value.real(), a.value.imag()});
  return {{"arcs", arcs}};
}

Json cplx_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json hardy_to_json(const HardyFunction& f, int taylor_terms) {
  Json taylor = Json::array();
  for (const cplx c : taylor_coeffs(f, taylor_terms)) taylor.push_back(cplx_to_json(c));
  return {{"num", poly_to_triples(f.value().num())},
          {"den", poly_to_triples(f.value().den())},
          {"taylor", taylor}};
}

std::string canonical_dump(const Json& j) {
  std::string out;
  dump_to(j, out);
  return out;
}

}  // namespace tph
