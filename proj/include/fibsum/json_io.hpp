#pragma once

// JSON serialization of closed forms, alternating splits and sweep reports.
// Scalars use the exact text formats of exact.hpp / ratfun.hpp.

#include "fibsum/closed_form.hpp"
#include "fibsum/oracle.hpp"
#include "fibsum/split.hpp"

#include <json.hpp>

#include <string>

namespace fibsum {

using Json = nlohmann::ordered_json;

inline const char* to_string(Basis b) { return b == Basis::standard ? "standard" : "shifted"; }

inline Basis parse_basis(const std::string& s) {
  if (s == "standard") return Basis::standard;
  if (s == "shifted") return Basis::shifted;
  throw ParseError("unknown basis '" + s + "'");
}

namespace detail {

template <typename Coeff>
Coeff parse_coeff(const std::string& s) {
  if constexpr (std::is_same_v<Coeff, RatFun>) {
    return RatFun::parse(s);
  } else {
    return GaussianRational::parse(s);
  }
}

template <typename Coeff>
Json closed_form_json(const ClosedForm<Coeff>& cf) {
  Json j;
  j["n"] = cf.n;
  j["r"] = cf.r;
  j["w"] = cf.w ? cf.w->str() : std::string("symbolic");
  j["basis"] = to_string(cf.basis);
  Json head = Json::array();
  for (std::size_t i = 0; i < cf.head.size(); ++i) head.push_back({{"j", i}, {"coeff", cf.head[i].str()}});
  j["head"] = head;
  Json tail = Json::array();
  for (const auto& t : cf.tail) {
    tail.push_back({{"offset", t.offset}, {"w_exp_offset", t.w_exp_offset}, {"poly_k", t.poly_k.coeff_strings()}});
  }
  j["tail"] = tail;
  j["meta"] = {{"singular", cf.meta.singular}, {"extension", cf.meta.extension}};
  return j;
}

template <typename Coeff>
ClosedForm<Coeff> closed_form_from_json(const Json& j) {
  ClosedForm<Coeff> cf;
  cf.n = j.at("n").get<int>();
  cf.r = j.at("r").get<int>();
  const std::string w = j.at("w").get<std::string>();
  if (w != "symbolic") cf.w = GaussianRational::parse(w);
  if (std::is_same_v<Coeff, RatFun> != !cf.w.has_value()) throw ParseError("closed form mode does not match 'w'");
  cf.basis = parse_basis(j.value("basis", std::string("shifted")));
  cf.head.assign(static_cast<std::size_t>(cf.n) + 1, Coeff(0));
  for (const auto& h : j.at("head")) {
    const auto idx = h.at("j").get<long>();
    if (idx < 0 || idx > cf.n) throw ParseError("head index out of range");
    cf.head[static_cast<std::size_t>(idx)] = cf.head[static_cast<std::size_t>(idx)] + parse_coeff<Coeff>(h.at("coeff").get<std::string>());
  }
  for (const auto& t : j.at("tail")) {
    std::vector<Coeff> coeffs;
    for (const auto& c : t.at("poly_k")) coeffs.push_back(parse_coeff<Coeff>(c.get<std::string>()));
    cf.tail.push_back({t.at("offset").get<long>(), t.at("w_exp_offset").get<long>(), Poly<Coeff>(std::move(coeffs))});
  }
  if (j.contains("meta")) {
    cf.meta.singular = j["meta"].value("singular", false);
    cf.meta.extension = j["meta"].value("extension", false);
  }
  return cf;
}

}  // namespace detail

inline Json to_json(const NumericForm& cf) { return detail::closed_form_json(cf); }
inline Json to_json(const SymbolicForm& cf) { return detail::closed_form_json(cf); }

inline bool is_symbolic_json(const Json& j) { return j.at("w").get<std::string>() == "symbolic"; }
inline NumericForm numeric_form_from_json(const Json& j) { return detail::closed_form_from_json<GaussianRational>(j); }
inline SymbolicForm symbolic_form_from_json(const Json& j) { return detail::closed_form_from_json<RatFun>(j); }

inline Json to_json(const AlternatingForm& f) {
  Json j;
  j["n"] = f.n;
  j["r"] = f.r;
  Json head = Json::array();
  for (std::size_t i = 0; i < f.head.size(); ++i) head.push_back({{"j", i}, {"coeff", f.head[i].str()}});
  j["head"] = head;
  Json tail = Json::array();
  for (const auto& t : f.tail) tail.push_back({{"offset", t.offset}, {"sign", "(-1)^K"}, {"poly_K", t.poly_K.coeff_strings()}});
  j["tail"] = tail;
  return j;
}

inline AlternatingForm alternating_form_from_json(const Json& j) {
  AlternatingForm f;
  f.n = j.at("n").get<int>();
  f.r = j.at("r").get<int>();
  f.head.assign(static_cast<std::size_t>(f.n) + 1, Rational(0));
  for (const auto& h : j.at("head")) {
    const auto idx = h.at("j").get<long>();
    if (idx < 0 || idx > f.n) throw ParseError("head index out of range");
    f.head[static_cast<std::size_t>(idx)] += Rational::parse(h.at("coeff").get<std::string>());
  }
  for (const auto& t : j.at("tail")) {
    std::vector<Rational> coeffs;
    for (const auto& c : t.at("poly_K")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    f.tail.push_back({t.at("offset").get<long>(), RPoly(std::move(coeffs))});
  }
  return f;
}

inline Json to_json(const EvenOddSplit& s) {
  return {{"n", s.n}, {"r", s.r}, {"even", to_json(s.even)}, {"odd", to_json(s.odd)}};
}

inline Json to_json(const VerificationReport& report) {
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    Json jc = {{"n", c.n}, {"r", c.r}, {"w", c.w.str()}, {"k", c.k}, {"status", to_string(c.status)}};
    if (c.counterexample) {
      jc["counterexample"] = {{"seeds", c.counterexample->seeds.str()},
                              {"closed", c.counterexample->closed.str()},
                              {"brute", c.counterexample->brute.str()}};
    }
    cases.push_back(std::move(jc));
  }
  Json j;
  j["summary"] = {{"pass", report.passed()}, {"fail", report.failed()}, {"skipped", report.skipped()}};
  j["cases"] = std::move(cases);
  return j;
}

}  // namespace fibsum
