#include "syzlab/serialize.hpp"

namespace syzlab {

Json curve_to_json(const NodalRationalCurve& curve,
                   const std::vector<std::pair<std::string, LineBundleData>>& bundles) {
  Json j;
  j["g"] = curve.g;
  j["p"] = curve.field.p;
  j["ell"] = curve.field.ell;
  j["r"] = curve.field.r;
  Json nodes = Json::array();
  for (const auto& [pj, qj] : curve.nodes) nodes.push_back(Json::array({pj, qj}));
  j["nodes"] = std::move(nodes);
  Json bs = Json::object();
  for (const auto& [name, b] : bundles) {
    Json one;
    one["degree"] = b.degree;
    one["multipliers"] = b.multipliers;
    bs[name] = std::move(one);
  }
  j["bundles"] = std::move(bs);
  return j;
}

NodalRationalCurve curve_from_json(const Json& j) {
  NodalRationalCurve c;
  c.g = j.at("g").get<unsigned>();
  c.field.p = j.at("p").get<std::uint32_t>();
  c.field.ell = j.at("ell").get<std::uint32_t>();
  c.field.r = j.at("r").get<std::uint32_t>();
  for (const auto& n : j.at("nodes"))
    c.nodes.emplace_back(n.at(0).get<std::uint32_t>(), n.at(1).get<std::uint32_t>());
  if (c.nodes.size() != c.g) throw std::invalid_argument("curve_from_json: node count != g");
  return c;
}

Json table_to_json(const BettiTable& t) {
  Json j;
  j["rows"] = t.rows;
  j["totals"] = t.totals();
  return j;
}

namespace {

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace

Json class_to_json(const DivisorClass& c) {
  Json j;
  Json basis = Json::array({"lambda", "d0p", "d0pp"});
  Json coeffs = Json::array({rational_str(c.lam), rational_str(c.d0p), rational_str(c.d0pp)});
  for (std::size_t a = 0; a < c.d0a.size(); ++a) {
    basis.push_back("d0a" + std::to_string(a + 1));
    coeffs.push_back(rational_str(c.d0a[a]));
  }
  j["basis"] = std::move(basis);
  j["coeffs"] = std::move(coeffs);
  return j;
}

}  // namespace syzlab
