#include <sl2w/json_io.hpp>

namespace sl2w::json_io {

namespace {
constexpr const char* kCacheTag = "nf-v1";
}

Json poly_c(const PolyC& p) {
  Json j;
  j["var"] = "c";
  Json coeffs = Json::array();
  for (const auto& q : p.coeffs()) coeffs.push_back(rational_string(q));
  j["coeffs"] = std::move(coeffs);
  return j;
}

PolyC parse_poly_c(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw InputError("bad polynomial JSON");
  std::vector<Rational> coeffs;
  for (const auto& item : j["coeffs"]) {
    if (!item.is_string()) throw InputError("polynomial coefficients must be strings");
    coeffs.push_back(parse_rational(item.get<std::string>()));
  }
  return PolyC(std::move(coeffs));
}

Json poly_cy(const PolyCY& p, const std::string& var) {
  Json j;
  j["var"] = var;
  Json coeffs = Json::array();
  for (const auto& q : p.coeffs()) coeffs.push_back(poly_c(q));
  j["coeffs"] = std::move(coeffs);
  return j;
}

PolyCY parse_poly_cy(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw InputError("bad polynomial JSON");
  std::vector<PolyC> coeffs;
  for (const auto& item : j["coeffs"]) coeffs.push_back(parse_poly_c(item));
  return PolyCY(std::move(coeffs));
}

Json poly_c1c2x(const PolyC1C2X& p) {
  Json arr = Json::array();
  for (const auto& [m, q] : p.terms()) {
    Json t;
    t["c1"] = m.c1;
    t["c2"] = m.c2;
    t["x"] = m.x;
    t["q"] = rational_string(q);
    arr.push_back(std::move(t));
  }
  return arr;
}

PolyC1C2X parse_poly_c1c2x(const Json& j) {
  if (!j.is_array()) throw InputError("bad trivariate polynomial JSON");
  PolyC1C2X out;
  for (const auto& t : j) {
    MonomialC1C2X m{t.at("c1").get<int>(), t.at("c2").get<int>(), t.at("x").get<int>()};
    if (m.c1 < 0 || m.c2 < 0 || m.x < 0) throw InputError("negative exponent");
    out.add_term(m, parse_rational(t.at("q").get<std::string>()));
  }
  return out;
}

Json graph(const SimpleGraph& g) {
  Json j;
  j["n"] = g.n;
  Json edges = Json::array();
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.edge(u, v)) edges.push_back(Json::array({u + 1, v + 1}));
  j["edges"] = std::move(edges);
  return j;
}

SimpleGraph parse_graph(const Json& j) {
  int n = j.at("n").get<int>();
  if (n < 0 || n > 31) throw InputError("vertex count out of range");
  SimpleGraph g = SimpleGraph::empty(n);
  for (const auto& e : j.at("edges")) {
    int u = e.at(0).get<int>(), v = e.at(1).get<int>();
    if (u < 1 || u > n || v < 1 || v > n) throw InputError("edge endpoint out of range");
    g.set_edge(u - 1, v - 1);
  }
  return g;
}

std::string cache_line(const Share& s, const PolyC1C2X& nf) {
  Json j;
  j["tag"] = kCacheTag;
  j["share"] = s.text();
  j["nf"] = poly_c1c2x(nf);
  return j.dump();
}

std::optional<std::pair<Share, PolyC1C2X>> parse_cache_line(const std::string& line) {
  try {
    Json j = Json::parse(line);
    if (!j.is_object() || j.value("tag", "") != kCacheTag) return std::nullopt;
    return std::pair{Share::parse(j.at("share").get<std::string>()),
                     parse_poly_c1c2x(j.at("nf"))};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace sl2w::json_io
