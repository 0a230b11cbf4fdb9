// JSON encodings for all value types exposed by the CLI.
//
//   PolyC:      {"var":"c","coeffs":["num/den",...]}           ascending
//   PolyCY:     {"var":"y","coeffs":[<PolyC>,...]}             ascending
//   SElem:      same, with the basis letter as "var"
//   PolyC1C2X:  [{"c1":a,"c2":b,"x":n,"q":"num/den"},...]
//   graph:      {"n":5,"edges":[[1,2],...]}
//   RSeries:    {"terms":[{"k":1,"r":<PolyC>},...]}
//
// All emitters keep insertion order and sort terms, so identical values
// serialize to identical bytes.
#pragma once

#include <sl2w/diagrams.hpp>
#include <sl2w/poly.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>

namespace sl2w::json_io {

using Json = nlohmann::ordered_json;

Json poly_c(const PolyC& p);
PolyC parse_poly_c(const Json& j);

Json poly_cy(const PolyCY& p, const std::string& var = "y");
PolyCY parse_poly_cy(const Json& j);

Json poly_c1c2x(const PolyC1C2X& p);
PolyC1C2X parse_poly_c1c2x(const Json& j);

Json graph(const SimpleGraph& g);
SimpleGraph parse_graph(const Json& j);

// One cache line: {"tag":"nf-v1","share":"1 2 | 2 1","nf":[...]}.
std::string cache_line(const Share& s, const PolyC1C2X& nf);
std::optional<std::pair<Share, PolyC1C2X>> parse_cache_line(const std::string& line);

}  // namespace sl2w::json_io
