#include "frieze/io.hpp"

#include <stdexcept>
#include <string>

namespace frieze {

namespace {

Scalar scalar_from_json(const json& v) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw std::invalid_argument("expected a scalar string or integer, got " + v.dump());
}

int int_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

VertexPair parse_key(const std::string& key) {
  const auto comma = key.find(',');
  std::size_t used_p = 0, used_q = 0;
  try {
    if (comma == std::string::npos) throw std::invalid_argument(key);
    const std::string p = key.substr(0, comma), q = key.substr(comma + 1);
    VertexPair e{std::stoi(p, &used_p), std::stoi(q, &used_q)};
    if (used_p != p.size() || used_q != q.size()) throw std::invalid_argument(key);
    return e;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed entry key \"" + key + "\"");
  }
}

}  // namespace

json frieze_to_json(const FriezeMap& f) {
  json entries = json::object();
  for (const auto& [e, v] : f.entries()) {
    entries[std::to_string(e.p) + "," + std::to_string(e.q)] = v.to_string();
  }
  return {{"m", f.size()}, {"entries", entries}};
}

FriezeMap frieze_from_json(const json& j) {
  const int m = int_field(j, "m");
  if (!j.contains("entries") || !j.at("entries").is_object()) {
    throw std::invalid_argument("missing object field \"entries\"");
  }
  std::map<VertexPair, Scalar> entries;
  for (const auto& [key, v] : j.at("entries").items()) {
    entries[parse_key(key)] = scalar_from_json(v);
  }
  return FriezeMap(m, entries);
}

json triangulation_to_json(const Triangulation& t) {
  json d = json::array();
  for (const auto& e : t.diagonals()) d.push_back({e.p, e.q});
  return {{"m", t.size()}, {"diagonals", d}};
}

Triangulation triangulation_from_json(const json& j) {
  const int m = int_field(j, "m");
  if (!j.contains("diagonals") || !j.at("diagonals").is_array()) {
    throw std::invalid_argument("missing array field \"diagonals\"");
  }
  std::vector<VertexPair> d;
  for (const auto& e : j.at("diagonals")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw std::invalid_argument("diagonal must be a pair of integers, got " + e.dump());
    }
    d.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Triangulation(m, std::move(d));
}

json report_to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    json item{{"rule", x.rule}, {"indices", x.indices}};
    if (!x.detail.empty()) item["detail"] = x.detail;
    v.push_back(std::move(item));
  }
  return {{"ok", r.ok()}, {"violations", v}};
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Scalar::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace frieze
