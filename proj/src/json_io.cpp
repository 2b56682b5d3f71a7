#include "symrep/json_io.hpp"

#include <climits>

#include "symrep/errors.hpp"

namespace symrep {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ParseError(what, 0); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) malformed("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) malformed(std::string("missing field '") + name + "'");
  return *it;
}

std::string read_string(const Json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Natural read_natural(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return Natural(j.get<std::uint64_t>());
  return parse_natural(read_string(j, what));
}

int read_int(const Json& j, const char* what) {
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v < INT_MIN || v > INT_MAX) malformed(std::string(what) + " out of range");
    return static_cast<int>(v);
  }
  const std::string text = read_string(j, what);
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    malformed(std::string(what) + " is not an integer: '" + text + "'");
  }
  if (used != text.size()) malformed(std::string(what) + " is not an integer: '" + text + "'");
  return v;
}

Json int_list(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(std::to_string(x));
  return out;
}

std::vector<int> read_int_list(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(read_int(x, what));
  return out;
}

}  // namespace

Json to_json(const Decomposition& d) {
  Json out = Json::object();
  out["ambient"] = int_list(d.ambient());
  for (const auto& [key, mult] : d.terms()) out[to_string(key)] = to_decimal(mult);
  return out;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d(read_int_list(field(j, "ambient"), "ambient"));
  for (const auto& [key, value] : j.items()) {
    if (key == "ambient") continue;
    d.add(parse_partition_tuple(key), read_natural(value, "multiplicity"));
  }
  return d;
}

Json to_json(const BoundReport& r) {
  Json params = Json::object();
  params["k"] = int_list(r.params.k);
  params["m"] = int_list(r.params.m);
  params["d"] = std::to_string(r.params.d);
  if (r.params.s) params["s"] = std::to_string(*r.params.s);
  if (r.params.reading) {
    params["letters"] = *r.params.reading == ProjectiveReading::as_stated ? "stated" : "homogeneous";
  }
  if (r.params.cohomology_degree) params["degree"] = std::to_string(*r.params.cohomology_degree);

  Json out = Json::object();
  out["theorem"] = std::string(tag(r.theorem));
  out["params"] = std::move(params);
  if (r.target) out["target"] = to_string(*r.target);
  out["value"] = to_decimal(r.value);
  out["excluded"] = r.excluded;
  out["asymptotic_note"] = r.asymptotic_note;
  return out;
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport r;
  r.theorem = parse_bound_kind(read_string(field(j, "theorem"), "theorem"));
  const Json& p = field(j, "params");
  r.params.k = read_int_list(field(p, "k"), "k");
  r.params.m = read_int_list(field(p, "m"), "m");
  r.params.d = read_int(field(p, "d"), "d");
  if (p.contains("s")) r.params.s = read_int(p["s"], "s");
  if (p.contains("letters")) {
    const auto text = read_string(p["letters"], "letters");
    if (text == "stated") {
      r.params.reading = ProjectiveReading::as_stated;
    } else if (text == "homogeneous") {
      r.params.reading = ProjectiveReading::homogeneous;
    } else {
      malformed("letters must be 'stated' or 'homogeneous'");
    }
  }
  if (p.contains("degree")) r.params.cohomology_degree = read_int(p["degree"], "degree");
  if (j.contains("target")) r.target = parse_partition_tuple(read_string(j["target"], "target"));
  r.value = read_natural(field(j, "value"), "value");
  const Json& excluded = field(j, "excluded");
  if (!excluded.is_boolean()) malformed("excluded must be a boolean");
  r.excluded = excluded.get<bool>();
  r.asymptotic_note = read_string(field(j, "asymptotic_note"), "asymptotic_note");
  return r;
}

Json to_json(const OrbitSpec& spec) {
  Json orbits = Json::array();
  for (const auto& o : spec.orbits()) {
    Json entry = Json::object();
    entry["label"] = o.label;
    entry["stabilizer"] = to_string(o.stabilizer);
    orbits.push_back(std::move(entry));
  }
  Json out = Json::object();
  out["k"] = std::to_string(spec.k());
  out["orbits"] = std::move(orbits);
  return out;
}

OrbitSpec orbit_spec_from_json(const Json& j) {
  const int k = read_int(field(j, "k"), "k");
  const Json& list = field(j, "orbits");
  if (!list.is_array()) malformed("orbits must be an array");
  std::vector<Orbit> orbits;
  for (const auto& entry : list) {
    orbits.push_back({read_string(field(entry, "label"), "label"),
                      parse_partition(read_string(field(entry, "stabilizer"), "stabilizer"))});
  }
  return OrbitSpec(k, std::move(orbits));
}

Json to_json(const std::vector<Partition>& list) {
  Json out = Json::array();
  for (const auto& p : list) out.push_back(to_string(p));
  return out;
}

Json to_json(const std::vector<PartitionTuple>& list) {
  Json out = Json::array();
  for (const auto& p : list) out.push_back(to_string(p));
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON: " + std::string(e.what()), e.byte);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace symrep
