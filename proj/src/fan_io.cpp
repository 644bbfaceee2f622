#include "burniat/fan_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace burniat {

using nlohmann::json;

std::string fan_to_json(const Fan& fan) {
  Fan f = fan.canonical();
  json basis = json::array();
  for (const auto& b : f.lattice().basis()) basis.push_back(b.coords());
  json rays = json::array();
  for (const auto& r : f.rays()) rays.push_back(r.coords());
  json types = json::array();
  for (RayType t : f.ray_types()) types.push_back(std::string(1, ray_type_char(t)));
  json cones = json::array();
  for (const auto& c : f.max_cones()) cones.push_back(c.rays);
  json doc = json::object();
  doc["lattice"] = {{"ambient_rank", f.lattice().ambient_rank()}, {"basis", basis}};
  doc["rays"] = rays;
  doc["ray_types"] = types;
  doc["max_cones"] = cones;
  return doc.dump(2) + "\n";
}

Fan fan_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FanIoError(std::string("fan JSON does not parse: ") + e.what());
  }
  try {
    const json& lat = doc.at("lattice");
    auto ambient = lat.at("ambient_rank").get<std::size_t>();
    std::vector<LatticeVector> basis;
    for (const auto& b : lat.at("basis")) basis.emplace_back(b.get<std::vector<Int>>());
    for (const auto& b : basis)
      if (b.size() != ambient) throw FanIoError("basis vector of wrong length");
    Sublattice sub = Sublattice::from_generators(ambient, std::span<const LatticeVector>(basis));
    if (sub.rank() != basis.size()) throw FanIoError("lattice basis is not linearly independent");
    std::vector<LatticeVector> rays;
    for (const auto& r : doc.at("rays")) rays.emplace_back(r.get<std::vector<Int>>());
    std::vector<RayType> types;
    if (doc.contains("ray_types"))
      for (const auto& t : doc.at("ray_types")) {
        auto s = t.get<std::string>();
        if (s.size() != 1) throw FanIoError("bad ray type '" + s + "'");
        types.push_back(parse_ray_type(s[0]));
      }
    std::vector<Cone> cones;
    for (const auto& c : doc.at("max_cones")) cones.emplace_back(c.get<std::vector<std::size_t>>());
    Fan f(std::move(sub), std::move(rays), std::move(cones), std::move(types));
    FanValidation v = validate_fan(f);
    if (!v.valid) throw FanError(FanError::Kind::InvalidFan, "fan from JSON is invalid: " + v.reason);
    return f;
  } catch (const json::exception& e) {
    throw FanIoError(std::string("fan JSON has the wrong shape: ") + e.what());
  }
}

void write_fan_file(const std::string& path, const Fan& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FanIoError("cannot open '" + path + "' for writing");
  out << fan_to_json(f);
  if (!out) throw FanIoError("failed writing '" + path + "'");
}

Fan read_fan_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FanIoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return fan_from_json(ss.str());
  } catch (const FanIoError& e) {
    throw FanIoError(path + ": " + e.what());
  }
}

}  // namespace burniat
