#include "burniat/degenerations.hpp"

#include <array>
#include <regex>

#include <json.hpp>

#include "burniat/embedded_tables.hpp"

namespace burniat {

namespace {

constexpr std::array<int, 10> kBaseVolumes{6, 2, 2, 3, 1, 2, 4, 5, 1, 3};

VolumeMarker marker_for(int volume) {
  if (volume == 0) return VolumeMarker::ContractToCurve;
  if (volume == -1) return VolumeMarker::Flip;
  return VolumeMarker::None;
}

ComponentType make(int family, int blowups) {
  int v = base_volume(family) - blowups;
  return {family, blowups, v, marker_for(v)};
}

struct Alias {
  std::string name;
  ComponentType target;
  std::string note;
};

const std::vector<Alias>& aliases() {
  static const std::vector<Alias> a{
      {"#9_2(2)", make(9, 1), "#9_2(2) read as #9_1(2): one blowup of #9(3) has volume 2"},
  };
  return a;
}

}  // namespace

std::string marker_name(VolumeMarker m) {
  switch (m) {
    case VolumeMarker::None: return "";
    case VolumeMarker::ContractToCurve: return "contract-to-curve";
    case VolumeMarker::Flip: return "flip";
  }
  return "";
}

std::string ComponentType::label() const {
  std::string s = "#" + std::to_string(family);
  if (blowups > 0) s += "_" + std::to_string(blowups);
  return s + "(" + std::to_string(volume) + ")";
}

int base_volume(int family) {
  if (family < 0 || family >= static_cast<int>(kBaseVolumes.size())) throw UnknownFamily(family);
  return kBaseVolumes[static_cast<std::size_t>(family)];
}

ComponentType base_component(int family) { return make(family, 0); }

ComponentType raw_child(const ComponentType& c, int extra_blowups) {
  if (extra_blowups < 1) throw std::invalid_argument("child needs at least one blowup");
  if (c.volume - extra_blowups < -1)
    throw std::invalid_argument("volume of " + c.label() + " cannot drop by " + std::to_string(extra_blowups));
  int v = c.volume - extra_blowups;
  return {c.family, c.blowups + extra_blowups, v, marker_for(v)};
}

ComponentType child(const ComponentType& c, int extra_blowups) {
  ComponentType r = raw_child(c, extra_blowups);
  for (const auto& id : identifications())
    if (id.applied && id.from == r) return id.to;
  return r;
}

const std::vector<Identification>& identifications() {
  static const std::vector<Identification> ids{
      {make(2, 1), make(4, 0), true, "#2_1(1) = #4(1)"},
      {make(6, 2), make(5, 0), false, "first kind of #6_2(2) = #5(2); the other kind is not described, so kept distinct"},
  };
  return ids;
}

const std::vector<ComponentType>& catalog_children() {
  static const std::vector<ComponentType> c{make(3, 1), make(6, 1), make(6, 2), make(6, 3),
                                            make(9, 1), make(0, 1), make(0, 2), make(0, 3)};
  return c;
}

bool in_catalog(const ComponentType& c) {
  if (c.family < 0 || c.family > 9) return false;
  if (c.volume != kBaseVolumes[static_cast<std::size_t>(c.family)] - c.blowups) return false;
  if (c.blowups == 0) return true;
  for (const auto& k : catalog_children())
    if (k == c) return true;
  for (const auto& id : identifications())
    if (id.from == c) return true;
  return false;
}

ParsedComponent parse_component(const std::string& token) {
  static const std::regex re(R"(^\s*(#?)(\d+)(?:_(\d+))?\((-?\d+)\)(.*?)\s*$)");
  std::smatch m;
  if (!std::regex_match(token, m, re)) throw std::invalid_argument("unreadable component '" + token + "'");
  ParsedComponent out;
  if (m[1].length() == 0) out.notes.push_back("'" + token + "': added missing '#'");
  int family = std::stoi(m[2].str());
  int blowups = m[3].matched ? std::stoi(m[3].str()) : 0;
  int volume = std::stoi(m[4].str());
  std::string tail = m[5].str();
  if (tail == ")") {
    out.notes.push_back("'" + token + "': dropped stray ')'");
  } else if (tail == "(" + m[4].str() + ")") {
    out.notes.push_back("'" + token + "': dropped repeated volume suffix");
  } else if (!tail.empty()) {
    throw std::invalid_argument("unreadable component '" + token + "'");
  }
  if (family < 0 || family > 9) throw std::invalid_argument("unknown family in '" + token + "'");
  out.component = {family, blowups, volume, marker_for(volume)};
  std::string canonical = out.component.label();
  for (const auto& a : aliases()) {
    if (a.name == canonical) {
      out.alias_of = a.target.label();
      out.notes.push_back(a.note);
      out.component = a.target;
    }
  }
  return out;
}

std::size_t TablesReport::passed() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.pass ? 1 : 0;
  return n;
}

std::size_t TablesReport::failed() const { return rows.size() - passed(); }

TablesReport validate_tables(const std::string& json_text) {
  using nlohmann::json;
  TablesReport rep;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    rep.errors.push_back(std::string("tables file is not valid JSON: ") + e.what());
    return rep;
  }
  if (!doc.is_object() || !doc.contains("tables") || !doc["tables"].is_array()) {
    rep.errors.push_back("tables file has no 'tables' array");
    return rep;
  }
  for (const auto& table : doc["tables"]) {
    std::string name = table.value("name", std::string("?"));
    if (!table.contains("degree") || !table["degree"].is_number_integer() || !table.contains("rows") ||
        !table["rows"].is_array()) {
      rep.errors.push_back("table '" + name + "' lacks an integer 'degree' or a 'rows' array");
      continue;
    }
    int degree = table["degree"].get<int>();
    for (const auto& row : table["rows"]) {
      TableRowResult r;
      r.table = name;
      r.degree = degree;
      r.row = row.value("case", std::string("?"));
      if (!row.contains("components") || !row["components"].is_array()) {
        r.errors.push_back("row has no 'components' array");
        rep.rows.push_back(std::move(r));
        continue;
      }
      for (const auto& cell : row["components"]) {
        if (!cell.is_string()) {
          r.errors.push_back("component is not a string");
          continue;
        }
        std::string token = cell.get<std::string>();
        try {
          ParsedComponent p = parse_component(token);
          r.notes.insert(r.notes.end(), p.notes.begin(), p.notes.end());
          const ComponentType& c = p.component;
          r.components.push_back(c.label());
          r.volume_sum += c.volume;
          if (c.volume != base_volume(c.family) - c.blowups)
            r.errors.push_back(c.label() + ": volume should be " + std::to_string(base_volume(c.family) - c.blowups));
          else if (!in_catalog(c))
            r.errors.push_back(c.label() + ": not in the component catalog");
          if (c.blowups > 6 - degree)
            r.errors.push_back(c.label() + ": needs more than " + std::to_string(6 - degree) + " blowups");
        } catch (const std::exception& e) {
          r.errors.push_back(e.what());
        }
      }
      if (r.volume_sum != degree)
        r.errors.push_back("volumes sum to " + std::to_string(r.volume_sum) + ", expected " + std::to_string(degree));
      r.pass = r.errors.empty();
      rep.rows.push_back(std::move(r));
    }
  }
  if (rep.rows.empty() && rep.errors.empty()) rep.errors.push_back("tables file has no rows");
  return rep;
}

const std::string& embedded_tables_json() {
  static const std::string s(embedded::kTablesJson);
  return s;
}

TablesReport validate_tables() { return validate_tables(embedded_tables_json()); }

ComponentType derive_generic_component(CaseId id) {
  return child(base_component(0), static_cast<int>(case_spec(id).conditions.size()));
}

}  // namespace burniat
