// Irreducible components of degenerate surfaces: the base catalog #0..#9, the
// blowup rule #m -> #m_n(v-n), and validation of the component tables.

#ifndef BURNIAT_DEGENERATIONS_HPP
#define BURNIAT_DEGENERATIONS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "burniat/cases.hpp"

namespace burniat {

class UnknownFamily : public std::out_of_range {
 public:
  explicit UnknownFamily(int family) : std::out_of_range("unknown component family #" + std::to_string(family)) {}
};

enum class VolumeMarker { None, ContractToCurve, Flip };

std::string marker_name(VolumeMarker m);  // "", "contract-to-curve", "flip"

struct ComponentType {
  int family = 0;
  int blowups = 0;
  int volume = 0;
  VolumeMarker marker = VolumeMarker::None;

  // "#m(v)" or "#m_n(v)".
  std::string label() const;
  friend bool operator==(const ComponentType&, const ComponentType&) = default;
};

// Volumes of #0..#9: 6,2,2,3,1,2,4,5,1,3.
int base_volume(int family);
ComponentType base_component(int family);

// Blowup without identification.
ComponentType raw_child(const ComponentType& c, int extra_blowups);
// Blowup followed by the applied identifications. Throws std::invalid_argument
// if extra_blowups < 1 or the volume would drop below -1.
ComponentType child(const ComponentType& c, int extra_blowups);

struct Identification {
  ComponentType from;
  ComponentType to;
  bool applied = false;  // used by child(); otherwise recorded only
  std::string note;
};

const std::vector<Identification>& identifications();

// Named children that occur in the tables.
const std::vector<ComponentType>& catalog_children();

// Token in a table cell, e.g. "#3_1(2)". Recognised typographic slips are
// normalised and described in `notes`; `alias_of` is set when the name is an
// accepted alias. Throws std::invalid_argument on anything else.
struct ParsedComponent {
  ComponentType component;
  std::vector<std::string> notes;
  std::optional<std::string> alias_of;
};
ParsedComponent parse_component(const std::string& token);

// True for base families, catalog children and identification sources.
bool in_catalog(const ComponentType& c);

struct TableRowResult {
  std::string table;
  int degree = 0;
  std::string row;
  std::vector<std::string> components;  // normalised labels
  int volume_sum = 0;
  bool pass = false;
  std::vector<std::string> notes;
  std::vector<std::string> errors;
};

struct TablesReport {
  std::vector<TableRowResult> rows;
  std::vector<std::string> errors;  // file-level problems
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return errors.empty() && failed() == 0 && !rows.empty(); }
};

// Validates table JSON text. Never throws; problems are reported.
TablesReport validate_tables(const std::string& json_text);
// Validates the tables compiled into the library.
TablesReport validate_tables();
const std::string& embedded_tables_json();

// child(#0(6), number of monomial conditions of the case).
ComponentType derive_generic_component(CaseId id);

}  // namespace burniat

#endif  // BURNIAT_DEGENERATIONS_HPP
