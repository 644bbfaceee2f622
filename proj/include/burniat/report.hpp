// The verification suite and its JSON / Markdown renderings.

#ifndef BURNIAT_REPORT_HPP
#define BURNIAT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "burniat/cases.hpp"
#include "burniat/fans.hpp"

namespace burniat {

std::string library_version();

enum class CheckStatus { Pass, Fail, Recorded };
std::string status_name(CheckStatus s);  // "pass", "fail", "recorded"

struct CheckResult {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::Fail;
  std::string computed;  // compact JSON text
  std::string expected;  // compact JSON text
  std::string source;    // "computed" or "recorded"
};

struct CaseReport {
  std::string name;  // "global" or a case name
  std::vector<CheckResult> checks;
  std::optional<Fan> fan;
};

struct VerifyReport {
  std::string version;
  CaseReport global;
  std::vector<CaseReport> cases;
  std::vector<std::string> notes;  // table normalisations and similar
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t recorded = 0;
};

struct VerifyOptions {
  std::optional<CaseId> case_filter;
  std::optional<std::string> tables_json;  // defaults to the embedded tables
};

// Runs every check. Lattice, group and fan errors raised inside a case are
// turned into failing checks; anything else propagates.
VerifyReport run_verify(const VerifyOptions& options = {});
CaseReport verify_case(CaseId id);
CaseReport verify_global(const std::optional<std::string>& tables_json, std::vector<std::string>* notes = nullptr);

std::string render_json(const VerifyReport& r);
std::string render_markdown(const VerifyReport& r);

// 0 if no check failed, 1 otherwise.
inline int exit_code(const VerifyReport& r) { return r.fail == 0 ? 0 : 1; }

}  // namespace burniat

#endif  // BURNIAT_REPORT_HPP
