// burniat: verify the toric case data, dump case fans, validate component tables.
//
// Exit codes: 0 no failing check, 1 some check failed, 2 usage or internal error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "burniat/cases.hpp"
#include "burniat/degenerations.hpp"
#include "burniat/fan_io.hpp"
#include "burniat/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

burniat::CaseId case_from_flag(const std::string& s) {
  auto id = burniat::parse_case_id(s);
  if (!id) throw CLI::ValidationError("--case", "expected one of 3, 4a, 4b, 5");
  return *id;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric case data and degeneration tables for Burniat surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", burniat::library_version());

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string verify_case, format = "json", out_path, tables_path;
  verify->add_option("--case", verify_case, "restrict to one case: 3, 4a, 4b or 5");
  verify->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
  verify->add_option("--out", out_path, "output file (default stdout)");
  verify->add_option("--tables", tables_path, "component tables JSON (default: built-in)");

  auto* dump = app.add_subcommand("dump-fan", "write a case fan as canonical JSON");
  std::string dump_case, dump_out;
  dump->add_option("--case", dump_case, "3, 4a, 4b or 5")->required();
  dump->add_option("--out", dump_out, "output file")->required();

  auto* tables = app.add_subcommand("tables", "component tables");
  bool validate = false;
  std::string tables_file;
  tables->add_flag("--validate", validate, "check every row")->required();
  tables->add_option("--tables", tables_file, "component tables JSON (default: built-in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      burniat::VerifyOptions opts;
      if (!verify_case.empty()) opts.case_filter = case_from_flag(verify_case);
      if (!tables_path.empty()) opts.tables_json = read_file(tables_path);
      burniat::VerifyReport report = burniat::run_verify(opts);
      write_output(out_path, format == "md" ? burniat::render_markdown(report) : burniat::render_json(report));
      if (report.fail > 0) {
        std::cerr << report.fail << " check(s) failed:\n";
        auto list = [](const burniat::CaseReport& cr) {
          for (const auto& ch : cr.checks)
            if (ch.status == burniat::CheckStatus::Fail) std::cerr << "  " << ch.id << ": " << ch.computed << "\n";
        };
        list(report.global);
        for (const auto& cr : report.cases) list(cr);
      }
      return burniat::exit_code(report);
    }
    if (*dump) {
      burniat::Fan fan = burniat::build_case_fan(case_from_flag(dump_case));
      burniat::write_fan_file(dump_out, fan);
      // Re-read and compare so a bad file never goes unnoticed.
      burniat::Fan back = burniat::read_fan_file(dump_out);
      if (burniat::fan_to_json(back) != read_file(dump_out)) {
        std::cerr << "round trip of '" << dump_out << "' is not byte-identical\n";
        return 1;
      }
      std::cout << dump_out << ": " << fan.rays().size() << " rays, " << fan.max_cones().size() << " maximal cones\n";
      return 0;
    }
    if (*tables) {
      burniat::TablesReport rep = tables_file.empty() ? burniat::validate_tables()
                                                      : burniat::validate_tables(read_file(tables_file));
      for (const auto& e : rep.errors) std::cout << "error: " << e << "\n";
      for (const auto& row : rep.rows) {
        std::cout << (row.pass ? "pass " : "FAIL ") << row.table << " [" << row.row << "] sum " << row.volume_sum
                  << " / " << row.degree << "\n";
        for (const auto& n : row.notes) std::cout << "     note: " << n << "\n";
        for (const auto& e : row.errors) std::cout << "     error: " << e << "\n";
      }
      std::cout << rep.passed() << " of " << rep.rows.size() << " rows pass\n";
      return rep.ok() ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
