// qhecke: verify catalogued q-series identities and expand expressions.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhecke/catalog.hpp"
#include "qhecke/dsl.hpp"

namespace {

using qhecke::VerificationReport;

void print_text(const VerificationReport& r) {
  std::cout << (r.equal ? "PASS " : "FAIL ") << r.id << "  order " << r.order;
  if (r.first_mismatch) {
    std::cout << "  first mismatch at q^" << *r.first_mismatch << ": lhs " << qhecke::to_string(*r.lhs_coeff)
              << ", rhs " << qhecke::to_string(*r.rhs_coeff);
  }
  if (r.error) std::cout << "  error: " << *r.error;
  std::cout << "  (" << r.elapsed_seconds << " s)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact truncated q-series engine for Hecke-Rogers double sums"};
  app.require_subcommand(1);

  std::string catalog_path;
  app.add_option("--catalog", catalog_path, "Identity catalog JSON file (default: built-in)");

  auto* list = app.add_subcommand("list", "List catalogued identities");

  auto* verify = app.add_subcommand("verify", "Verify identities coefficientwise");
  std::string id;
  bool all = false;
  std::optional<std::int64_t> order;
  std::string format = "text";
  auto* id_opt = verify->add_option("--id", id, "Identity label");
  auto* all_opt = verify->add_flag("--all", all, "Verify every identity");
  id_opt->excludes(all_opt);
  verify->add_option("--order", order, "Truncation order (default: per identity)");
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* expand = app.add_subcommand("expand", "Expand an expression");
  std::string expr;
  std::int64_t expand_order = 20;
  std::string expand_format = "text";
  expand->add_option("--expr", expr, "Expression")->required();
  expand->add_option("--order", expand_order, "Truncation order")->required();
  expand->add_option("--format", expand_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    const qhecke::Catalog catalog =
        catalog_path.empty() ? qhecke::Catalog::builtin() : qhecke::Catalog::from_file(catalog_path);

    if (*list) {
      for (const auto& r : catalog.records()) {
        std::cout << r.id << "\t" << r.reference << "\n";
      }
      return 0;
    }

    if (*verify) {
      if (!all && id.empty()) {
        std::cerr << "verify: give --id <label> or --all\n";
        return 2;
      }
      std::vector<VerificationReport> reports;
      if (all) {
        reports = qhecke::verify_all(catalog, order);
      } else {
        reports.push_back(qhecke::verify(catalog, id, order));
      }
      bool ok = true;
      double total = 0;
      for (const auto& r : reports) {
        ok = ok && r.equal;
        total += r.elapsed_seconds;
      }
      if (format == "json") {
        std::cout << (all ? qhecke::reports_to_json(reports) : qhecke::report_to_json(reports.front())) << "\n";
      } else {
        for (const auto& r : reports) print_text(r);
        if (all) {
          std::size_t passed = 0;
          for (const auto& r : reports) passed += r.equal;
          std::cout << passed << "/" << reports.size() << " identities verified\n";
        }
      }
      return ok ? 0 : 1;
    }

    if (*expand) {
      const qhecke::LaurentSeries s = qhecke::dsl::eval(expr, expand_order);
      if (expand_format == "json") {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& [e, c] : s.terms()) coeffs.push_back({e, qhecke::to_string(c)});
        nlohmann::json out{{"order", s.order()}, {"coeffs", coeffs}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << qhecke::to_text(s) << "\n";
      }
      return 0;
    }
  } catch (const qhecke::dsl::DslError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
