#include "qhecke/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qhecke/dsl.hpp"

namespace qhecke {

namespace detail {
std::string_view builtin_catalog_json();
}

namespace {

using nlohmann::json;

IdentityRecord record_from_json(const json& j) {
  IdentityRecord r;
  r.id = j.at("id").get<std::string>();
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  r.default_order = j.value("order", std::int64_t{100});
  r.reference = j.value("reference", std::string());
  r.min_exponent = j.value("min_exponent", std::int64_t{0});
  return r;
}

json report_json(const VerificationReport& r) {
  json j;
  j["id"] = r.id;
  j["order"] = r.order;
  j["equal"] = r.equal;
  j["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
  j["lhs_coeff"] = r.lhs_coeff ? json(to_string(*r.lhs_coeff)) : json(nullptr);
  j["rhs_coeff"] = r.rhs_coeff ? json(to_string(*r.rhs_coeff)) : json(nullptr);
  j["elapsed_seconds"] = r.elapsed_seconds;
  if (r.error) j["error"] = *r.error;
  return j;
}

}  // namespace

Catalog Catalog::from_json(std::string_view text) {
  Catalog out;
  std::set<std::string> seen;
  try {
    const json doc = json::parse(text);
    for (const auto& item : doc.at("identities")) {
      IdentityRecord r = record_from_json(item);
      if (!seen.insert(r.id).second) throw std::invalid_argument("duplicate identity id '" + r.id + "'");
      if (r.default_order < 10) throw std::invalid_argument("identity '" + r.id + "' has order below 10");
      for (const auto* side : {&r.lhs, &r.rhs}) {
        try {
          dsl::parse(*side);
        } catch (const dsl::DslError& e) {
          throw std::invalid_argument("identity '" + r.id + "': " + e.what());
        }
      }
      out.records_.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed catalog: ") + e.what());
  }
  return out;
}

Catalog Catalog::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open catalog file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = from_json(detail::builtin_catalog_json());
  return catalog;
}

const IdentityRecord* Catalog::find(std::string_view id) const {
  auto it = std::find_if(records_.begin(), records_.end(), [&](const IdentityRecord& r) { return r.id == id; });
  return it == records_.end() ? nullptr : &*it;
}

const std::vector<IdentityRecord>& registry() { return Catalog::builtin().records(); }

VerificationReport verify(const IdentityRecord& record, std::optional<std::int64_t> order) {
  VerificationReport report;
  report.id = record.id;
  report.order = order.value_or(record.default_order);
  const auto start = std::chrono::steady_clock::now();
  try {
    const LaurentSeries lhs = dsl::eval(record.lhs, report.order);
    const LaurentSeries rhs = dsl::eval(record.rhs, report.order);
    std::int64_t lo = record.min_exponent;
    for (const auto* s : {&lhs, &rhs}) {
      if (auto v = s->valuation()) lo = std::min(lo, *v);
    }
    report.first_mismatch = first_mismatch(lhs, rhs, lo, report.order);
    report.equal = !report.first_mismatch;
    if (report.first_mismatch) {
      report.lhs_coeff = lhs.coefficient(*report.first_mismatch);
      report.rhs_coeff = rhs.coefficient(*report.first_mismatch);
    }
  } catch (const std::exception& e) {
    report.equal = false;
    report.error = e.what();
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify(const Catalog& catalog, std::string_view id, std::optional<std::int64_t> order) {
  const IdentityRecord* r = catalog.find(id);
  if (!r) throw std::out_of_range("unknown identity id '" + std::string(id) + "'");
  return verify(*r, order);
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("QHECKE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<VerificationReport> verify_all(const Catalog& catalog, std::optional<std::int64_t> order,
                                           unsigned threads) {
  const auto& records = catalog.records();
  std::vector<VerificationReport> reports(records.size());
  if (threads == 0) threads = default_thread_count();
  threads = std::min<unsigned>(threads, std::max<std::size_t>(records.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) reports[i] = verify(records[i], order);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return reports;
}

std::string report_to_json(const VerificationReport& report) { return report_json(report).dump(); }

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

VerificationReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    r.order = j.at("order").get<std::int64_t>();
    r.equal = j.at("equal").get<bool>();
    if (!j.at("first_mismatch").is_null()) r.first_mismatch = j.at("first_mismatch").get<std::int64_t>();
    if (!j.at("lhs_coeff").is_null()) r.lhs_coeff = parse_rational(j.at("lhs_coeff").get<std::string>());
    if (!j.at("rhs_coeff").is_null()) r.rhs_coeff = parse_rational(j.at("rhs_coeff").get<std::string>());
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace qhecke
