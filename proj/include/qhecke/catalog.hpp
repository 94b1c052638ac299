#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhecke/rational.hpp"

namespace qhecke {

/// One identity LHS = RHS, both sides written in the expression language.
struct IdentityRecord {
  std::string id;
  std::string lhs;
  std::string rhs;
  std::int64_t default_order = 100;
  std::string reference;
  std::int64_t min_exponent = 0;  // lowest exponent compared, e.g. -1
};

struct VerificationReport {
  std::string id;
  std::int64_t order = 0;
  bool equal = false;
  std::optional<std::int64_t> first_mismatch;
  std::optional<Rational> lhs_coeff;
  std::optional<Rational> rhs_coeff;
  double elapsed_seconds = 0;
  /// Set when a side failed to evaluate; equal is false and there is no mismatch.
  std::optional<std::string> error;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

class Catalog {
 public:
  /// Parses {"identities": [{id, lhs, rhs, order, reference, min_exponent}, ...]}.
  /// Throws std::invalid_argument on malformed data, duplicate ids, an order
  /// below 10, or an expression that does not parse.
  static Catalog from_json(std::string_view text);
  static Catalog from_file(const std::string& path);
  /// The catalog compiled into the library.
  static const Catalog& builtin();

  const std::vector<IdentityRecord>& records() const { return records_; }
  const IdentityRecord* find(std::string_view id) const;

 private:
  std::vector<IdentityRecord> records_;
};

/// The built-in identity list.
const std::vector<IdentityRecord>& registry();

/// Evaluates both sides to `order` (default: the record's) and compares every
/// exponent from min(min_exponent, lowest nonzero exponent) up to the order.
VerificationReport verify(const IdentityRecord& record, std::optional<std::int64_t> order = std::nullopt);
/// Throws std::out_of_range for an unknown id.
VerificationReport verify(const Catalog& catalog, std::string_view id, std::optional<std::int64_t> order = std::nullopt);

/// Verifies every record, in parallel over `threads` workers (0: the
/// QHECKE_THREADS environment variable, then the hardware concurrency).
/// Reports come back in catalog order.
std::vector<VerificationReport> verify_all(const Catalog& catalog, std::optional<std::int64_t> order = std::nullopt,
                                           unsigned threads = 0);

unsigned default_thread_count();

std::string report_to_json(const VerificationReport& report);
std::string reports_to_json(const std::vector<VerificationReport>& reports);
/// Inverse of report_to_json; throws std::invalid_argument on bad input.
VerificationReport report_from_json(std::string_view text);

}  // namespace qhecke
