#pragma once

#include "hg/harmonic.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hg {

enum class Outcome { pass, fail, skip, info };

std::string_view to_string(Outcome outcome);

struct Record {
  std::string case_id;
  std::optional<Point2> point;
  Outcome outcome = Outcome::info;
  std::vector<std::pair<std::string, std::string>> exact;  // rendered exact values
  std::vector<std::pair<std::string, double>> numeric;
  std::string reason;
};

struct Summary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t info = 0;

  std::size_t total() const { return passed + failed + skipped + info; }
  friend bool operator==(const Summary&, const Summary&) = default;
};

// Outcome of one suite run. Records keep insertion order; the summary is
// kept in step with them by add().
class VerificationReport {
 public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  void set_parameter(std::string key, std::string value);
  void set_metric(std::string key, double value);
  void add_note(std::string note);
  void add(Record record);
  // Appends other's records in order; parameters and metrics are not merged.
  void append_records(const VerificationReport& other);

  const std::string& suite() const { return suite_; }
  const std::vector<Record>& records() const { return records_; }
  const Summary& summary() const { return summary_; }
  const std::vector<std::string>& notes() const { return notes_; }
  std::optional<double> metric(const std::string& key) const;
  bool ok() const { return summary_.failed == 0; }

  nlohmann::ordered_json to_json() const;

 private:
  std::string suite_;
  std::vector<std::pair<std::string, std::string>> parameters_;
  std::vector<std::pair<std::string, double>> metrics_;
  std::vector<std::string> notes_;
  std::vector<Record> records_;
  Summary summary_;
};

}  // namespace hg
