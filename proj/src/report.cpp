#include "hg/report.hpp"

#include <cmath>

namespace hg {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skip: return "skip";
    case Outcome::info: return "info";
  }
  return "info";
}

void VerificationReport::set_parameter(std::string key, std::string value) {
  for (auto& [k, v] : parameters_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  parameters_.emplace_back(std::move(key), std::move(value));
}

void VerificationReport::set_metric(std::string key, double value) {
  for (auto& [k, v] : metrics_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  metrics_.emplace_back(std::move(key), value);
}

std::optional<double> VerificationReport::metric(const std::string& key) const {
  for (const auto& [k, v] : metrics_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

void VerificationReport::add_note(std::string note) { notes_.push_back(std::move(note)); }

void VerificationReport::add(Record record) {
  switch (record.outcome) {
    case Outcome::pass: ++summary_.passed; break;
    case Outcome::fail: ++summary_.failed; break;
    case Outcome::skip: ++summary_.skipped; break;
    case Outcome::info: ++summary_.info; break;
  }
  records_.push_back(std::move(record));
}

void VerificationReport::append_records(const VerificationReport& other) {
  for (const auto& r : other.records_) add(r);
}

namespace {

nlohmann::ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

nlohmann::ordered_json VerificationReport::to_json() const {
  using json = nlohmann::ordered_json;
  json out;
  out["suite"] = suite_;
  json params = json::object();
  for (const auto& [k, v] : parameters_) params[k] = v;
  out["parameters"] = params;
  out["summary"] = {{"passed", summary_.passed},
                    {"failed", summary_.failed},
                    {"skipped", summary_.skipped},
                    {"info", summary_.info},
                    {"total", summary_.total()}};
  json metrics = json::object();
  for (const auto& [k, v] : metrics_) metrics[k] = number(v);
  out["metrics"] = metrics;
  out["notes"] = notes_;
  json records = json::array();
  for (const auto& r : records_) {
    json rec;
    rec["case"] = r.case_id;
    rec["point"] = r.point ? json::array({to_string(r.point->x), to_string(r.point->y)}) : json(nullptr);
    rec["outcome"] = std::string(to_string(r.outcome));
    json exact = json::object();
    for (const auto& [k, v] : r.exact) exact[k] = v;
    rec["exact"] = exact;
    json numeric = json::object();
    for (const auto& [k, v] : r.numeric) numeric[k] = number(v);
    rec["numeric"] = numeric;
    if (!r.reason.empty()) rec["reason"] = r.reason;
    records.push_back(std::move(rec));
  }
  out["records"] = std::move(records);
  return out;
}

}  // namespace hg
