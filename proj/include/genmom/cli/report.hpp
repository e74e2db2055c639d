#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "genmom/cli/config.hpp"

namespace genmom::cli {

using ordered_json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;
inline constexpr const char* artifact_version = "0.1.0";

enum class Status { pass, flag, fail };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::flag: return "flag";
    case Status::fail: return "fail";
  }
  return "?";
}

struct Record {
  std::string suite;
  std::string id;
  ordered_json inputs = ordered_json::object();
  double value = 0.0;                // primary measured quantity
  std::optional<double> tolerance;   // absent for report-only data
  Status status = Status::pass;
  ordered_json details = ordered_json::object();
};

struct Report {
  std::string suite;
  ordered_json environment = ordered_json::object();
  std::vector<Record> records;

  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.status == s ? 1 : 0;
    return n;
  }
  bool failed() const { return count(Status::fail) > 0; }
};

/// 17 significant digits, '.' separator, independent of the global locale.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace detail {

// JSON cannot carry inf/nan; they become strings so the report stays valid.
inline ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

}  // namespace detail

inline ordered_json to_json(const Report& r) {
  ordered_json j;
  j["schema"] = schema_version;
  j["suite"] = r.suite;
  j["environment"] = r.environment;
  ordered_json recs = ordered_json::array();
  for (const auto& rec : r.records) {
    ordered_json o;
    o["suite"] = rec.suite;
    o["id"] = rec.id;
    o["inputs"] = rec.inputs;
    o["value"] = detail::number(rec.value);
    o["tolerance"] = rec.tolerance ? detail::number(*rec.tolerance) : ordered_json(nullptr);
    o["status"] = to_string(rec.status);
    if (!rec.details.empty()) o["details"] = rec.details;
    recs.push_back(std::move(o));
  }
  j["records"] = std::move(recs);
  j["summary"] = {{"pass", r.count(Status::pass)},
                  {"flag", r.count(Status::flag)},
                  {"fail", r.count(Status::fail)}};
  return j;
}

inline std::string to_csv(const Report& r) {
  std::string out = "suite,id,status,value,tolerance\n";
  for (const auto& rec : r.records) {
    out += rec.suite + "," + rec.id + "," + to_string(rec.status) + "," + format_double(rec.value) + "," +
           (rec.tolerance ? format_double(*rec.tolerance) : std::string()) + "\n";
  }
  return out;
}

inline std::string render(const Report& r, Format f) {
  return f == Format::json ? to_json(r).dump(2) + "\n" : to_csv(r);
}

}  // namespace genmom::cli
