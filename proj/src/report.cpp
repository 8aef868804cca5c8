#include "basel/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace basel {

namespace {

std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_string(std::string_view s) {
  // nlohmann's dump handles escaping of arbitrary reason strings.
  return nlohmann::json(std::string(s)).dump();
}

std::string render_json(const Report& r) {
  std::ostringstream os;
  os << "{\"version\":" << json_string(r.version)
     << ",\"timestamp\":" << json_string(r.timestamp)
     << ",\"tolerance\":{\"abs\":" << number(r.tol_abs)
     << ",\"rel\":" << number(r.tol_rel) << "},\"outcomes\":[";
  for (std::size_t i = 0; i < r.outcomes.size(); ++i) {
    const auto& o = r.outcomes[i];
    if (i > 0) os << ',';
    os << "\n{\"id\":" << json_string(o.id) << ",\"params\":{";
    for (std::size_t k = 0; k < o.params.size(); ++k) {
      if (k > 0) os << ',';
      os << json_string(o.params[k].name) << ':' << number(o.params[k].value);
    }
    os << "},\"lhs\":" << number(o.lhs) << ",\"rhs\":" << number(o.rhs)
       << ",\"abs_error\":" << number(o.abs_error)
       << ",\"rel_error\":" << number(o.rel_error)
       << ",\"pass\":" << (o.pass ? "true" : "false")
       << ",\"reason\":" << json_string(o.reason) << ",\"work\":{\"evals\":"
       << o.work.evals << ",\"terms\":" << o.work.terms << "}}";
  }
  os << "],\"summary\":{\"passed\":" << r.summary.passed
     << ",\"failed\":" << r.summary.failed
     << ",\"not_converged\":" << r.summary.not_converged << "}}\n";
  return os.str();
}

std::string params_text(const ParamPoint& params) {
  std::string s;
  for (const auto& p : params) {
    if (!s.empty()) s += ' ';
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s=%.6g", p.name.c_str(), p.value);
    s += buf;
  }
  return s.empty() ? "-" : s;
}

std::string render_table(const Report& r) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-8s %-16s %22s %22s %10s %-4s %s\n",
                "id", "params", "lhs", "rhs", "abs_err", "ok", "reason");
  os << line;
  for (const auto& o : r.outcomes) {
    std::snprintf(line, sizeof line,
                  "%-8s %-16s %22.15g %22.15g %10.2e %-4s %s\n", o.id.c_str(),
                  params_text(o.params).c_str(), o.lhs, o.rhs, o.abs_error,
                  o.pass ? "yes" : "NO", o.reason.c_str());
    os << line;
  }
  os << "passed " << r.summary.passed << ", failed " << r.summary.failed
     << " (not converged " << r.summary.not_converged << ")\n";
  return os.str();
}

double get_number(const nlohmann::ordered_json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "table") return ReportFormat::table;
  throw std::invalid_argument("unknown report format: " + std::string(name));
}

std::string render_report(const Report& report, ReportFormat format) {
  return format == ReportFormat::json ? render_json(report)
                                      : render_table(report);
}

Report parse_report_json(std::string_view text) {
  try {
    const auto j = nlohmann::ordered_json::parse(text);
    Report r;
    r.version = j.at("version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    r.tol_abs = get_number(j.at("tolerance").at("abs"));
    r.tol_rel = get_number(j.at("tolerance").at("rel"));
    for (const auto& jo : j.at("outcomes")) {
      VerificationOutcome o;
      o.id = jo.at("id").get<std::string>();
      for (const auto& [k, v] : jo.at("params").items()) {
        o.params.push_back({k, get_number(v)});
      }
      o.lhs = get_number(jo.at("lhs"));
      o.rhs = get_number(jo.at("rhs"));
      o.abs_error = get_number(jo.at("abs_error"));
      o.rel_error = get_number(jo.at("rel_error"));
      o.pass = jo.at("pass").get<bool>();
      o.reason = jo.at("reason").get<std::string>();
      o.work.evals = jo.at("work").at("evals").get<std::size_t>();
      o.work.terms = jo.at("work").at("terms").get<std::size_t>();
      r.outcomes.push_back(std::move(o));
    }
    const auto& s = j.at("summary");
    r.summary.passed = s.at("passed").get<std::size_t>();
    r.summary.failed = s.at("failed").get<std::size_t>();
    r.summary.not_converged = s.at("not_converged").get<std::size_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
}

}  // namespace basel
