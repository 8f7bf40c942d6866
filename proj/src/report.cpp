#include "report.hpp"

#include <algorithm>
#include <cstdio>

namespace ellsum {

namespace {

std::string fmt_sci(real v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);  // 17 significant digits
  return buf;
}

std::string fmt_g17(real v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string complex_pair(cplx v) {
  return "[" + fmt_g17(v.real()) + "," + fmt_g17(v.imag()) + "]";
}

const char* status_name(RecordStatus s) {
  switch (s) {
    case RecordStatus::pass: return "pass";
    case RecordStatus::fail: return "fail";
    case RecordStatus::skip: return "skip";
  }
  return "?";
}

}  // namespace

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(),
      [](const Record& r) { return r.status == RecordStatus::pass; }));
}

std::size_t VerificationReport::failed() const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(),
      [](const Record& r) { return r.status == RecordStatus::fail; }));
}

std::size_t VerificationReport::skipped() const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(),
      [](const Record& r) { return r.status == RecordStatus::skip; }));
}

real VerificationReport::max_residual() const {
  real m = 0.0;
  for (const Record& r : records)
    if (r.has_residual) m = std::max(m, r.residual);
  return m;
}

double VerificationReport::total_wall_ms() const {
  double total = 0.0;
  for (const Record& r : records) total += r.wall_ms;
  return total;
}

std::string render_json(const VerificationReport& report) {
  std::string out;
  out.reserve(4096 + 320 * report.records.size());
  out += "{\n  \"schema\": 1,\n  \"config\": {\n";
  out += "    \"mode\": \"" + json_escape(report.config.mode) + "\",\n";
  out += "    \"n\": [";
  for (std::size_t i = 0; i < report.config.n_values.size(); ++i)
    out += (i ? "," : "") + std::to_string(report.config.n_values[i]);
  out += "],\n    \"N\": [";
  for (std::size_t i = 0; i < report.config.N_values.size(); ++i)
    out += (i ? "," : "") + std::to_string(report.config.N_values[i]);
  out += "],\n";
  out += "    \"draws\": " + std::to_string(report.config.draws) + ",\n";
  out += "    \"seed\": " + std::to_string(report.config.seed) + ",\n";
  out += "    \"eps_trunc\": " + fmt_sci(report.config.eps_trunc) + ",\n";
  out += std::string("    \"deterministic_sum\": ") +
         (report.config.deterministic_sum ? "true" : "false") + ",\n";
  out += "    \"tolerances\": {";
  for (std::size_t i = 0; i < report.config.tolerance_overrides.size(); ++i) {
    const auto& [k, v] = report.config.tolerance_overrides[i];
    out += (i ? "," : "") + std::string("\"") + json_escape(k) + "\": " + fmt_sci(v);
  }
  out += "}\n  },\n  \"records\": [\n";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const Record& r = report.records[i];
    out += "    {\"check\": \"" + json_escape(r.check) + "\"";
    out += ", \"n\": " + std::to_string(r.n);
    out += ", \"N\": " + std::to_string(r.N);
    out += ", \"draw\": " + std::to_string(r.draw);
    out += ", \"case\": \"" + json_escape(r.subcase) + "\"";
    out += ", \"params\": {";
    for (std::size_t j = 0; j < r.params.size(); ++j) {
      out += (j ? "," : "") + std::string("\"") + json_escape(r.params[j].first) +
             "\": " + complex_pair(r.params[j].second);
    }
    out += "}";
    out += ", \"residual\": " + (r.has_residual ? fmt_sci(r.residual) : "null");
    out += ", \"tol\": " + fmt_sci(r.tol);
    out += std::string(", \"status\": \"") + status_name(r.status) + "\"";
    if (!r.note.empty()) out += ", \"note\": \"" + json_escape(r.note) + "\"";
    out += i + 1 < report.records.size() ? "},\n" : "}\n";
  }
  out += "  ],\n  \"summary\": {";
  out += "\"total\": " + std::to_string(report.records.size());
  out += ", \"passed\": " + std::to_string(report.passed());
  out += ", \"failed\": " + std::to_string(report.failed());
  out += ", \"skipped\": " + std::to_string(report.skipped());
  out += ", \"max_residual\": " + fmt_sci(report.max_residual());
  out += ", \"seed\": " + std::to_string(report.config.seed);
  out += "}\n}\n";
  return out;
}

std::string render_csv(const VerificationReport& report) {
  std::string out;
  out += "# schema=1 mode=" + report.config.mode +
         " seed=" + std::to_string(report.config.seed) + "\n";
  out += "check,n,N,draw,case,residual,tol,status,params,note\n";
  for (const Record& r : report.records) {
    out += r.check + "," + std::to_string(r.n) + "," + std::to_string(r.N) + "," +
           std::to_string(r.draw) + "," + r.subcase + ",";
    out += r.has_residual ? fmt_sci(r.residual) : "";
    out += "," + fmt_sci(r.tol) + "," + status_name(r.status) + ",\"";
    for (std::size_t j = 0; j < r.params.size(); ++j) {
      out += (j ? ";" : "") + r.params[j].first + "=" + fmt_g17(r.params[j].second.real()) +
             " " + fmt_g17(r.params[j].second.imag());
    }
    out += "\",\"" + r.note + "\"\n";
  }
  out += "# total=" + std::to_string(report.records.size()) +
         " passed=" + std::to_string(report.passed()) +
         " failed=" + std::to_string(report.failed()) +
         " skipped=" + std::to_string(report.skipped()) +
         " max_residual=" + fmt_sci(report.max_residual()) + "\n";
  return out;
}

}  // namespace ellsum
