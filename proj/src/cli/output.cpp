#include "magic/cli/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

namespace magic::cli {

namespace {

std::string cell_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const Json& v) {
  if (v.is_null()) return "";
  std::string s = cell_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void render_plain(const Record& r, std::ostream& out) {
  out << "# magicfiber " << r.command << "\n";
  out << "# inputs: " << r.inputs.dump() << "\n";
  out << "# tolerances: " << r.tolerances.dump() << "\n";
  out << "# vol(N) ~ " << kMagicVolume << " (informational)\n";

  std::vector<std::size_t> width(r.columns.size());
  for (std::size_t c = 0; c < r.columns.size(); ++c) width[c] = r.columns[c].size();
  for (const auto& row : r.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], cell_text(row[c]).size());
    }
  }
  auto line = [&](auto&& text_of) {
    std::string s;
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
      std::string t = text_of(c);
      if (c + 1 < r.columns.size()) t.resize(width[c], ' ');
      s += t;
      if (c + 1 < r.columns.size()) s += "  ";
    }
    out << s << "\n";
  };
  line([&](std::size_t c) { return r.columns[c]; });
  for (const auto& row : r.rows) line([&](std::size_t c) { return cell_text(row[c]); });
  for (const auto& [key, value] : r.summary.items()) {
    out << "# " << key << ": " << cell_text(value) << "\n";
  }
}

void render_csv(const Record& r, std::ostream& out) {
  for (std::size_t c = 0; c < r.columns.size(); ++c) {
    out << (c ? "," : "") << r.columns[c];
  }
  out << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
    out << "\n";
  }
}

}  // namespace

Json to_json(const Record& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["tolerances"] = r.tolerances;
  j["info"] = {{"volume_N", kMagicVolume}};
  j["columns"] = r.columns;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < r.columns.size(); ++c) obj[r.columns[c]] = row[c];
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  j["summary"] = r.summary;
  return j;
}

void render(const Record& record, Format format, std::ostream& out) {
  switch (format) {
    case Format::plain: render_plain(record, out); break;
    case Format::csv: render_csv(record, out); break;
    case Format::json: out << to_json(record).dump(2) << "\n"; break;
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json integer_cell(wide_int v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

Json lower_cell(const Dyadic& lo, int digits) { return lo.to_decimal(digits, false); }
Json upper_cell(const Dyadic& hi, int digits) { return hi.to_decimal(digits, true); }

int digits_for(double tol) {
  const int needed = static_cast<int>(std::ceil(-std::log10(tol))) + 4;
  return std::max(20, needed);
}

}  // namespace magic::cli
