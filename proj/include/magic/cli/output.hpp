#pragma once

// Tabular records shared by every subcommand and their plain, CSV and JSON
// renderings. Numeric approximations only ever appear as decimal lo/hi
// strings; integers and booleans are emitted as exact JSON values.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "magic/dyadic.hpp"
#include "magic/homology.hpp"

namespace magic::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
/// Hyperbolic volume of the magic manifold, echoed in headers for reference.
inline constexpr const char* kMagicVolume = "5.3334";

enum class Format { plain, csv, json };

struct Record {
  std::string command;
  Json inputs = Json::object();
  Json tolerances = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;  // one cell per column; null means "not applicable"
  Json summary = Json::object();
};

Json to_json(const Record& record);
void render(const Record& record, Format format, std::ostream& out);

/// Shortest decimal string that reads back as the same double.
std::string format_double(double v);
/// Integer cell; values outside the int64 range become decimal strings.
Json integer_cell(wide_int v);
/// Outward decimal strings for a bracket [lo, hi].
Json lower_cell(const Dyadic& lo, int digits);
Json upper_cell(const Dyadic& hi, int digits);
/// Fractional digits needed to show a bracket of half-width tol faithfully.
int digits_for(double tol);

}  // namespace magic::cli
