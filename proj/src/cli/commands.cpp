#include "magic/cli/commands.hpp"

#include <map>
#include <stdexcept>

#include "magic/family.hpp"
#include "magic/homology.hpp"
#include "magic/parallel.hpp"
#include "magic/sparse_poly.hpp"

namespace magic::cli {

namespace {

const std::map<std::string, std::vector<std::string>>& column_table() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"class",
       {"x", "y", "z", "norm", "in_cone", "primitive", "genus", "n_total", "b_alpha", "b_beta",
        "b_gamma", "prongs_alpha", "prongs_beta", "prongs_gamma", "polynomial", "lambda_lo",
        "lambda_hi"}},
      {"family",
       {"g", "p", "x", "y", "z", "primitive", "no_one_prong", "n_total", "b_alpha", "b_gamma",
        "prongs_alpha", "prongs_gamma", "r_lo", "r_hi"}},
      {"bounds",
       {"g", "n", "status", "witness_p", "filled", "bound_lo", "bound_hi", "candidates"}},
      {"star", {"g", "modulus", "modulus_prime", "star", "witness_s", "star_star"}},
      {"asymp bracket", {"m", "lambda_lo", "lambda_hi", "lower", "upper", "holds"}},
      {"asymp ratio", {"m", "n", "lambda_lo", "lambda_hi", "ratio_lo", "ratio_hi"}},
      {"verify", {"suite", "cases", "failures", "passed", "first_failure"}},
  };
  return table;
}

Record start(const std::string& command, const GlobalOptions& opts) {
  Record r;
  r.command = command;
  r.tolerances = opts.tolerances();
  r.columns = columns_for(command);
  return r;
}

bool prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string candidate_summary(const std::vector<BoundCandidate>& candidates) {
  std::string s;
  for (const auto& c : candidates) {
    if (!s.empty()) s += ";";
    s += std::to_string(c.p) + ":";
    s += !c.primitive ? "nonprimitive" : !c.no_one_prong ? "one_prong" : "ok";
  }
  return s;
}

}  // namespace

RootOptions GlobalOptions::root_options() const {
  RootOptions o;
  o.tol = tol;
  o.max_bits = max_bits;
  o.start_bits = std::min(o.start_bits, max_bits);
  return o;
}

Json GlobalOptions::tolerances() const {
  Json j;
  j["tol"] = format_double(tol);
  j["start_bits"] = root_options().start_bits;
  j["max_bits"] = max_bits;
  return j;
}

const std::vector<std::string>& columns_for(const std::string& table) {
  return column_table().at(table);
}

CommandResult cmd_class(std::int64_t x, std::int64_t y, std::int64_t z, bool norm_only,
                        const GlobalOptions& opts) {
  CommandResult res;
  Record& r = res.record;
  r = start("class", opts);
  r.inputs = {{"x", x}, {"y", y}, {"z", z}, {"norm_only", norm_only}};

  const FiberedClass c{x, y, z};
  check_range(c);
  std::vector<Json> row(r.columns.size());
  row[0] = x;
  row[1] = y;
  row[2] = z;
  row[3] = integer_cell(thurston_norm(c));
  const bool cone = in_cone_delta(c);
  row[4] = cone;
  const bool zero = x == 0 && y == 0 && z == 0;
  if (!zero) row[5] = is_primitive(c);

  if (!norm_only) {
    if (zero) {
      res.exit_code = kUsage;
      res.diagnostic = "class: the zero class has no primitivity or fiber";
    } else if (!cone) {
      res.exit_code = kUsage;
      res.diagnostic = "class: " + to_string(c) + " is not in the open cone over Delta";
    } else if (!row[5].get<bool>()) {
      res.exit_code = kUsage;
      res.diagnostic = "class: " + to_string(c) + " is not primitive";
    } else {
      const FiberData d = fiber_data(c);
      row[6] = integer_cell(d.genus);
      row[7] = integer_cell(d.n_total);
      row[8] = integer_cell(d.boundary.alpha);
      row[9] = integer_cell(d.boundary.beta);
      row[10] = integer_cell(d.boundary.gamma);
      row[11] = integer_cell(d.prongs_alpha);
      row[12] = integer_cell(d.prongs_beta);
      row[13] = integer_cell(d.prongs_gamma);
      const SparsePoly f = teichmuller_poly(c);
      row[14] = f.to_string();
      const auto root = unique_root_gt1(f, opts.root_options());
      const int digits = digits_for(opts.tol);
      row[15] = lower_cell(root.lo, digits);
      row[16] = upper_cell(root.hi, digits);
    }
  }
  r.rows.push_back(std::move(row));
  return res;
}

CommandResult cmd_family(std::int64_t g, std::int64_t p_min, std::int64_t p_max,
                         const GlobalOptions& opts) {
  if (g < 0 || p_min < 0 || p_max < p_min) {
    throw std::invalid_argument("family: requires g >= 0 and 0 <= p_min <= p_max");
  }
  CommandResult res;
  Record& r = res.record;
  r = start("family", opts);
  r.inputs = {{"g", g}, {"p_min", p_min}, {"p_max", p_max}};

  const auto count = static_cast<std::size_t>(p_max - p_min + 1);
  r.rows.assign(count, std::vector<Json>(r.columns.size()));
  const int digits = digits_for(opts.tol);
  parallel_for(count, opts.jobs, [&](std::size_t i) {
    const std::int64_t p = p_min + static_cast<std::int64_t>(i);
    auto& row = r.rows[i];
    const FamilyClass fc = agp_class(g, p);
    row[0] = g;
    row[1] = p;
    row[2] = fc.cls.x;
    row[3] = fc.cls.y;
    row[4] = fc.cls.z;
    row[5] = fc.primitive;
    if (fc.primitive) {
      const FiberData d = agp_fiber_closed_form(g, p);
      row[6] = no_one_prong(g, p);
      row[7] = integer_cell(d.n_total);
      row[8] = integer_cell(d.boundary.alpha);
      row[9] = integer_cell(d.boundary.gamma);
      row[10] = integer_cell(d.prongs_alpha);
      row[11] = integer_cell(d.prongs_gamma);
    }
    const auto root = dilatation_r(g, p, opts.root_options());
    row[12] = lower_cell(root.lo, digits);
    row[13] = upper_cell(root.hi, digits);
  });
  return res;
}

CommandResult cmd_bounds(std::int64_t g, std::int64_t n_min, std::int64_t n_max,
                         const GlobalOptions& opts) {
  CommandResult res;
  Record& r = res.record;
  r = start("bounds", opts);
  r.inputs = {{"g", g}, {"n_min", n_min}, {"n_max", n_max}};

  const auto table = upper_bound_table(g, n_min, n_max, opts.root_options(), opts.jobs);
  const int digits = digits_for(opts.tol);
  std::int64_t missing = 0;
  for (const auto& row : table) {
    std::vector<Json> cells(r.columns.size());
    cells[0] = g;
    cells[1] = row.n;
    cells[7] = candidate_summary(row.candidates);
    if (row.record) {
      cells[2] = "bound";
      cells[3] = row.record->witness_p;
      cells[4] = row.record->filled.to_string();
      cells[5] = lower_cell(row.record->bound.lo, digits);
      cells[6] = upper_cell(row.record->bound.hi, digits);
    } else {
      cells[2] = "no_witness";
      ++missing;
    }
    r.rows.push_back(std::move(cells));
  }
  r.summary["rows"] = static_cast<std::int64_t>(table.size());
  r.summary["no_witness"] = missing;
  return res;
}

CommandResult cmd_star(std::int64_t g_min, std::int64_t g_max, const GlobalOptions& opts) {
  if (g_min < 2 || g_max < g_min) {
    throw std::invalid_argument("star: requires 2 <= min <= max");
  }
  CommandResult res;
  Record& r = res.record;
  r = start("star", opts);
  r.inputs = {{"min", g_min}, {"max", g_max}};
  std::int64_t failing = 0;
  for (std::int64_t g = g_min; g <= g_max; ++g) {
    const StarResult s = condition_star(g);
    std::vector<Json> cells(r.columns.size());
    cells[0] = g;
    cells[1] = 2 * g + 1;
    cells[2] = prime(2 * g + 1);
    cells[3] = s.holds;
    if (s.witness) cells[4] = *s.witness;
    if (g >= 5) cells[5] = condition_star_star(g);
    if (!s.holds) ++failing;
    r.rows.push_back(std::move(cells));
  }
  r.summary["failing"] = failing;
  return res;
}

PmFamily FamilyChoice::build() const {
  if (q.empty()) return b_family(g.value_or(2));
  std::vector<RawTerm> terms;
  std::size_t start = 0;
  while (start <= q.size()) {
    const std::size_t end = std::min(q.find(',', start), q.size());
    const std::string item = q.substr(start, end - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("--Q: expected exponent:coefficient, got '" + item + "'");
    }
    std::size_t used = 0;
    const std::int64_t e = std::stoll(item.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("--Q: bad exponent in '" + item + "'");
    const std::string coeff = item.substr(colon + 1);
    mpz_class c;
    if (coeff.empty() || c.set_str(coeff, 10) != 0) {
      throw std::invalid_argument("--Q: bad coefficient in '" + item + "'");
    }
    terms.push_back({e, c});
    start = end + 1;
  }
  PmFamily fam;
  fam.r = r;
  fam.s = s;
  fam.u = u;
  fam.q = make_poly(terms);
  fam.validate();
  return fam;
}

Json FamilyChoice::describe() const {
  const PmFamily fam = build();
  Json j;
  if (q.empty()) j["g"] = g.value_or(2);
  j["r"] = fam.r;
  j["s"] = fam.s;
  j["u"] = fam.u;
  j["Q"] = fam.q.to_string();
  return j;
}

CommandResult cmd_asymp_bracket(const FamilyChoice& choice, double c1, double c2, std::int64_t m_min,
                                std::int64_t m_max, const GlobalOptions& opts) {
  CommandResult res;
  Record& r = res.record;
  r = start("asymp bracket", opts);
  r.inputs = {{"family", choice.describe()},
              {"c1", format_double(c1)},
              {"c2", format_double(c2)},
              {"m_min", m_min},
              {"m_max", m_max}};

  const auto report =
      bracket_check(choice.build(), c1, c2, m_min, m_max, opts.root_options(), opts.jobs);
  for (const auto& row : report.rows) {
    const int digits = digits_for(row.lambda.tol);
    r.rows.push_back({row.m, lower_cell(row.lambda.lo, digits),
                      upper_cell(row.lambda.hi, digits), to_string(row.lower),
                      to_string(row.upper), row.holds()});
  }
  r.summary["largest_failure"] =
      report.largest_failure ? Json(*report.largest_failure) : Json(nullptr);
  r.summary["threshold"] = report.threshold ? Json(*report.threshold) : Json(nullptr);
  r.summary["holds_on_terminal_segment"] = report.holds_on_terminal_segment();
  return res;
}

CommandResult cmd_asymp_ratio(const FamilyChoice& choice, std::int64_t q, std::int64_t v,
                              const std::vector<std::int64_t>& m_list,
                              const GlobalOptions& opts) {
  CommandResult res;
  Record& r = res.record;
  r = start("asymp ratio", opts);
  r.inputs = {{"family", choice.describe()}, {"q", q}, {"v", v}, {"m", m_list}};

  const auto table = ratio_limit_table(choice.build(), q, v, m_list, opts.root_options(), opts.jobs);
  const int digits = digits_for(opts.tol);
  for (const auto& row : table.rows) {
    r.rows.push_back({row.m, row.n, lower_cell(row.lambda.lo, digits),
                      upper_cell(row.lambda.hi, digits), lower_cell(row.ratio.lo, 20),
                      upper_cell(row.ratio.hi, 20)});
  }
  r.summary["trend"] = to_string(table.trend);
  r.summary["deviation_decreasing"] = table.deviation_decreasing;
  return res;
}

}  // namespace magic::cli
