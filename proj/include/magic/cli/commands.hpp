#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magic/asymptotics.hpp"
#include "magic/certified.hpp"
#include "magic/cli/output.hpp"

namespace magic::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kPrecision = 3 };

struct GlobalOptions {
  double tol = kDefaultTol;
  std::size_t max_bits = kDefaultMaxBits;
  Format format = Format::plain;
  unsigned jobs = 1;

  RootOptions root_options() const;
  Json tolerances() const;
};

struct CommandResult {
  Record record;
  int exit_code = kOk;
  std::string diagnostic;  // written to stderr when non-empty
};

/// Fixed column list of each table, also shown in --help.
const std::vector<std::string>& columns_for(const std::string& table);

CommandResult cmd_class(std::int64_t x, std::int64_t y, std::int64_t z, bool norm_only,
                        const GlobalOptions& opts);
CommandResult cmd_family(std::int64_t g, std::int64_t p_min, std::int64_t p_max,
                         const GlobalOptions& opts);
CommandResult cmd_bounds(std::int64_t g, std::int64_t n_min, std::int64_t n_max,
                         const GlobalOptions& opts);
CommandResult cmd_star(std::int64_t g_min, std::int64_t g_max, const GlobalOptions& opts);

/// P_m family selection for the asymptotic sweeps: either the B-family of
/// genus g, or explicit (r, s, u, Q).
struct FamilyChoice {
  std::optional<std::int64_t> g;
  std::int64_t r = 0;
  std::int64_t s = 1;
  std::int64_t u = 1;
  std::string q;  // "e:c,e:c,..."; empty selects the B-family

  PmFamily build() const;
  Json describe() const;
};

CommandResult cmd_asymp_bracket(const FamilyChoice& fam, double c1, double c2, std::int64_t m_min,
                                std::int64_t m_max, const GlobalOptions& opts);
CommandResult cmd_asymp_ratio(const FamilyChoice& fam, std::int64_t q, std::int64_t v,
                              const std::vector<std::int64_t>& m_list, const GlobalOptions& opts);

/// Suites: all, homology, poly, family, roots, star, bounds.
const std::vector<std::string>& verify_suites();
CommandResult cmd_verify(const std::string& suite, const GlobalOptions& opts);

}  // namespace magic::cli
