#include "magic/cli/app.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

#include "magic/cli/commands.hpp"

namespace magic::cli {

namespace {

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// "a..b" or a single integer.
Range parse_range(const std::string& text, const std::string& flag) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) {
      throw CLI::ValidationError(flag, "expected an integer or a..b range, got '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = to_int(text);
    return {v, v};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

std::string columns_footer(const std::string& table) {
  std::string s = "CSV columns: ";
  const auto& cols = columns_for(table);
  for (std::size_t i = 0; i < cols.size(); ++i) s += (i ? "," : "") + cols[i];
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fiber data, certified dilatations and bound tables for the magic manifold",
               "magicfiber"};
  app.require_subcommand(1);

  GlobalOptions opts;
  std::string format = "plain";
  auto add_globals = [&](CLI::App* a) {
    a->add_option("--tol", opts.tol, "Root bracket half-width (default 1e-12)")
        ->check(CLI::PositiveNumber);
    a->add_option("--max-bits", opts.max_bits, "Precision ceiling in bits (default 1048576)")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
    a->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    a->add_option("--jobs", opts.jobs, "Worker threads; output does not depend on it")
        ->check(CLI::Range(1u, 1024u));
  };
  add_globals(&app);

  std::function<CommandResult()> action;

  auto* cls = app.add_subcommand("class", "Norm, cone membership, fiber data and dilatation of (x,y,z)");
  add_globals(cls);
  std::vector<std::int64_t> xyz;
  bool norm_only = false;
  cls->add_option("xyz", xyz, "Coordinates in the basis alpha, beta, gamma")
      ->expected(3)
      ->required();
  cls->add_flag("--norm-only", norm_only, "Only report norm, cone membership and primitivity");
  cls->footer(columns_footer("class"));
  cls->callback([&] {
    action = [&] { return cmd_class(xyz[0], xyz[1], xyz[2], norm_only, opts); };
  });

  auto* fam = app.add_subcommand("family", "The classes a_(g,p) and their dilatations r_(g,p)");
  add_globals(fam);
  std::int64_t fam_g = 0;
  std::string fam_p = "0..10";
  fam->add_option("-g", fam_g, "Genus")->required();
  fam->add_option("-p", fam_p, "p or range a..b (default 0..10)");
  fam->footer(columns_footer("family"));
  fam->callback([&] {
    const Range p = parse_range(fam_p, "-p");
    action = [&, p] { return cmd_family(fam_g, p.lo, p.hi, opts); };
  });

  auto* bounds = app.add_subcommand("bounds", "Upper bounds for delta_(g,n) from the a_(g,p) family");
  add_globals(bounds);
  std::int64_t bounds_g = 0;
  std::string bounds_n = "3..20";
  bounds->add_option("-g", bounds_g, "Genus (>= 2)")->required();
  bounds->add_option("-n", bounds_n, "Puncture count or range a..b (default 3..20)");
  bounds->footer(columns_footer("bounds"));
  bounds->callback([&] {
    const Range n = parse_range(bounds_n, "-n");
    action = [&, n] { return cmd_bounds(bounds_g, n.lo, n.hi, opts); };
  });

  auto* star = app.add_subcommand("star", "Coprimality condition on 2g+1 for g in [min, max]");
  add_globals(star);
  std::int64_t star_min = 2, star_max = 0;
  star->add_option("--min", star_min, "Smallest genus (default 2)");
  star->add_option("--max", star_max, "Largest genus")->required();
  star->footer(columns_footer("star"));
  star->callback([&] { action = [&] { return cmd_star(star_min, star_max, opts); }; });

  auto* asymp = app.add_subcommand("asymp", "Finite certified evidence for the asymptotic claims");
  add_globals(asymp);
  asymp->require_subcommand(1);
  FamilyChoice choice;
  std::int64_t family_g = 2;
  auto add_family = [&](CLI::App* a) {
    a->add_option("-g", family_g, "B-family genus (default 2)");
    a->add_option("--r", choice.r, "Generic family: r (with --Q)");
    a->add_option("--s", choice.s, "Generic family: s (with --Q)");
    a->add_option("--u", choice.u, "Generic family: u (with --Q)");
    a->add_option("--Q", choice.q, "Generic family: Q as exponent:coefficient,...");
  };

  auto* bracket = asymp->add_subcommand("bracket", "Check m^(c1/m) < lambda_m < m^(c2/m)");
  add_globals(bracket);
  add_family(bracket);
  double c1 = 0.9, c2 = 1.1;
  std::string bracket_m = "2..2000";
  bracket->add_option("--c1", c1, "Lower exponent, 0 < c1 < 1 (default 0.9)");
  bracket->add_option("--c2", c2, "Upper exponent, c2 > 1 (default 1.1)");
  bracket->add_option("-m", bracket_m, "Range a..b (default 2..2000)");
  bracket->footer(columns_footer("asymp bracket") +
                  "\nSummary (plain/json only): largest_failure, threshold, "
                  "holds_on_terminal_segment");
  bracket->callback([&] {
    const Range m = parse_range(bracket_m, "-m");
    choice.g = family_g;
    action = [&, m] { return cmd_asymp_bracket(choice, c1, c2, m.lo, m.hi, opts); };
  });

  auto* ratio = asymp->add_subcommand("ratio", "(q m + v) log(lambda_m) / log(q m + v)");
  add_globals(ratio);
  add_family(ratio);
  std::int64_t q = 2, v = 4;
  std::vector<std::int64_t> m_list = {10, 100, 1000, 10000};
  ratio->add_option("--q", q, "Multiplier q (default 2)");
  ratio->add_option("--v", v, "Offset v (default 4)");
  ratio->add_option("-m", m_list, "Comma separated m values (default 10,100,1000,10000)")
      ->delimiter(',');
  ratio->footer(columns_footer("asymp ratio") +
                "\nSummary (plain/json only): trend, deviation_decreasing");
  ratio->callback([&] {
    choice.g = family_g;
    action = [&] { return cmd_asymp_ratio(choice, q, v, m_list, opts); };
  });

  auto* verify = app.add_subcommand("verify", "Run invariant suites; exit 1 if any fails");
  add_globals(verify);
  std::string suite = "all";
  verify->add_option("suite", suite, "Suite name")->check(CLI::IsMember(verify_suites()));
  verify->footer(columns_footer("verify"));
  verify->callback([&] { action = [&] { return cmd_verify(suite, opts); }; });

  std::ostringstream help_out, help_err;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kOk : kUsage;
  }
  opts.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::plain;

  try {
    const CommandResult res = action();
    render(res.record, opts.format, out);
    if (!res.diagnostic.empty()) err << res.diagnostic << "\n";
    return res.exit_code;
  } catch (const PrecisionError& e) {
    err << "precision ceiling: " << e.what() << "\n";
    return kPrecision;
  } catch (const std::overflow_error& e) {
    err << "precision ceiling: " << e.what() << "\n";
    return kPrecision;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

}  // namespace magic::cli
