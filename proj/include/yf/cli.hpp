#pragma once

// Command-line front end. run() takes argv-style arguments and writes to the
// given streams so that tests can drive it in-process.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "yf/boundary.hpp"
#include "yf/experiments.hpp"
#include "yf/harmonic.hpp"
#include "yf/magic.hpp"
#include "yf/pathcount.hpp"
#include "yf/rational.hpp"
#include "yf/word.hpp"

namespace yf::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

inline constexpr std::size_t exact_sweep_cap = 25;
inline constexpr std::size_t float_sweep_cap = 34;
inline constexpr std::size_t verify_cap = 14;
inline constexpr const char* output_dir_env = "YFLAB_OUTPUT_DIR";

/// Thrown for bad arguments detected after parsing; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, pretty };

struct RunConfig {
  std::string command;
  std::vector<std::string> words;
  std::string w_core = "eps";
  std::string beta = "1";
  std::string n;
  std::optional<std::size_t> l;
  std::optional<std::string> eps;
  std::string mode = "suffix";
  std::string method = "dp";
  std::string out;
  Format format = Format::csv;
  bool float_mode = false;
  bool symbolic = false;
  unsigned jobs = 1;
  std::size_t max_rank = 6;
  std::size_t max_n = 16;
};

/// "A", "A..B", "A..B..step" or a comma list "a,b,c"; result is ascending.
inline std::vector<std::size_t> parse_n_list(std::string_view text) {
  auto number = [&](std::string_view s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
      throw UsageError("bad n specification '" + std::string(text) + "'");
    return std::stoul(std::string(s));
  };
  std::vector<std::size_t> ns;
  if (text.find("..") != std::string_view::npos) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t pos; (pos = text.find("..", start)) != std::string_view::npos; start = pos + 2)
      parts.push_back(text.substr(start, pos - start));
    parts.push_back(text.substr(start));
    if (parts.size() > 3) throw UsageError("bad n range '" + std::string(text) + "'");
    const std::size_t a = number(parts[0]);
    const std::size_t b = number(parts[1]);
    const std::size_t step = parts.size() == 3 ? number(parts[2]) : 1;
    if (step == 0 || b < a) throw UsageError("n range must be ascending with a positive step");
    for (std::size_t n = a; n <= b; n += step) ns.push_back(n);
  } else {
    std::size_t start = 0;
    for (;;) {
      const std::size_t pos = text.find(',', start);
      ns.push_back(number(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    for (std::size_t i = 1; i < ns.size(); ++i)
      if (ns[i] <= ns[i - 1]) throw UsageError("n list must be strictly ascending");
  }
  return ns;
}

namespace detail {

inline Word word_arg(const std::string& text) {
  try {
    return parse_cli(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline Rational beta_arg(const std::string& text) {
  Rational b;
  try {
    b = parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (b <= 0 || b > 1) throw UsageError("beta must lie in (0, 1], got " + text);
  return b;
}

inline std::size_t single_n(const RunConfig& cfg) {
  const auto ns = parse_n_list(cfg.n);
  if (ns.size() != 1) throw UsageError("--n must be a single rank for " + cfg.command);
  return ns.front();
}

inline std::filesystem::path resolve_output(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative())
    if (const char* dir = std::getenv(output_dir_env); dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
  return p;
}

template <class T>
std::string scalar(const T& v) {
  return yf::detail::scalar_text(v);
}

inline std::string level_text(std::size_t n, Format format) {
  const Level level = enumerate_level(n);
  const auto counts = paths_from_root(enumerate_levels(n));
  std::ostringstream os;
  if (format == Format::pretty) {
    os << "YF_" << n << ": " << level.words.size() << " words\n";
    for (std::size_t i = 0; i < level.words.size(); ++i)
      os << "  " << render_cli(level.words[i]) << "  d(eps,v)=" << to_string(counts[n][i]) << '\n';
    return os.str();
  }
  os << "word,length,twos,d_from_empty\n";
  for (std::size_t i = 0; i < level.words.size(); ++i) {
    const Word& v = level.words[i];
    os << render_cli(v) << ',' << v.length() << ',' << v.twos() << ',' << to_string(counts[n][i]) << '\n';
  }
  return os.str();
}

inline std::string measure_text(const RunConfig& cfg) {
  const TailOnesWord w = TailOnesWord::parse_cli(cfg.w_core);
  const Rational beta = beta_arg(cfg.beta);
  const std::size_t n = single_n(cfg);
  const std::vector<Word> words = enumerate_level(n).words;
  std::ostringstream os;
  auto emit = [&](const auto& masses) {
    if (cfg.format == Format::pretty) {
      os << "mu over YF_" << n << " (w core " << render_cli(w.core()) << ", beta " << to_string(beta)
         << (cfg.float_mode ? ", float, non-authoritative" : "") << ")\n";
      for (std::size_t i = 0; i < words.size(); ++i) os << "  " << render_cli(words[i]) << "  " << scalar(masses[i]) << '\n';
      return;
    }
    os << "word,mass\n";
    for (std::size_t i = 0; i < words.size(); ++i) os << render_cli(words[i]) << ',' << scalar(masses[i]) << '\n';
  };
  if (cfg.float_mode) {
    if (n > float_sweep_cap) throw UsageError("--n above the float cap " + std::to_string(float_sweep_cap));
    emit(level_masses<double>(w, beta, n, words, cfg.jobs));
  } else {
    if (n > exact_sweep_cap) throw UsageError("--n above the exact cap " + std::to_string(exact_sweep_cap));
    emit(level_masses<Rational>(w, beta, n, words, cfg.jobs));
  }
  return os.str();
}

inline std::string magic_text(const RunConfig& cfg) {
  const std::size_t n = single_n(cfg);
  if (n > cfg.max_n) throw UsageError("--n exceeds --max-n " + std::to_string(cfg.max_n));
  if (cfg.symbolic) return magic_symbolic_csv(n);
  const MagicTable table = build_table(TailOnesWord::parse_cli(cfg.w_core), beta_arg(cfg.beta), n, cfg.jobs);
  if (cfg.format == Format::csv) return magic_csv(table);
  std::ostringstream os;
  os << magic_csv(table) << "column sums:";
  for (std::size_t y = 0; y <= n; ++y) os << ' ' << to_string(column_sum(table, y));
  os << "\ntotal: " << to_string(table_total(table)) << '\n';
  return os.str();
}

inline std::string sweep_text(const RunConfig& cfg) {
  ConcentrationParams params;
  if (cfg.mode == "suffix") {
    if (!cfg.l) throw UsageError("--mode suffix requires --l");
    params.mode = ConcentrationMode::suffix;
    params.l = *cfg.l;
  } else if (cfg.mode == "pi") {
    if (!cfg.eps) throw UsageError("--mode pi requires --eps");
    params.mode = ConcentrationMode::pi;
    try {
      params.eps = parse_rational(*cfg.eps);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (params.eps <= 0) throw UsageError("--eps must be positive");
  } else {
    throw UsageError("--mode must be suffix or pi");
  }
  params.w = TailOnesWord::parse_cli(cfg.w_core);
  params.beta = beta_arg(cfg.beta);
  const auto ns = parse_n_list(cfg.n);
  const std::size_t cap = cfg.float_mode ? float_sweep_cap : exact_sweep_cap;
  if (ns.back() > cap) throw UsageError("--n above the cap " + std::to_string(cap) + (cfg.float_mode ? "" : " (use --float)"));
  auto render = [&](const auto& report) {
    if (cfg.format == Format::csv) return report.csv();
    std::ostringstream os;
    os << to_string(params.mode) << " concentration, w core " << render_cli(params.w.core()) << ", beta "
       << to_string(params.beta) << ", parameter " << params.parameter_text()
       << (report.exact ? "" : " (float, non-authoritative)") << '\n';
    for (const auto& r : report.rows) os << "  n=" << r.n << "  tail=" << scalar(r.tail) << "  head=" << scalar(r.head) << '\n';
    return os.str();
  };
  if (cfg.float_mode) return render(concentration_sweep<double>(params, ns, cfg.jobs));
  return render(concentration_sweep<Rational>(params, ns, cfg.jobs));
}

}  // namespace detail

/// Executes one configured command. Writes data to `out` (or the --out file)
/// and diagnostics to `err`; returns the process exit status.
inline int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ostringstream data;
  int status = exit_ok;
  const auto& a = cfg.words;
  auto need = [&](std::size_t k) {
    if (a.size() != k) throw UsageError(cfg.command + " expects " + std::to_string(k) + " positional argument(s)");
  };
  if (cfg.command == "level") {
    need(1);
    data << detail::level_text(parse_n_list(a[0]).at(0), cfg.format);
  } else if (cfg.command == "dcount") {
    need(2);
    const Word x = detail::word_arg(a[0]);
    const Word y = detail::word_arg(a[1]);
    if (cfg.method == "dp") {
      data << to_string(d_paths_dp(x, y)) << '\n';
    } else if (cfg.method == "formula") {
      if (y.rank() < x.rank()) throw UsageError("formula requires rank(y) >= rank(x)");
      data << to_string(d_paths_formula(x, y)) << '\n';
    } else if (cfg.method == "both") {
      const Integer dp = d_paths_dp(x, y);
      const Integer formula = y.rank() < x.rank() ? Integer(0) : d_paths_formula(x, y);
      data << to_string(dp) << ' ' << to_string(formula) << ' ' << (dp == formula ? "MATCH" : "MISMATCH") << '\n';
      if (dp != formula) status = exit_failure;
    } else {
      throw UsageError("--method must be dp, formula or both");
    }
  } else if (cfg.command == "f") {
    need(3);
    const Word x = detail::word_arg(a[0]);
    const auto y = parse_n_list(a[1]).at(0);
    const auto z = parse_n_list(a[2]).at(0);
    if (y > x.rank() || z > x.length()) throw UsageError("f requires y <= rank(x) and z <= length(x)");
    if (cfg.float_mode)
      data << detail::scalar(f<double>(x, y, z)) << '\n';
    else
      data << to_string(f<Rational>(x, y, z)) << '\n';
  } else if (cfg.command == "g") {
    need(1);
    const auto gs = g_all(detail::word_arg(a[0]));
    for (std::size_t j = 0; j < gs.size(); ++j) data << (j ? "," : "") << gs[j];
    data << '\n';
  } else if (cfg.command == "q") {
    need(1);
    data << to_string(q<Rational>(detail::word_arg(a[0]))) << '\n';
  } else if (cfg.command == "pi") {
    need(1);
    data << to_string(pi<Rational>(detail::word_arg(a[0]))) << '\n';
  } else if (cfg.command == "dbeta") {
    need(1);
    const Word x = detail::word_arg(a[0]);
    if (cfg.beta == "poly")
      data << d_beta(x).to_csv() << '\n';
    else
      data << to_string(d_beta_eval<Rational>(x, detail::beta_arg(cfg.beta))) << '\n';
  } else if (cfg.command == "dprime") {
    need(1);
    const Word x = detail::word_arg(a[0]);
    const TailOnesWord w = TailOnesWord::parse_cli(cfg.w_core);
    const Rational beta = detail::beta_arg(cfg.beta);
    if (cfg.float_mode)
      data << detail::scalar(d_beta_prime<double>(x, w, beta)) << '\n';
    else
      data << to_string(d_beta_prime<Rational>(x, w, beta)) << '\n';
  } else if (cfg.command == "measure") {
    data << detail::measure_text(cfg);
  } else if (cfg.command == "magic") {
    data << detail::magic_text(cfg);
  } else if (cfg.command == "sweep") {
    data << detail::sweep_text(cfg);
  } else if (cfg.command == "verify") {
    if (cfg.max_rank > verify_cap) throw UsageError("--max-rank above the cap " + std::to_string(verify_cap));
    IdentityGrid grid;
    grid.max_rank = cfg.max_rank;
    const IdentityReport report = identity_suite(grid);
    data << (cfg.format == Format::csv ? report.csv() : report.summary());
    if (!report.all_passed()) status = exit_failure;
  } else {
    throw UsageError("unknown command " + cfg.command);
  }

  if (cfg.out.empty()) {
    out << data.str();
  } else {
    const auto path = detail::resolve_output(cfg.out);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      err << "cannot open " << path.string() << " for writing\n";
      return exit_failure;
    }
    file << data.str();
  }
  return status;
}

/// Parses argv-style arguments (without the program name) and runs.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact computations on the Young-Fibonacci lattice", "yflab"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "csv";
  app.add_option("--format", format, "csv or pretty")->check(CLI::IsMember({"csv", "pretty"}));
  app.add_option("--out", cfg.out, "write data to this file (relative paths resolve against $YFLAB_OUTPUT_DIR)");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--float", cfg.float_mode, "double precision; non-authoritative");
  app.fallthrough();

  auto words_cmd = [&](const std::string& name, const std::string& help, const std::string& arg_help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("args", cfg.words, arg_help)->required();
    return sub;
  };
  words_cmd("level", "list the words of rank n", "n");
  words_cmd("dcount", "path count d(x, y)", "x y")->add_option("--method", cfg.method, "dp, formula or both");
  words_cmd("f", "f(x, y, z)", "x y z");
  words_cmd("g", "g(x, j) for all j", "x");
  words_cmd("q", "q(x)", "x");
  words_cmd("pi", "pi(x)", "x");
  words_cmd("dbeta", "d_beta(x); --beta poly prints coefficients", "x")->add_option("--beta", cfg.beta, "p/q or poly");
  CLI::App* dprime = words_cmd("dprime", "d'_beta(x, w)", "x");
  dprime->add_option("--w", cfg.w_core, "core of w (eps for 1^inf)");
  dprime->add_option("--beta", cfg.beta, "p/q in (0, 1]");

  CLI::App* measure = app.add_subcommand("measure", "mu_{w,beta} over YF_n");
  measure->add_option("--w", cfg.w_core, "core of w")->required();
  measure->add_option("--beta", cfg.beta, "p/q")->required();
  measure->add_option("--n", cfg.n, "rank")->required();

  CLI::App* magic = app.add_subcommand("magic", "magic table T_{w,beta,n}");
  magic->add_option("--w", cfg.w_core, "core of w");
  magic->add_option("--beta", cfg.beta, "p/q");
  magic->add_option("--n", cfg.n, "rank")->required();
  magic->add_option("--max-n", cfg.max_n, "refuse tables above this rank");
  magic->add_flag("--symbolic", cfg.symbolic, "export (coefficient, d'_1 argument, exponents) tuples");

  CLI::App* sweep = app.add_subcommand("sweep", "concentration tail masses over a range of n");
  sweep->add_option("--mode", cfg.mode, "suffix or pi")->required();
  sweep->add_option("--w", cfg.w_core, "core of w")->required();
  sweep->add_option("--beta", cfg.beta, "p/q")->required();
  sweep->add_option("--l", cfg.l, "suffix rank threshold");
  sweep->add_option("--eps", cfg.eps, "window half-width p/q");
  sweep->add_option("--n", cfg.n, "A..B..step or a,b,c")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_option("--max-rank", cfg.max_rank, "largest rank checked")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }
  cfg.format = format == "pretty" ? Format::pretty : Format::csv;
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return execute(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace yf::cli
