#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "mfa/blocks.hpp"
#include "mfa/error.hpp"
#include "mfa/moran.hpp"
#include "mfa/symbolic.hpp"

namespace mfa::cli {
namespace {

[[noreturn]] void usage(const std::string& msg) { throw UsageError(msg, 2); }

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) usage("bad number in " + what + ": " + s);
    return v;
  } catch (const std::logic_error&) {
    usage("bad number in " + what + ": " + s);
  }
}

long long to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) usage("bad integer in " + what + ": " + s);
    return v;
  } catch (const std::logic_error&) {
    usage("bad integer in " + what + ": " + s);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

void check(bool ok, const std::string& msg) {
  if (!ok) usage(msg);
}

void validate(const RunConfig& c) {
  switch (c.command) {
    case Command::Spectrum:
      break;
    case Command::AssouadWord:
      check(c.length >= 1, "--length must be positive");
      check(c.n_lo >= 1 && c.n_lo <= c.n_hi && c.step >= 1, "--windows needs 1 <= lo <= hi");
      break;
    case Command::Greedy:
      check(c.length >= 1, "--length must be positive");
      break;
    case Command::Moran:
      check(c.epsilon > 0.0, "--epsilon must be positive");
      check(c.n >= 1 && c.stages >= 1, "-n and -k must be positive");
      break;
    case Command::Ball:
      check(c.x >= 0.0 && c.x <= 1.0, "-x must lie in [0, 1]");
      check(c.r > 0.0, "-r must be positive");
      check(c.tol >= 0.0, "--tol must be non-negative");
      break;
    case Command::DoublingScan:
      check(c.x >= 0.0 && c.x <= 1.0, "-x must lie in [0, 1]");
      check(c.gamma > 1.0, "--gamma must exceed 1");
      check(c.scales.k0 >= 0, "--scales must stay within (0, 1]");
      break;
    case Command::AssouadScan:
      check(c.x >= 0.0 && c.x <= 1.0, "-x must lie in [0, 1]");
      check(c.scales.base >= 2.0, "--scales base must be at least 2");
      check(c.pair_budget >= 1, "--pair-budget must be positive");
      break;
    case Command::Witness:
      check(c.n_target > 0.0, "--n-target must be positive");
      break;
    case Command::Abundance:
      check(c.n >= 1, "-n must be positive");
      check(c.delta > 0.0 && c.delta <= 1.0, "--delta must lie in (0, 1]");
      break;
  }
}

Word word_arg(const std::string& text) {
  try {
    return parse_word(text);
  } catch (const Error& e) {
    usage(e.what());
  }
}

}  // namespace

QGrid parse_q_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) usage("q grid must look like lo:hi:count, got '" + text + "'");
  QGrid g{to_double(parts[0], "q grid"), to_double(parts[1], "q grid"), 0};
  const long long count = to_int(parts[2], "q grid");
  if (count < 0 || g.lo > g.hi) usage("q grid needs lo <= hi and count >= 0");
  g.count = static_cast<std::size_t>(count);
  return g;
}

ScaleGrid parse_scale_grid(const std::string& text) {
  static const std::regex pattern(
      R"(\s*([0-9.eE+]+)\s*\^\s*\(?\s*-\s*k\s*\)?\s*,\s*k\s*=\s*(-?[0-9]+)\s*\.\.\s*(-?[0-9]+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    usage("scale grid must look like 2^(-k),k=1..40, got '" + text + "'");
  }
  ScaleGrid g{to_double(m[1], "scale grid"), static_cast<int>(to_int(m[2], "scale grid")),
              static_cast<int>(to_int(m[3], "scale grid"))};
  if (!(g.base > 1.0) || g.k0 > g.k1) usage("scale grid needs base > 1 and k0 <= k1");
  return g;
}

void parse_windows(const std::string& text, RunConfig& cfg) {
  const auto parts = split(text, ':');
  if (parts.size() != 2 && parts.size() != 3) usage("windows must look like lo:hi[:step]");
  const long long lo = to_int(parts[0], "windows");
  const long long hi = to_int(parts[1], "windows");
  const long long step = parts.size() == 3 ? to_int(parts[2], "windows") : 1;
  if (lo < 1 || hi < lo || step < 1) usage("windows need 1 <= lo <= hi and step >= 1");
  cfg.n_lo = static_cast<std::size_t>(lo);
  cfg.n_hi = static_cast<std::size_t>(hi);
  cfg.step = static_cast<std::size_t>(step);
}

RunConfig parse_config(int argc, const char* const* argv) {
  RunConfig cfg;
  std::string q_grid, scales, windows, format = "csv", output;

  CLI::App app{"Multifractal and pointwise Assouad toolkit for weighted 1D IFS", "mfa"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mfa 0.1.0");

  auto common = [&](CLI::App* sub) {
    sub->add_option("-s,--system", cfg.system, "system JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("-o,--output", output, "output file (default: standard output)");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  struct Entry {
    const char* name;
    Command command;
    const char* help;
  };
  const Entry entries[] = {
      {"spectrum", Command::Spectrum, "tau, alpha, f and f_bar on a q grid"},
      {"assouad-word", Command::AssouadWord, "windowed Assouad estimate along a word"},
      {"greedy", Command::Greedy, "greedy word with prefix ratios tracking alpha"},
      {"moran", Command::Moran, "Moran construction and its stage dimensions"},
      {"ball", Command::Ball, "enclosure of mu(B(x, r))"},
      {"doubling-scan", Command::DoublingScan, "doubling ratios across scales"},
      {"assouad-scan", Command::AssouadScan, "certified lower bound for the pointwise Assouad dimension"},
      {"witness", Command::Witness, "search for a non-doubling witness pair"},
      {"abundance", Command::Abundance, "abundance diagnostics for Gamma_n"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    common(sub);
    subs.emplace_back(sub, e.command);
    switch (e.command) {
      case Command::Spectrum:
        sub->add_option("--q-grid", q_grid, "lo:hi:count (default -10:10:201)");
        break;
      case Command::AssouadWord:
        sub->add_option("--word", cfg.word, "prefix in one-based digits");
        sub->add_option("--period", cfg.period, "repeated after the prefix");
        sub->add_option("--length", cfg.length, "word length (sampled from probs without --word)");
        sub->add_option("--windows", windows, "lo:hi[:step] window lengths")->required();
        break;
      case Command::Greedy:
        sub->add_option("--alpha", cfg.alpha, "target ratio")->required();
        sub->add_option("--length", cfg.length, "number of symbols");
        break;
      case Command::Moran:
        sub->add_option("--alpha", cfg.alpha, "target dimension")->required();
        sub->add_option("--epsilon", cfg.epsilon, "gap below f_bar");
        sub->add_option("-n", cfg.n, "block length");
        sub->add_option("-k,--stages", cfg.stages, "number of stages");
        sub->add_option("--kappa", cfg.kappa, "word appended to every block");
        break;
      case Command::Ball:
        sub->add_option("-x", cfg.x, "centre in [0, 1]")->required();
        sub->add_option("-r", cfg.r, "radius")->required();
        sub->add_option("--tol", cfg.tol, "stop splitting below this cylinder length");
        sub->add_option("--depth-cap", cfg.depth_cap, "maximum recursion depth");
        break;
      case Command::DoublingScan:
        sub->add_option("-x", cfg.x, "centre in [0, 1]")->required();
        sub->add_option("--gamma", cfg.gamma, "ratio of the two radii");
        sub->add_option("--scales", scales, "base^(-k),k=k0..k1");
        sub->add_option("--tol", cfg.tol, "ball tolerance");
        sub->add_option("--depth-cap", cfg.depth_cap, "maximum recursion depth");
        break;
      case Command::AssouadScan:
        sub->add_option("-x", cfg.x, "centre in [0, 1]")->required();
        sub->add_option("--scales", scales, "base^(-k),k=k0..k1");
        sub->add_option("--pair-budget", cfg.pair_budget, "widest scale pairs used");
        sub->add_option("--tol", cfg.tol, "ball tolerance");
        sub->add_option("--depth-cap", cfg.depth_cap, "maximum recursion depth");
        break;
      case Command::Witness:
        sub->add_option("--n-target", cfg.n_target, "required mass ratio");
        sub->add_option("--depth-cap", cfg.depth_cap, "deepest level searched");
        break;
      case Command::Abundance:
        sub->add_option("-n", cfg.n, "block length");
        sub->add_option("--delta", cfg.delta, "density radius");
        sub->add_option("--kappa", cfg.kappa, "word appended to every block");
        break;
    }
  }
  cfg.depth_cap = kDepthCap;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    std::string text = msg.str();
    while (!text.empty() && text.back() == '\n') text.pop_back();
    throw UsageError(text, e.get_exit_code() == 0 ? 0 : 2);
  }

  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) cfg.command = command;
  }
  if (!q_grid.empty()) cfg.q_grid = parse_q_grid(q_grid);
  if (!scales.empty()) cfg.scales = parse_scale_grid(scales);
  if (!windows.empty()) parse_windows(windows, cfg);
  if (!output.empty()) cfg.output = output;
  cfg.format = format == "json" ? TableFormat::Json : TableFormat::Csv;
  if (!cfg.word.empty()) word_arg(cfg.word);
  if (!cfg.period.empty()) word_arg(cfg.period);
  if (!cfg.kappa.empty()) word_arg(cfg.kappa);
  validate(cfg);
  return cfg;
}

namespace {

void execute(const RunConfig& cfg, const WeightedSystem& sys, std::ostream& out) {
  const std::size_t m = sys.size();
  const Word kappa = cfg.kappa.empty() ? Word{} : parse_word(cfg.kappa);
  switch (cfg.command) {
    case Command::Spectrum:
      emit_table(spectrum_rows(spectrum_table(sys, cfg.q_grid)), cfg.format, out);
      return;
    case Command::AssouadWord: {
      Word w;
      if (cfg.word.empty() && cfg.period.empty()) {
        w = sample_word(sys.probs(), cfg.length, cfg.seed);
      } else if (cfg.period.empty()) {
        w = parse_word(cfg.word);
      } else {
        w = eventually_periodic(parse_word(cfg.word), parse_word(cfg.period), cfg.length);
      }
      const auto est = assouad_estimate(sys, w, cfg.n_lo, cfg.n_hi, cfg.step);
      Table t{{"n", "sup_ratio", "estimate"}, {}};
      for (std::size_t k = 0; k < est.per_n_sup.size(); ++k) {
        t.rows.push_back({static_cast<double>(est.window_length(k)), est.per_n_sup[k], est.estimate});
      }
      emit_table(t, cfg.format, out);
      return;
    }
    case Command::Greedy: {
      GreedyWordGenerator gen(sys, cfg.alpha);
      Table t{{"n", "symbol", "prefix_ratio"}, {}};
      for (std::size_t n = 1; n <= cfg.length; ++n) {
        const Word letter = gen.next();
        t.rows.push_back({static_cast<double>(n), static_cast<double>(letter[0] + 1),
                          gen.prefix_ratio()});
      }
      emit_table(t, cfg.format, out);
      return;
    }
    case Command::Moran: {
      const auto spec = moran_construct(sys, cfg.alpha, cfg.epsilon, cfg.n, cfg.stages, kappa);
      std::vector<double> s_k;
      for (std::size_t k = 1; k <= spec.stages(); ++k) s_k.push_back(moran_dimension(spec, k));
      out << moran_to_json(moran_document(spec, m, s_k));
      return;
    }
    case Command::Ball: {
      const auto b = ball_measure(sys, cfg.x, cfg.r, cfg.tol, cfg.depth_cap);
      emit_table(Table{{"x", "r", "lower", "upper", "depth_used", "straddle_mass"},
                       {{cfg.x, cfg.r, b.lower, b.upper, static_cast<double>(b.depth_used),
                         b.straddle_mass}}},
                 cfg.format, out);
      return;
    }
    case Command::DoublingScan:
      emit_table(doubling_rows(doubling_scan(sys, cfg.x, cfg.gamma, cfg.scales, cfg.tol,
                                             cfg.depth_cap)),
                 cfg.format, out);
      return;
    case Command::AssouadScan: {
      const auto s = assouad_scan(sys, cfg.x, cfg.scales, cfg.pair_budget, cfg.tol, cfg.depth_cap);
      emit_table(Table{{"x", "estimate", "pairs_used", "best_R", "best_r"},
                       {{cfg.x, s.estimate, static_cast<double>(s.pairs_used), s.best_R, s.best_r}}},
                 cfg.format, out);
      return;
    }
    case Command::Witness:
      out << witness_to_json(non_doubling_witness(sys, cfg.n_target, cfg.depth_cap), m);
      return;
    case Command::Abundance: {
      const auto a = abundance_report(sys, cfg.n, cfg.delta, kappa);
      emit_table(Table{{"n", "delta", "a1_ratio_min", "a2_delta_dense", "covering_radius",
                        "type_count", "net_size"},
                       {{static_cast<double>(cfg.n), cfg.delta, a.a1_ratio_min,
                         a.a2_delta_dense ? 1.0 : 0.0, a.covering_radius,
                         static_cast<double>(a.type_count), static_cast<double>(a.net_size)}}},
                 cfg.format, out);
      return;
    }
  }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const WeightedSystem sys = load_system(cfg.system);
    if (cfg.output) {
      std::ofstream file(*cfg.output, std::ios::binary);
      if (!file) throw Error(ErrorKind::Io, "cannot open " + cfg.output->string());
      execute(cfg, sys, file);
      file.close();
      if (!file) throw Error(ErrorKind::Io, "failed writing " + cfg.output->string());
    } else {
      execute(cfg, sys, out);
    }
    return 0;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace mfa::cli
