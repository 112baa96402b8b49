#include "insdel/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "insdel/bounds.hpp"
#include "insdel/monte_carlo.hpp"
#include "insdel/oracles.hpp"
#include "insdel/outer_bound.hpp"
#include "insdel/surface.hpp"
#include "insdel/verify.hpp"

namespace insdel {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string show_word(const Word& w) { return w.empty() ? std::string("\"\"") : format_word(w); }

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << '/' << denominator(r);
  return os.str();
}

std::filesystem::path surface_path(const std::string& out, int q, BoundSource source, SurfaceFormat format,
                                   bool several) {
  const std::string ext(to_string(format));
  const std::string name(to_string(source));
  if (out.empty()) return "surface_q" + std::to_string(q) + "_" + name + "." + ext;
  if (out == "-" || !several) return out;
  std::filesystem::path p(out);
  const std::string stem = p.stem().string();
  const std::string suffix = p.has_extension() ? p.extension().string() : "." + ext;
  return p.parent_path() / (stem + "_" + name + suffix);
}

struct Options {
  // bound
  int q = 2;
  double gamma = 0.0;
  double delta = 0.0;
  std::string source = "combined-outer";
  bool detail = false;
  // surface
  std::vector<std::string> bounds;
  int resolution = kDefaultResolution;
  std::string format = "csv";
  std::string out;
  unsigned threads = 0;
  // oracle
  std::string word_a;
  std::string word_b;
  std::vector<std::string> codewords;
  int n = 0;
  int t = 0;
  int m = 0;
  int ins = 0;
  int del = 0;
  int list_size = 1;
  bool exact = false;
  bool cumulative = false;
  bool list = false;
  // mc
  std::string config;
  McConfig mc;
  // verify
  bool quick = false;
};

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rate bounds and small-scale oracles for list-decodable insertion-deletion codes", "insdel"};
  app.require_subcommand(1);
  Options o;

  auto* bound = app.add_subcommand("bound", "Evaluate one bound at a point");
  bound->add_option("--q", o.q, "Alphabet size")->required();
  bound->add_option("--gamma", o.gamma, "Insertion rate")->required();
  bound->add_option("--delta", o.delta, "Deletion rate")->required();
  bound->add_option("--source", o.source,
                    "insertion-only|deletion-only|spoke|f|inner|linear-outer|interpolated-outer|combined-outer");
  bound->add_flag("--detail", o.detail, "Also print every candidate of combined-outer and the gamma0 split");

  auto* surface = app.add_subcommand("surface", "Evaluate bounds on a (gamma, delta) grid");
  surface->add_option("--q", o.q, "Alphabet size")->required();
  surface->add_option("--bound", o.bounds, "Bound source (repeatable; default inner and combined-outer)");
  surface->add_option("--resolution", o.resolution, "Samples per axis")->check(CLI::Range(2, 5000));
  surface->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  surface->add_option("--out", o.out, "Output path, '-' for stdout; with several bounds the name gets a suffix");
  surface->add_option("--threads", o.threads, "Worker threads (0: all cores)");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive combinatorial oracles");
  oracle->require_subcommand(1);
  auto* ball = oracle->add_subcommand("ball", "Enumerate an insertion-deletion ball");
  ball->add_option("--q", o.q)->required();
  ball->add_option("center", o.word_a, "Center word")->required();
  ball->add_option("--ins", o.ins, "Insertions");
  ball->add_option("--del", o.del, "Deletions");
  ball->add_flag("--exact", o.exact, "Keep only words of length n - del + ins");
  ball->add_flag("--list", o.list, "Print the words");
  auto* count = oracle->add_subcommand("count", "Levenshtein supersequence count");
  count->add_option("--q", o.q)->required();
  count->add_option("--n", o.n)->required();
  count->add_option("--t", o.t)->required();
  count->add_flag("--cumulative", o.cumulative, "Count all lengths n .. n + t");
  auto* lcs_cmd = oracle->add_subcommand("lcs", "Longest common subsequence length");
  lcs_cmd->add_option("--q", o.q)->required();
  lcs_cmd->add_option("a", o.word_a)->required();
  lcs_cmd->add_option("b", o.word_b)->required();
  auto* reach = oracle->add_subcommand("reach", "Whether w is reachable from x");
  reach->add_option("--q", o.q)->required();
  reach->add_option("x", o.word_a)->required();
  reach->add_option("w", o.word_b)->required();
  reach->add_option("--del", o.del)->required();
  reach->add_option("--ins", o.ins)->required();
  auto* prob = oracle->add_subcommand("prob", "Probability that a random length-m word contains y");
  prob->add_option("--q", o.q)->required();
  prob->add_option("y", o.word_a)->required();
  prob->add_option("--m", o.m)->required();
  auto* check = oracle->add_subcommand("check-code", "Exhaustive list-decodability check");
  check->add_option("--q", o.q)->required();
  check->add_option("--gamma", o.gamma);
  check->add_option("--delta", o.delta);
  check->add_option("--L", o.list_size)->required();
  check->add_option("codewords", o.codewords)->required();

  auto* mc = app.add_subcommand("mc", "Random-code Monte Carlo experiment");
  mc->add_option("--config", o.config, "JSON file with the configuration");
  mc->add_option("--q", o.mc.q);
  mc->add_option("--n", o.mc.n);
  mc->add_option("--gamma", o.mc.gamma);
  mc->add_option("--delta", o.mc.delta);
  mc->add_option("--rate", o.mc.rate_target, "Target rate");
  mc->add_option("--inner-fraction", o.gamma, "Target rate as a fraction of the inner bound");
  mc->add_option("--L", o.mc.list_cap);
  mc->add_option("--trials", o.mc.trials);
  mc->add_option("--seed", o.mc.seed);
  mc->add_option("--samples", o.mc.received_samples, "Received words per trial (0: exhaustive)");

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_flag("--quick", o.quick, "Smaller grids");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* sub = &app;
    for (auto* s : app.get_subcommands()) {
      sub = s;
      for (auto* s2 : s->get_subcommands()) sub = s2;
    }
    err << sub->help();
    return kExitUsage;
  }

  try {
    if (*bound) {
      const AlphabetSize q(o.q);
      const BoundSource src = parse_bound_source(o.source);
      const BoundValue v = evaluate_bound(src, q, o.gamma, o.delta);
      out << "rate: " << num(v.rate) << '\n';
      out << "raw: " << (v.raw ? num(*v.raw) : std::string("none")) << '\n';
      out << "feasible: " << (v.feasible ? "true" : "false") << '\n';
      out << "source: " << to_string(v.source) << '\n';
      if (o.detail && src == BoundSource::CombinedOuter) {
        for (const BoundValue& c : combined_outer_bound_detail(q, o.gamma, o.delta).candidates)
          out << "candidate " << to_string(c.source) << ": " << num(c.rate) << '\n';
      }
      if (o.detail && (src == BoundSource::CombinedOuter || src == BoundSource::InterpolatedOuter) &&
          o.delta <= 1.0 - 1.0 / q.as_double()) {
        const GammaSplit s = optimal_gamma0(q, o.gamma, o.delta);
        out << "gamma0: " << num(s.gamma0) << "\ngamma1: " << num(s.gamma1) << "\nsplit: " << to_string(s.method)
            << '\n';
      }
      return kExitOk;
    }

    if (*surface) {
      const AlphabetSize q(o.q);
      const SurfaceFormat fmt = parse_surface_format(o.format);
      if (o.bounds.empty()) o.bounds = {"inner", "combined-outer"};
      if (o.out == "-" && o.bounds.size() > 1) throw DomainError("stdout output takes a single --bound");
      for (const std::string& name : o.bounds) {
        const BoundSource src = parse_bound_source(name);
        const auto path = surface_path(o.out, o.q, src, fmt, o.bounds.size() > 1);
        SurfaceGrid grid = evaluate_surface(q, src, o.resolution, o.threads);
        if (path == "-") {
          fmt == SurfaceFormat::Csv ? write_csv(out, grid) : write_json(out, grid);
          continue;
        }
        std::ofstream file(path);
        if (!file) throw std::runtime_error("cannot open " + path.string());
        fmt == SurfaceFormat::Csv ? write_csv(file, grid) : write_json(file, grid);
        file.close();
        if (!file) throw std::runtime_error("failed writing " + path.string());
        err << "wrote " << path.string() << " (" << grid.values.size() << " cells)\n";
      }
      return kExitOk;
    }

    if (*oracle) {
      const AlphabetSize q(o.q);
      if (*ball) {
        BallSpec spec{parse_word(o.word_a, q), o.ins, o.del,
                      o.exact ? LengthMode::ExactFinalLength : LengthMode::AllLengths};
        const auto words = enumerate_ball(spec);
        out << words.size() << '\n';
        if (o.list)
          for (const Word& w : words) out << show_word(w) << '\n';
      } else if (*count) {
        if (o.n < 0 || o.t < 0) throw DomainError("n and t must be nonnegative");
        out << (o.cumulative ? supersequence_count_up_to_length(o.n, o.t, q)
                             : supersequence_count_exact_length(o.n, o.t, q))
            << '\n';
      } else if (*lcs_cmd) {
        out << lcs(parse_word(o.word_a, q), parse_word(o.word_b, q)) << '\n';
      } else if (*reach) {
        out << (reachable(parse_word(o.word_a, q), parse_word(o.word_b, q), o.del, o.ins) ? "yes" : "no") << '\n';
      } else if (*prob) {
        const Rational p = containment_probability(parse_word(o.word_a, q), o.m);
        out << rational_text(p) << ' ' << num(p.convert_to<double>()) << '\n';
      } else if (*check) {
        std::vector<Word> words;
        for (const auto& c : o.codewords) words.push_back(parse_word(c, q));
        const SmallCode code(q, std::move(words));
        const ListDecodingVerdict v = check_list_decodable(code, o.gamma, o.delta, o.list_size);
        if (v.ok) {
          out << "ok (" << v.words_checked << " words checked)\n";
        } else {
          out << "violated: witness " << show_word(*v.witness) << " decodes to";
          for (const Word& w : v.list) out << ' ' << show_word(w);
          out << '\n';
        }
      }
      return kExitOk;
    }

    if (*mc) {
      McConfig cfg = o.mc;
      if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) throw std::runtime_error("cannot read " + o.config);
        std::stringstream ss;
        ss << in.rdbuf();
        cfg = mc_config_from_json(ss.str());
      }
      if (mc->count("--inner-fraction"))
        cfg.rate_target = o.gamma * inner_bound(AlphabetSize(cfg.q), cfg.gamma, cfg.delta).rate;
      out << mc_report_to_json(cfg, run_inner_bound_mc(cfg)) << '\n';
      return kExitOk;
    }

    if (*verify) {
      bool all = true;
      for (const SuiteResult& r : run_invariant_suites(o.quick)) {
        all = all && r.passed;
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << num(r.seconds) << " s)";
        if (!r.detail.empty()) out << ": " << r.detail;
        out << '\n';
      }
      return all ? kExitOk : kExitVerification;
    }
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << " (needs " << num(e.required()) << ", cap " << num(e.cap())
        << "; raise INSDEL_ENUMERATION_CAP to allow)\n";
    return kExitBudget;
  } catch (const std::logic_error& e) {
    // DomainError derives from logic_error; anything else here is an internal cross-check failure
    if (dynamic_cast<const std::domain_error*>(&e) || dynamic_cast<const std::invalid_argument*>(&e) ||
        dynamic_cast<const std::out_of_range*>(&e)) {
      err << "error: " << e.what() << '\n';
      return kExitDomain;
    }
    err << "internal check failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace insdel
