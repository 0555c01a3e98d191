#include "birkhoff_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include <birkhoff/birkhoff.hpp>

#include "birkhoff_cli/io.hpp"

namespace birkhoff::cli {

namespace {

using Json = nlohmann::ordered_json;

// nlohmann prints the shortest round-trip form; outputs here are pinned to
// 17 significant digits instead, and non-finite numbers become null.
void dump(const Json& j, std::string& s, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        s += "{}";
        return;
      }
      s += "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) s += ",\n";
        first = false;
        s += inner + Json(k).dump() + ": ";
        dump(v, s, indent + 1);
      }
      s += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        s += "[]";
        return;
      }
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); });
      s += flat ? "[" : "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) s += flat ? ", " : ",\n";
        if (!flat) s += inner;
        dump(j[i], s, indent + 1);
      }
      s += flat ? "]" : "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      s += std::isfinite(v) ? format_double(v) : "null";
      return;
    }
    default:
      s += j.dump();
  }
}

std::string to_text(const Json& j) {
  std::string s;
  dump(j, s, 0);
  return s + "\n";
}

Side parse_side(const std::string& s) { return s == "min" ? Side::kMin : Side::kMax; }

// Where a command's result goes: a file (atomically) or stdout.
struct Sink {
  std::string out_path;
  void emit(std::ostream& out, const std::string& text) const {
    if (out_path.empty()) {
      out << text;
    } else {
      write_file_atomic(out_path, text);
    }
  }
};

std::string single_line(std::string msg) {
  std::replace(msg.begin(), msg.end(), '\n', ' ');
  return msg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Birkhoff spectra of locally constant potentials on the full binary shift", "birkhoff"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::function<void()> action;
  Sink sink;
  const auto side_check = CLI::IsMember({"min", "max"});

  // endpoints
  std::string input;
  auto* endpoints_cmd = app.add_subcommand("endpoints", "Support endpoints and their maximizing periodic points");
  endpoints_cmd->add_option("--input", input, "PCC JSON file")->required()->check(CLI::ExistingFile);
  endpoints_cmd->add_option("--out", sink.out_path, "Output file (default stdout)");
  endpoints_cmd->callback([&] {
    action = [&] {
      const PccFunction f = read_pcc_file(input);
      const WeightedDeBruijn g(f);
      const CycleReport hi = max_mean_cycle(g);
      const CycleReport lo = max_mean_cycle(WeightedDeBruijn(-f));
      Json j;
      j["alpha_star_min"] = -lo.mean;
      j["alpha_star_max"] = hi.mean;
      j["witness_min"] = lo.witness.period().to_string();
      j["witness_max"] = hi.witness.period().to_string();
      sink.emit(out, to_text(j));
    };
  });

  // spectrum
  std::size_t grid = 101;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Sample the Birkhoff spectrum as CSV");
  spectrum_cmd->add_option("--input", input, "PCC JSON file")->required()->check(CLI::ExistingFile);
  spectrum_cmd->add_option("--grid", grid, "Number of grid points (>= 3)")->check(CLI::Range(3, 1000000));
  spectrum_cmd->add_option("--out", sink.out_path, "Output CSV (default stdout)");
  spectrum_cmd->callback([&] {
    action = [&] { sink.emit(out, curve_to_csv(spectrum_curve(read_pcc_file(input), grid))); };
  });

  // endpoint-dim
  std::string side = "max";
  auto* edim_cmd = app.add_subcommand("endpoint-dim", "Spectrum value at a support endpoint");
  edim_cmd->add_option("--input", input, "PCC JSON file")->required()->check(CLI::ExistingFile);
  edim_cmd->add_option("--side", side, "min or max")->required()->check(side_check);
  edim_cmd->add_option("--out", sink.out_path, "Output file (default stdout)");
  edim_cmd->callback([&] {
    action = [&] {
      const PccFunction f = read_pcc_file(input);
      Json j;
      j["side"] = side;
      j["alpha"] = side == "min" ? endpoints(f).first : endpoints(f).second;
      j["dimension"] = endpoint_dimension(f, parse_side(side));
      sink.emit(out, to_text(j));
    };
  });

  // derivative
  std::vector<double> deltas;
  auto* deriv_cmd = app.add_subcommand("derivative", "One-sided difference quotients at an endpoint");
  deriv_cmd->add_option("--input", input, "PCC JSON file")->required()->check(CLI::ExistingFile);
  deriv_cmd->add_option("--side", side, "min or max")->required()->check(side_check);
  deriv_cmd->add_option("--deltas", deltas, "Comma-separated decreasing offsets")->required()->delimiter(',');
  deriv_cmd->add_option("--out", sink.out_path, "Output file (default stdout)");
  deriv_cmd->callback([&] {
    action = [&] {
      const PccFunction f = read_pcc_file(input);
      Json j;
      j["side"] = side;
      j["deltas"] = deltas;
      j["slopes"] = one_sided_slopes(f, parse_side(side), deltas);
      sink.emit(out, to_text(j));
    };
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Generate the example and construction potentials");
  construct->require_subcommand(1);
  construct->add_option("--out", sink.out_path, "Output file (default stdout)");
  std::size_t k = 1;
  double a = 0.0, b = 1.0, eps = 0.0;
  std::size_t big_l = 6, levels = 0, depth = 0;
  std::vector<std::size_t> lengths;
  std::optional<std::size_t> ell;
  std::string base;
  auto emit_pcc = [&](const std::function<PccFunction()>& make) {
    return [&, make] { action = [&, make] { sink.emit(out, pcc_to_json(make())); }; };
  };
  construct->add_subcommand("example-indicator", "1 on [1], 0 on [0]")->callback(emit_pcc([] { return example_indicator(); }));
  construct->add_subcommand("example23", "The depth-3 example with support [-2, 2]")
      ->callback(emit_pcc([] { return example23(); }));
  auto* maj = construct->add_subcommand("majority", "Majority vote over 2k+1 symbols");
  maj->add_option("--k", k, "k >= 1")->required()->check(CLI::PositiveNumber);
  maj->callback(emit_pcc([&] { return remark55_majority(k); }));
  auto* biased = construct->add_subcommand("biased", "-1 on 0^k, 1/(2^k-1) elsewhere");
  biased->add_option("--k", k, "k >= 1")->required()->check(CLI::PositiveNumber);
  biased->callback(emit_pcc([&] { return remark55_biased(k); }));
  auto* l53 = construct->add_subcommand("lemma53", "b on [1^L], a elsewhere");
  l53->add_option("--a", a, "Value off the all-ones cylinder")->required();
  l53->add_option("--b", b, "Value on the all-ones cylinder")->required();
  l53->add_option("--L", big_l, "Depth L >= 6")->required();
  l53->callback(emit_pcc([&] { return lemma53(a, b, big_l); }));
  auto* t52 = construct->add_subcommand("thm52", "Truncated staircase of run-length levels");
  t52->add_option("--levels", levels, "Number of levels J")->required()->check(CLI::PositiveNumber);
  t52->add_option("--L", lengths, "Comma-separated run lengths L_1 < ... < L_J")->required()->delimiter(',');
  t52->callback(emit_pcc([&] {
    require(lengths.size() == levels, "--levels must equal the number of --L values");
    return theorem52_table(StaircaseParams{lengths, std::nullopt});
  }));
  auto* t41 = construct->add_subcommand("thm41", "Perturbation with positive endpoint dimension (metadata JSON)");
  t41->add_option("--base", base, "Base PCC JSON file")->required()->check(CLI::ExistingFile);
  t41->add_option("--eps", eps, "Perturbation size")->required();
  t41->add_option("--ell", ell, "Override for the block parameter");
  t41->callback([&] {
    action = [&] {
      const ConstructionT41 c = theorem41(read_pcc_file(base), eps, ell);
      Json j;
      j["A"] = c.a.to_string();
      j["B"] = c.b.to_string();
      j["k_A"] = c.k_a;
      j["ell"] = c.ell;
      j["m"] = c.m;
      j["X"] = c.x.to_string();
      j["Y"] = c.y.to_string();
      j["block_length"] = c.block_length();
      j["effective_depth"] = c.h.effective_depth();
      j["eps"] = c.eps;
      j["alpha_star_max"] = c.alpha_star_max;
      j["threshold"] = c.threshold();
      j["b_star"] = c.b_star;
      j["dimension"] = c.dimension();
      sink.emit(out, to_text(j));
    };
  });
  auto* l45 = construct->add_subcommand("lemma45", "Perturbation collapsing the upper endpoint dimension");
  l45->add_option("--base", base, "Base PCC JSON file")->required()->check(CLI::ExistingFile);
  l45->add_option("--eps", eps, "Perturbation size")->required();
  l45->add_option("--depth", depth, "Truncation depth")->required();
  l45->callback(emit_pcc([&] { return lemma45(read_pcc_file(base), eps, depth); }));
  auto* drv = construct->add_subcommand("derevealize", "Bump one cylinder so that a*_max < a_max");
  drv->add_option("--base", base, "Base PCC JSON file")->required()->check(CLI::ExistingFile);
  drv->add_option("--eps", eps, "Bump size")->required();
  drv->callback(emit_pcc([&] { return derevealize(read_pcc_file(base), eps); }));

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth");
  oracle->require_subcommand(1);
  oracle->add_option("--out", sink.out_path, "Output file (default stdout)");
  std::size_t max_period = 1, n = 1, words = 1000;
  double alpha = 0.0, delta = 0.0, beta = 0.0;
  std::uint64_t seed = 1;
  auto* cycles = oracle->add_subcommand("cycles", "All periodic orbits up to a period");
  cycles->add_option("--input", input, "PCC JSON file")->required()->check(CLI::ExistingFile);
  cycles->add_option("--max-period", max_period, "Largest period")->required();
  cycles->callback([&] {
    action = [&] {
      Json j;
      j["cycles"] = Json::array();
      for (const auto& [p, mean] : enumerate_cycle_means(read_pcc_file(input), max_period)) {
        Json c;
        c["period"] = p.period().to_string();
        c["mean"] = mean;
        j["cycles"].push_back(c);
      }
      sink.emit(out, to_text(j));
    };
  });
  auto* count = oracle->add_subcommand("count", "Cylinder-counting spectrum estimate");
  count->add_option("--input", input, "PCC JSON file")->required()->check(CLI::ExistingFile);
  count->add_option("--alpha", alpha, "Target average")->required();
  count->add_option("--delta", delta, "Half-width of the window")->required();
  count->add_option("--N", n, "Orbit length")->required();
  count->callback([&] {
    action = [&] {
      const PccFunction f = read_pcc_file(input);
      Json j;
      j["count"] = counting_words(f, alpha, delta, n);
      j["lambda"] = counting_lambda(f, alpha, delta, n);
      sink.emit(out, to_text(j));
    };
  });
  auto* cover = oracle->add_subcommand("cover", "Cylinder cover bound against exact enumeration");
  cover->add_option("--a", a, "Low value")->required();
  cover->add_option("--b", b, "High value")->required();
  cover->add_option("--L", big_l, "Depth L >= 6")->required();
  cover->add_option("--beta", beta, "Target dimension")->required();
  cover->add_option("--N", n, "Orbit length, with L | N+L-1")->required();
  cover->add_option("--eps", eps, "Slack added to beta as eps/2");
  cover->callback([&] {
    action = [&] {
      const CoverReport r = lemma53_cover_check(a, b, big_l, beta, n, eps);
      Json j;
      j["bound"] = r.bound;
      j["exact_count"] = r.exact_count;
      j["threshold"] = r.threshold;
      j["pass"] = r.pass;
      sink.emit(out, to_text(j));
    };
  });
  auto* n0 = oracle->add_subcommand("n0", "Uniform threshold for the average estimate");
  n0->add_option("--input", input, "PCC JSON file")->required()->check(CLI::ExistingFile);
  n0->add_option("--eps", eps, "Margin")->required();
  n0->add_option("--words", words, "Random words in the empirical check");
  n0->add_option("--seed", seed, "Seed of the empirical check");
  n0->callback([&] {
    action = [&] {
      const N0Report r = uniform_N0_check(read_pcc_file(input), eps, words, seed);
      Json j;
      j["n0"] = r.n0;
      j["empirical_pass"] = r.pass;
      j["worst_excess"] = r.worst_excess;
      sink.emit(out, to_text(j));
    };
  });
  auto* sample = oracle->add_subcommand("sample", "Running averages along a random orbit");
  sample->add_option("--input", input, "PCC JSON file")->required()->check(CLI::ExistingFile);
  sample->add_option("--seed", seed, "Generator seed")->required();
  sample->add_option("--N", n, "Orbit length")->required()->check(CLI::PositiveNumber);
  sample->callback([&] {
    action = [&] {
      const std::vector<double> avg = sample_trajectory(read_pcc_file(input), seed, n);
      Json j;
      j["final"] = avg.back();
      j["averages"] = avg;
      sink.emit(out, to_text(j));
    };
  });

  // dim
  auto* dim = app.add_subcommand("dim", "Hausdorff dimensions");
  dim->require_subcommand(1);
  dim->add_option("--out", sink.out_path, "Output file (default stdout)");
  std::string blocks;
  auto* moran = dim->add_subcommand("moran", "Dimension of a block-generated set");
  moran->add_option("--blocks", blocks, "Blocks JSON file")->required()->check(CLI::ExistingFile);
  moran->callback([&] {
    action = [&] {
      Json j;
      j["dimension"] = moran_dimension(BlockAlphabet(read_blocks_file(blocks)));
      sink.emit(out, to_text(j));
    };
  });
  auto* egg = dim->add_subcommand("eggleston", "Binary entropy of a digit frequency");
  egg->add_option("--alpha", alpha, "Frequency in [0,1]")->required();
  egg->callback([&] {
    action = [&] {
      Json j;
      j["dimension"] = eggleston_dimension(alpha);
      sink.emit(out, to_text(j));
    };
  });

  // check
  auto* check = app.add_subcommand("check", "Property checks");
  check->require_subcommand(1);
  check->add_option("--out", sink.out_path, "Output file (default stdout)");
  std::string f_path, g_path;
  auto* norm = check->add_subcommand("norm-continuity", "Spectrum of g dominates that of f up to an eps shift");
  norm->add_option("--f", f_path, "PCC JSON file")->required()->check(CLI::ExistingFile);
  norm->add_option("--g", g_path, "PCC JSON file")->required()->check(CLI::ExistingFile);
  norm->add_option("--eps", eps, "Sup-distance bound")->required();
  norm->add_option("--grid", grid, "Grid points over the support of f");
  norm->callback([&] {
    action = [&] {
      const NormContinuityReport r = norm_continuity_check(read_pcc_file(f_path), read_pcc_file(g_path), eps, grid);
      Json j;
      j["pass"] = r.pass;
      j["worst_gap"] = r.worst_gap;
      sink.emit(out, to_text(j));
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << single_line(e.what()) << "\n";
    return 2;
  }

  try {
    if (action) action();
    return 0;
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << single_line(e.what()) << "\n";
    return 3;
  } catch (const NumericalError& e) {
    err << "error: numerical: " << single_line(e.what()) << "\n";
    return 4;
  } catch (const InputError& e) {
    err << "error: input: " << single_line(e.what()) << "\n";
    return 5;
  } catch (const std::exception& e) {
    err << "error: internal: " << single_line(e.what()) << "\n";
    return 1;
  }
}

}  // namespace birkhoff::cli
