#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "wavesyn/document.hpp"
#include "wavesyn/errors.hpp"
#include "wavesyn/extended.hpp"
#include "wavesyn/haar.hpp"
#include "wavesyn/metrics.hpp"
#include "wavesyn/oracles.hpp"
#include "wavesyn/restricted.hpp"
#include "wavesyn/synopsis.hpp"
#include "wavesyn/unrestricted.hpp"
#include "wavesyn/vopt.hpp"

namespace {

using namespace wavesyn;

struct Config {
  std::string input;
  std::string weights;
  std::string synopsis_doc;
  std::string output;
  std::string metric = "l2";
  std::string mode = "restricted";
  std::size_t budget = 0;
  double epsilon = 0.1;
  std::size_t header_cost = 1;
  std::size_t grid_cap = 20000;
  bool stats = false;
};

Metric parse_metric(const std::string& name) {
  if (name == "linf") return Metric::linf();
  if (name.size() >= 2 && name[0] == 'l') {
    try {
      return Metric::lk(std::stoi(name.substr(1)));
    } catch (const std::exception&) {
    }
  }
  throw ValidationError("unknown metric '" + name + "' (use l1, l2, ..., linf)");
}

std::vector<double> read_numbers(const std::string& path) {
  if (path.empty()) return parse_numbers(std::cin);
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return parse_numbers(f);
}

Signal load_signal(const Config& cfg) {
  std::vector<double> values = read_numbers(cfg.input);
  std::vector<double> weights;
  if (!cfg.weights.empty()) {
    std::ifstream f(cfg.weights);
    if (!f) throw ParseError("cannot open " + cfg.weights);
    weights = parse_numbers(f);
  }
  return Signal::make(std::move(values), std::move(weights));
}

class Out {
 public:
  explicit Out(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ValidationError("cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void cmd_transform(const Config& cfg) {
  const Signal s = load_signal(cfg);
  const std::vector<double> coeffs = haar_forward(s.values);
  Out out(cfg.output);
  out.os() << "param command transform\n";
  out.os() << "param n " << s.size() << "\n";
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    out.os() << "coeff " << i << " " << fmt(coeffs[i]) << "\n";
}

void cmd_synopsis(const Config& cfg) {
  const Signal s = load_signal(cfg);
  const Metric m = parse_metric(cfg.metric);
  Out out(cfg.output);
  std::ostream& os = out.os();
  os << "param command synopsis\n";
  os << "param mode " << cfg.mode << "\n";
  os << "param n " << s.size() << "\n";
  os << "param metric " << cfg.metric << "\n";
  os << "param budget " << cfg.budget << "\n";
  if (cfg.mode == "restricted") {
    SolveStats st;
    const SynopsisSolution sol = extract_restricted(s, m, cfg.budget, &st);
    for (const Pick& p : sol.picks) os << "pick " << p.index << " " << fmt(p.value) << "\n";
    os << "error " << fmt(sol.error) << "\n";
    if (cfg.stats) {
      os << "stat node_visits " << st.node_visits << "\n";
      os << "stat minplus_ops " << st.minplus_ops << "\n";
      os << "stat peak_live_entries " << st.peak_live_entries << "\n";
    }
  } else if (cfg.mode == "unrestricted") {
    if (cfg.epsilon <= 0) throw ValidationError("--epsilon must be positive");
    os << "param epsilon " << fmt(cfg.epsilon) << "\n";
    UnrestrictedOptions opt;
    opt.grid_cap = cfg.grid_cap;
    UnrestrictedStats st;
    const SynopsisSolution sol = unrestricted_synopsis(s, m, cfg.budget, cfg.epsilon, opt, &st);
    for (const Pick& p : sol.picks) os << "pick " << p.index << " " << fmt(p.value) << "\n";
    os << "error " << fmt(sol.error) << "\n";
    if (cfg.stats) os << "stat peak_live_entries " << st.peak_live_entries << "\n";
  } else {
    throw ValidationError("--mode must be restricted or unrestricted");
  }
}

void cmd_histogram(const Config& cfg) {
  const std::vector<double> values = read_numbers(cfg.input);
  if (cfg.budget < 1) throw ValidationError("--budget must be >= 1");
  VoptStats st;
  const Histogram h = vopt_linear_space(values, cfg.budget, &st);
  Out out(cfg.output);
  std::ostream& os = out.os();
  os << "param command histogram\n";
  os << "param n " << values.size() << "\n";
  os << "param budget " << cfg.budget << "\n";
  for (std::size_t b = 0; b < h.buckets(); ++b)
    os << "bucket " << h.boundaries[b] << " " << h.boundaries[b + 1] << " " << fmt(h.reps[b])
       << "\n";
  os << "sse " << fmt(h.sse) << "\n";
  os << "error " << fmt(std::sqrt(h.sse)) << "\n";
  if (cfg.stats) {
    os << "stat cell_evals " << st.cell_evals << "\n";
    os << "stat top_pass_evals " << st.top_pass_evals << "\n";
  }
}

void cmd_extended(const Config& cfg) {
  std::vector<std::vector<double>> matrix;
  if (cfg.input.empty()) {
    matrix = parse_matrix(std::cin);
  } else {
    std::ifstream f(cfg.input);
    if (!f) throw ParseError("cannot open " + cfg.input);
    matrix = parse_matrix(f);
  }
  const std::vector<MultiCoefficient> items = compute_benefits(matrix);
  ExtendedStats st;
  const ExtendedAllocation alloc = solve_extended(items, cfg.budget, cfg.header_cost, &st);
  Out out(cfg.output);
  std::ostream& os = out.os();
  os << "param command extended\n";
  os << "param n " << matrix.size() << "\n";
  os << "param dims " << matrix[0].size() << "\n";
  os << "param budget " << cfg.budget << "\n";
  os << "param header_cost " << cfg.header_cost << "\n";
  for (const auto& e : alloc.entries) {
    os << "alloc " << e.index << " " << e.size << " " << fmt(e.profit) << "\n";
    for (std::size_t d = 0; d < e.size; ++d)
      os << "dim " << e.index << " " << e.dims[d] << " " << fmt(e.values[d]) << "\n";
  }
  os << "profit " << fmt(alloc.profit) << "\n";
  os << "cost " << alloc.cost << "\n";
  if (cfg.stats) {
    os << "stat candidate_pairs " << st.candidate_pairs << "\n";
    os << "stat peak_table_entries " << st.peak_table_entries << "\n";
    os << "stat cell_evals " << st.cell_evals << "\n";
  }
}

void cmd_evaluate(const Config& cfg) {
  if (cfg.input.empty() && cfg.synopsis_doc.empty())
    throw ValidationError("evaluate needs --input, with the solution document on "
                          "stdin or via --synopsis");
  std::vector<Pick> picks;
  if (cfg.synopsis_doc.empty()) {
    picks = parse_picks(std::cin);
  } else {
    std::ifstream f(cfg.synopsis_doc);
    if (!f) throw ParseError("cannot open " + cfg.synopsis_doc);
    picks = parse_picks(f);
  }
  const Signal s = load_signal(cfg);
  const Metric m = parse_metric(cfg.metric);
  const double err = evaluate_synopsis(s, picks, m);
  Out out(cfg.output);
  std::ostream& os = out.os();
  os << "param command evaluate\n";
  os << "param n " << s.size() << "\n";
  os << "param metric " << cfg.metric << "\n";
  os << "param picks " << picks.size() << "\n";
  os << "error " << fmt(err) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Haar wavelet synopses, V-Opt histograms, and extended-wavelet allocations"};
  app.require_subcommand(1);
  Config cfg;

  auto add_io = [&](CLI::App* c) {
    c->add_option("-i,--input", cfg.input, "input file (stdin when absent)");
    c->add_option("-o,--output", cfg.output, "output file (stdout when absent)");
  };

  CLI::App* t = app.add_subcommand("transform", "forward Haar transform");
  add_io(t);
  t->add_option("--weights", cfg.weights, "per-point weights file");

  CLI::App* sy = app.add_subcommand("synopsis", "B-term wavelet synopsis");
  add_io(sy);
  sy->add_option("--weights", cfg.weights, "per-point weights file");
  sy->add_option("--mode", cfg.mode, "restricted | unrestricted");
  sy->add_option("-m,--metric", cfg.metric, "l1, l2, ..., linf");
  sy->add_option("-B,--budget", cfg.budget, "coefficient budget")->required();
  sy->add_option("-e,--epsilon", cfg.epsilon, "additive-error knob (unrestricted)");
  sy->add_option("--grid-cap", cfg.grid_cap, "max value-grid points (unrestricted)");
  sy->add_flag("--stats", cfg.stats, "emit solver counters");

  CLI::App* hi = app.add_subcommand("histogram", "optimal sum-of-squares histogram");
  add_io(hi);
  hi->add_option("-B,--budget", cfg.budget, "bucket budget")->required();
  hi->add_flag("--stats", cfg.stats, "emit solver counters");

  CLI::App* ex = app.add_subcommand("extended", "multi-dimension coefficient allocation");
  add_io(ex);
  ex->add_option("-B,--budget", cfg.budget, "space budget")->required();
  ex->add_option("--header-cost", cfg.header_cost, "per-stored-item header cost");
  ex->add_flag("--stats", cfg.stats, "emit solver counters");

  CLI::App* ev = app.add_subcommand("evaluate", "error of a stored synopsis");
  add_io(ev);
  ev->add_option("--weights", cfg.weights, "per-point weights file");
  ev->add_option("-m,--metric", cfg.metric, "l1, l2, ..., linf");
  ev->add_option("--synopsis", cfg.synopsis_doc, "solution document (stdin when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }

  if (t->parsed()) cmd_transform(cfg);
  if (sy->parsed()) cmd_synopsis(cfg);
  if (hi->parsed()) cmd_histogram(cfg);
  if (ex->parsed()) cmd_extended(cfg);
  if (ev->parsed()) cmd_evaluate(cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const wavesyn::ResourceGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const wavesyn::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const wavesyn::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
