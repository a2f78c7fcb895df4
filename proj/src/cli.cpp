#include "bmatrix/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "bmatrix/errors.hpp"
#include "bmatrix/experiment.hpp"
#include "bmatrix/io.hpp"
#include "bmatrix/kernels.hpp"
#include "bmatrix/reporting.hpp"

namespace bmatrix::cli {

namespace {

namespace fs = std::filesystem;

struct Flags {
  long long neurons = 0;
  std::optional<long long> memories;
  long long iterations = 100;
  std::optional<std::uint64_t> seed;
  std::string order_strategy = "row-sort";
  bool match_complement = false;
  std::string polarity;
  std::string out_dir = ".";
  std::string memory_file;
  std::string proximity_file;
  long long start = 0;
  long long order_from = 0;
  int threads = 0;
};

// Thrown for flag values that parse but fail validation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const Flags& f) {
  if (f.seed) return *f.seed;
  if (const char* env = std::getenv("BMATRIX_SEED"); env && *env) {
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
      throw UsageError("BMATRIX_SEED is not an unsigned integer: '" + std::string(s) + "'");
    }
    return v;
  }
  return 0;
}

std::size_t require_neurons(const Flags& f) {
  if (f.neurons < 2) throw UsageError("--neurons must be >= 2");
  return static_cast<std::size_t>(f.neurons);
}

std::size_t resolve_memories(const Flags& f, std::size_t n) {
  if (!f.memories) return ExperimentConfig::default_memories(n);
  if (*f.memories < 1) throw UsageError("--memories must be >= 1");
  return static_cast<std::size_t>(*f.memories);
}

ScanOptions scan_options(const Flags& f, PolarityPolicy default_policy) {
  ScanOptions o;
  o.strategy = parse_order_strategy(f.order_strategy);
  o.polarity = f.polarity.empty() ? default_policy : parse_polarity_policy(f.polarity);
  o.match_complement = f.match_complement;
  return o;
}

void apply_threads(const Flags& f) {
  if (f.threads < 0) throw UsageError("--threads must be >= 0");
  if (f.threads > 0) omp_set_num_threads(f.threads);
}

int cmd_experiment(const Flags& f, std::ostream& out) {
  ExperimentConfig config;
  config.neurons = require_neurons(f);
  config.memories = resolve_memories(f, config.neurons);
  if (f.iterations < 1) throw UsageError("--iterations must be >= 1");
  config.iterations = static_cast<std::size_t>(f.iterations);
  config.master_seed = resolve_seed(f);
  config.scan = scan_options(f, PolarityPolicy::both);
  apply_threads(f);

  const CapacityCurves curves = run_experiment(config);
  const fs::path path = fs::path(f.out_dir) / "capacity.csv";
  write_capacity_csv(curves, path);
  out << "wrote " << path.string() << " (" << curves.size() << " rows)\n";
  return kExitOk;
}

int cmd_generators(const Flags& f, std::ostream& out) {
  const std::size_t n = require_neurons(f);
  const std::size_t m = resolve_memories(f, n);
  const ScanOptions options = scan_options(f, PolarityPolicy::both);
  apply_threads(f);

  const GeneratorSnapshot snap = generator_snapshot(n, m, resolve_seed(f), options);
  const std::string svg = format_generator_svg(snap.map, PolygonLayout{.n = n});
  const std::string report = format_generator_report(snap.map);
  const fs::path dir(f.out_dir);
  write_text_file(dir / "generators.svg", svg);
  write_text_file(dir / "generators.json", report);

  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", snap.map.non_generator_fraction());
  out << "retrieved " << snap.map.retrieved_count() << " of " << m
      << " memories; non_generator_fraction " << buf << '\n';
  out << "wrote " << (dir / "generators.svg").string() << " and "
      << (dir / "generators.json").string() << '\n';
  return kExitOk;
}

int cmd_retrieve(const Flags& f, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(f);
  std::vector<BipolarVector> memories;
  std::optional<ProximityMatrix> proximity;
  std::size_t n = 0;
  if (!f.memory_file.empty()) {
    memories = read_memory_file(f.memory_file);
    if (memories.empty()) throw ParseError(f.memory_file + ": no memories");
    n = memories.front().size();
    if (f.neurons != 0 && static_cast<std::size_t>(f.neurons) != n) {
      throw UsageError("--neurons disagrees with the memory file length");
    }
  } else {
    n = require_neurons(f);
    TrialDraw draw = draw_trial(n, resolve_memories(f, n), seed, 0);
    memories = std::move(draw.memories);
    proximity = std::move(draw.proximity);
  }
  if (!f.proximity_file.empty()) {
    proximity = read_proximity_file(f.proximity_file);
  } else if (!proximity) {
    Rng rng = trial_stream(seed, 0);
    proximity = generate_fair_proximity(n, rng);
  }
  if (proximity->size() != n) throw UsageError("proximity matrix size differs from network");
  if (f.start < 1 || static_cast<std::size_t>(f.start) > n) {
    throw UsageError("--start must be in 1.." + std::to_string(n));
  }
  const ScanOptions options = scan_options(f, PolarityPolicy::positive);

  const TMatrix t = train(n, memories);
  const std::size_t start = static_cast<std::size_t>(f.start) - 1;
  for (Sign s : {Sign{1}, Sign{-1}}) {
    if (!polarity_enabled(options.polarity, s)) continue;
    const BipolarVector v = retrieve_from(t, *proximity, start, s, options.strategy);
    const auto match = match_memory(v.values(), memories, options.match_complement);
    out << "polarity=" << (s > 0 ? "+1" : "-1") << " retrieved=" << format_memory(v)
        << " match=" << (match ? "true" : "false");
    if (match) out << " memory=" << (*match + 1);
    out << '\n';
  }
  return kExitOk;
}

int cmd_proximity(const Flags& f, std::ostream& out) {
  const std::size_t n = require_neurons(f);
  const OrderStrategy strategy = parse_order_strategy(f.order_strategy);
  if (f.order_from < 0 || static_cast<std::size_t>(f.order_from) > n) {
    throw UsageError("--order-from must be in 1.." + std::to_string(n));
  }
  Rng rng = trial_stream(resolve_seed(f), 0);
  const ProximityMatrix p = generate_fair_proximity(n, rng);

  std::ostringstream text;
  write_proximity(text, p);
  const fs::path path = fs::path(f.out_dir) / "proximity.txt";
  write_text_file(path, text.str());

  if (f.order_from > 0) {
    const UpdateOrder order = update_order(p, static_cast<std::size_t>(f.order_from) - 1, strategy);
    for (std::size_t i = 0; i < order.size(); ++i) out << (i ? " " : "") << order[i] + 1;
    out << '\n';
  }
  return kExitOk;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--seed", f.seed, "Master seed (falls back to BMATRIX_SEED, then 0)");
  sub->add_option("--order-strategy", f.order_strategy, "row-sort | greedy-chain")
      ->capture_default_str();
  sub->add_option("--out", f.out_dir, "Output directory")->capture_default_str();
}

void add_network(CLI::App* sub, Flags& f) {
  sub->add_option("--memories", f.memories, "Memories fed (default ceil(0.6 n), max 2n)");
  sub->add_flag("--match-complement", f.match_complement,
                "Credit generators that produce a memory's complement");
  sub->add_option("--polarity", f.polarity, "Start polarity: +1, -1 or both");
  sub->add_option("--threads", f.threads, "OpenMP threads (0 = runtime default)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"B-matrix generator retrieval in Hebbian feedback networks", "bmatrix"};
  app.require_subcommand(1, 1);
  Flags f;

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo capacity curves (CSV)");
  experiment->add_option("--neurons", f.neurons, "Neuron count (>= 2)")->required();
  experiment->add_option("--iterations", f.iterations, "Trials to average")
      ->capture_default_str();
  add_network(experiment, f);
  add_common(experiment, f);

  auto* generators = app.add_subcommand("generators", "Generator map (SVG + JSON report)");
  generators->add_option("--neurons", f.neurons, "Neuron count (>= 2)")->required();
  add_network(generators, f);
  add_common(generators, f);

  auto* retrieve = app.add_subcommand("retrieve", "Spread activity from one neuron");
  retrieve->add_option("--memory-file", f.memory_file, "Memories, one +/- string per line");
  retrieve->add_option("--proximity-file", f.proximity_file, "Proximity matrix file");
  retrieve->add_option("--neurons", f.neurons, "Neuron count when drawing random memories");
  retrieve->add_option("--start", f.start, "Start neuron (1-based)")->required();
  add_network(retrieve, f);
  add_common(retrieve, f);

  auto* proximity = app.add_subcommand("proximity", "Write a fair proximity matrix");
  proximity->add_option("--neurons", f.neurons, "Neuron count (>= 2)")->required();
  proximity->add_option("--order-from", f.order_from, "Print the update order from this neuron");
  add_common(proximity, f);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (experiment->parsed()) return cmd_experiment(f, out);
    if (generators->parsed()) return cmd_generators(f, out);
    if (retrieve->parsed()) return cmd_retrieve(f, out);
    return cmd_proximity(f, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace bmatrix::cli
