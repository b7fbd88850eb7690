// Command-line front end: enumeration, 2-DCS, bounds, generators, oracle
// verification and the benchmark harness.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "tconn/connecting.hpp"
#include "tconn/dcs.hpp"
#include "tconn/errors.hpp"
#include "tconn/generators.hpp"
#include "tconn/induced_paths.hpp"
#include "tconn/instance.hpp"
#include "tconn/oracles.hpp"
#include "tconn/report.hpp"

namespace {

using namespace tconn;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct SetFlags {
  std::string terminals, z1, z2, source, target_set;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--terminals", terminals, "terminal set T (1-based ids)");
    cmd->add_option("--z1", z1, "terminal set Z1");
    cmd->add_option("--z2", z2, "terminal set Z2");
    cmd->add_option("--source", source, "source vertex v");
    cmd->add_option("--target-set", target_set, "target set R");
  }

  /// Flags override `c set` lines of the same name.
  void apply(Instance& inst) const {
    auto put = [&](const std::string& name, const std::string& value) {
      if (!value.empty()) inst.sets[name] = parse_id_list(value);
    };
    put("T", terminals);
    put("Z1", z1);
    put("Z2", z2);
    put("v", source);
    put("R", target_set);
    for (const auto& [name, ids] : inst.sets)
      for (int id : ids)
        if (id > inst.graph.size())
          throw InputError("vertex id " + std::to_string(id) + " out of range in set '" + name + "'");
  }
};

std::string bound_text(int n, int t) {
  if (t < 2 || 3 * t > n) return "na";
  std::ostringstream os;
  os << std::setprecision(10) << minimal_set_count_bound(n, t).ln_value;
  return os.str();
}

int cmd_enumerate_mcs(const std::string& file, const SetFlags& flags, bool raw, const std::string& strategy,
                      bool incremental, const std::string& format) {
  Instance inst = read_instance(file);
  flags.apply(inst);
  const Graph& g = inst.graph;
  const VertexSet t = inst.set("T");
  const bool csv = format == "csv";
  if (csv) std::cout << "index,size,vertices\n";
  std::uint64_t index = 0;
  const SetSink print = [&](const VertexSet& s) {
    ++index;
    if (csv)
      std::cout << index << ',' << s.size() << ',' << format_set(g, s) << '\n';
    else
      std::cout << format_set(g, s) << '\n';
    return Flow::Continue;
  };
  const PathMode mode = incremental ? PathMode::Incremental : PathMode::Rebuild;
  ConnectingResult res;
  if (raw) {
    res = enumerate_connecting_supersets(g, t, print, mode);
  } else {
    ConnectingOptions options;
    options.path_mode = mode;
    if (strategy == "branching") options.strategy = ConnectingStrategy::Branching;
    if (strategy == "brute") options.strategy = ConnectingStrategy::BruteForce;
    res = enumerate_minimal_connecting(g, t, print, options);
  }
  std::cout << "# count=" << res.emitted << " raw=" << res.raw << " bound_ln=" << bound_text(g.size(), t.size())
            << '\n';
  return kExitYes;
}

int cmd_enumerate_paths(const std::string& file, const SetFlags& flags, std::optional<int> t_limit,
                        const std::string& format) {
  Instance inst = read_instance(file);
  flags.apply(inst);
  const Graph& g = inst.graph;
  const bool csv = format == "csv";
  if (csv) std::cout << "index,length,vertices,branch_depth\n";
  std::uint64_t index = 0;
  const PathEnumeration res =
      enumerate_induced_paths(g, inst.vertex("v"), inst.set("R"), t_limit, [&](const InducedPath& p) {
        ++index;
        if (csv) {
          std::cout << index << ',' << p.seq.size() << ',';
          for (std::size_t i = 0; i < p.seq.size(); ++i) std::cout << (i ? " " : "") << g.external_id(p.seq[i]);
          std::cout << ',' << p.branch_depth << '\n';
        } else {
          std::cout << format_path(g, p) << '\n';
        }
        return Flow::Continue;
      });
  std::cout << "# count=" << res.count << " nodes=" << res.nodes << '\n';
  return kExitYes;
}

int cmd_solve_2dcs(const std::string& file, const SetFlags& flags, bool count_all, const std::string& strategy) {
  Instance inst = read_instance(file);
  flags.apply(inst);
  DcsInstance dcs{inst.graph, inst.set("Z1"), inst.set("Z2")};
  DcsOptions options;
  options.count_all = count_all;
  if (strategy == "enumerate") options.force = DcsStrategy::EnumerateMinimal;
  if (strategy == "subset") options.force = DcsStrategy::SubsetLoop;
  const DcsResult res = solve_2dcs(dcs, options);
  if (res.witness && !verify_witness(dcs, *res.witness)) throw InternalError("solver returned an invalid witness");
  if (!res.witness) {
    std::cout << "NO\n";
  } else {
    std::cout << "YES\n"
              << "A1: " << format_set(dcs.graph, res.witness->a1) << '\n'
              << "A2: " << format_set(dcs.graph, res.witness->a2) << '\n';
  }
  if (count_all)
    std::cout << "# witnesses=" << res.witnesses << " candidates=" << res.candidates << " strategy="
              << (res.strategy == DcsStrategy::EnumerateMinimal ? "enumerate" : "subset") << '\n';
  return res.witness ? kExitYes : kExitNo;
}

int cmd_bound(std::optional<int> t, std::optional<int> n, std::optional<int> size, std::optional<double> alpha_max,
              double step) {
  const bool any = t || n || alpha_max;
  std::cout << std::setprecision(10);
  if (t) std::cout << "l(" << *t << ")=" << max_leaves(*t) << '\n';
  if (n) {
    if (!size) throw InputError("--n needs --size (the terminal count)");
    const CountBound b = minimal_set_count_bound(*n, *size);
    std::cout << "count_bound n=" << *n << " t=" << *size << " ln=" << b.ln_value << " value=" << std::exp(b.ln_value);
    if (b.exact) std::cout << " exact=" << *b.exact;
    std::cout << '\n';
  }
  if (alpha_max || !any) {
    const double top = alpha_max.value_or(kDcsAlphaThreshold);
    std::cout << "alpha,base,ln_base,subset_loop_base\n";
    for (const CurvePoint& p : runtime_bound_curve(top, step))
      std::cout << p.alpha << ',' << p.base << ',' << p.ln_base << ',' << std::exp(subset_loop_base_ln(p.alpha))
                << '\n';
  }
  return kExitYes;
}

Instance make_generated(const std::string& kind, int columns, int r_size, const std::string& variant, int n,
                        double p, std::uint64_t seed) {
  Instance inst;
  if (kind == "figure1") {
    Figure1Spec spec{columns, r_size, Figure1Variant::Exact3i};
    if (variant == "plus1") spec.variant = Figure1Variant::Plus1;
    else if (variant == "plus2") spec.variant = Figure1Variant::Plus2;
    else if (variant != "exact3i") throw InputError("unknown variant '" + variant + "'");
    Figure1Instance f = gen_figure1(spec);
    inst.graph = f.graph;
    inst.sets["v"] = to_external(f.graph, VertexSet(f.graph.size(), {f.source}));
    inst.sets["R"] = to_external(f.graph, f.targets);
    inst.sets["T"] = to_external(f.graph, f.terminals());
    inst.meta.push_back("figure1 columns=" + std::to_string(columns) + " r_size=" + std::to_string(r_size) +
                        " variant=" + variant);
    return inst;
  }
  if (kind == "random") {
    inst.graph = gen_random(n, p, seed);
    std::ostringstream meta;
    meta << "random n=" << n << " p=" << p << " seed=" << seed;
    inst.meta.push_back(meta.str());
    return inst;
  }
  NamedGraph named;
  if (kind == "path") named = NamedGraph::Path;
  else if (kind == "cycle") named = NamedGraph::Cycle;
  else if (kind == "star") named = NamedGraph::Star;
  else if (kind == "complete") named = NamedGraph::Complete;
  else throw InputError("unknown generator '" + kind + "'");
  inst.graph = gen_named(named, n);
  inst.meta.push_back(kind + " n=" + std::to_string(n));
  return inst;
}

int cmd_verify(const std::string& file, const SetFlags& flags) {
  Instance inst = read_instance(file);
  flags.apply(inst);
  const Graph& g = inst.graph;
  bool ran = false;
  bool agree = true;
  if (inst.has_set("T")) {
    ran = true;
    const VertexSet t = inst.set("T");
    std::set<VertexSet> got;
    enumerate_minimal_connecting(g, t, [&](const VertexSet& s) {
      got.insert(s);
      return Flow::Continue;
    });
    const auto want = oracle::minimal_connecting(g, t);
    const bool ok = got == want;
    agree = agree && ok;
    std::cout << "connecting: " << (ok ? "agree" : "MISMATCH") << " enumerated=" << got.size()
              << " oracle=" << want.size() << '\n';
  }
  if (inst.has_set("v") && inst.has_set("R")) {
    ran = true;
    std::set<std::vector<Vertex>> got;
    enumerate_induced_paths(g, inst.vertex("v"), inst.set("R"), std::nullopt, [&](const InducedPath& p) {
      got.insert(p.seq);
      return Flow::Continue;
    });
    const auto want = oracle::induced_paths(g, inst.vertex("v"), inst.set("R"));
    const bool ok = got == want;
    agree = agree && ok;
    std::cout << "paths: " << (ok ? "agree" : "MISMATCH") << " enumerated=" << got.size()
              << " oracle=" << want.size() << '\n';
  }
  if (inst.has_set("Z1") && inst.has_set("Z2")) {
    ran = true;
    DcsInstance dcs{g, inst.set("Z1"), inst.set("Z2")};
    const DcsResult res = solve_2dcs(dcs);
    const bool want = oracle::two_dcs(g, dcs.z1, dcs.z2);
    const bool ok = res.witness.has_value() == want && (!res.witness || verify_witness(dcs, *res.witness));
    agree = agree && ok;
    std::cout << "2dcs: " << (ok ? "agree" : "MISMATCH") << " solver=" << (res.witness ? "YES" : "NO")
              << " oracle=" << (want ? "YES" : "NO") << '\n';
  }
  if (!ran) throw InputError("nothing to verify: supply T, v and R, or Z1 and Z2");
  return agree ? kExitYes : kExitInternal;
}

std::vector<BenchInstance> random_suite(int count, int n, double p, std::uint64_t seed, int terminals) {
  std::vector<BenchInstance> out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = rng();
    Instance inst;
    inst.graph = gen_random(n, p, s);
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 1);
    std::shuffle(ids.begin(), ids.end(), rng);
    const auto k = static_cast<std::size_t>(std::clamp(terminals, 2, n));
    std::vector<int> t(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k));
    inst.sets["T"] = t;
    inst.sets["Z1"] = std::vector<int>(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k / 2));
    inst.sets["Z2"] = std::vector<int>(t.begin() + static_cast<std::ptrdiff_t>(k / 2), t.end());
    inst.sets["v"] = {t.front()};
    inst.sets["R"] = {t.back()};
    std::ostringstream id;
    id << "random-" << i << "-n" << n << "-seed" << s;
    out.push_back({id.str(), std::move(inst)});
  }
  return out;
}

int cmd_bench(const std::vector<std::string>& files, const std::string& mode_name, int jobs, int figure1_max,
              int random_count, int n, double p, std::uint64_t seed, int terminals, const std::string& format,
              const std::string& output) {
  const BenchMode mode = parse_bench_mode(mode_name);
  std::vector<BenchInstance> instances;
  for (const auto& f : files) instances.push_back({f, read_instance(f)});
  for (int i = 1; i <= figure1_max; ++i)
    instances.push_back({"figure1-" + std::to_string(i), make_generated("figure1", i, 1, "exact3i", 0, 0, 0)});
  if (random_count > 0) {
    auto suite = random_suite(random_count, n, p, seed, terminals);
    std::move(suite.begin(), suite.end(), std::back_inserter(instances));
  }
  if (instances.empty()) throw InputError("bench: no instances (give files, --figure1 or --random)");

  const auto reports = run_benchmark(instances, mode, jobs);
  std::ofstream file_out;
  if (!output.empty()) {
    file_out.open(output);
    if (!file_out) throw InputError("cannot write " + output);
  }
  std::ostream& os = output.empty() ? std::cout : file_out;
  if (format == "csv") {
    os << csv_header() << '\n';
    for (const auto& r : reports) os << to_csv_row(r) << '\n';
  } else {
    os << std::left << std::setw(36) << "instance" << std::setw(6) << "n" << std::setw(6) << "|T|" << std::setw(12)
       << "count" << std::setw(12) << "raw" << std::setw(12) << "bound_ln" << std::setw(12) << "seconds"
       << "status\n";
    for (const auto& r : reports) {
      std::ostringstream bound;
      if (r.bound_ln) bound << std::setprecision(6) << *r.bound_ln;
      else bound << "na";
      os << std::setw(36) << r.instance << std::setw(6) << r.n << std::setw(6) << r.terminals << std::setw(12)
         << r.emitted << std::setw(12) << r.raw << std::setw(12) << bound.str() << std::setw(12) << std::setprecision(4)
         << r.wall_seconds << r.status << '\n';
    }
  }
  for (const auto& r : reports)
    if (r.status != "ok") return kExitInternal;
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate minimal T-connecting sets and induced paths; solve 2-disjoint connected subgraphs"};
  app.require_subcommand(1);

  SetFlags flags;
  std::string file;
  std::string format = "text";
  const std::vector<std::string> formats{"text", "csv"};

  auto* mcs = app.add_subcommand("enumerate-mcs", "enumerate minimal T-connecting sets");
  bool raw = false;
  bool incremental = false;
  std::string strategy = "auto";
  mcs->add_option("file", file, "instance file")->required();
  flags.add_to(mcs);
  mcs->add_flag("--raw", raw, "stream the unfiltered branching output");
  mcs->add_option("--strategy", strategy, "auto | branching | brute")
      ->check(CLI::IsMember({"auto", "branching", "brute"}));
  mcs->add_flag("--incremental", incremental, "search paths without rebuilding contracted graphs");
  mcs->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* paths = app.add_subcommand("enumerate-paths", "enumerate induced paths from v to N(R)");
  std::optional<int> t_limit;
  paths->add_option("file", file, "instance file")->required();
  flags.add_to(paths);
  paths->add_option("--t-limit", t_limit, "maximum branch depth");
  paths->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* dcs = app.add_subcommand("solve-2dcs", "decide 2-disjoint connected subgraphs");
  bool count_all = false;
  std::string dcs_strategy = "auto";
  dcs->add_option("file", file, "instance file")->required();
  flags.add_to(dcs);
  dcs->add_flag("--count-all", count_all, "count every witness instead of stopping at the first");
  dcs->add_option("--strategy", dcs_strategy, "auto | enumerate | subset")
      ->check(CLI::IsMember({"auto", "enumerate", "subset"}));

  auto* bound = app.add_subcommand("bound", "print leaf-count, set-count and runtime bounds");
  std::optional<int> bound_t, bound_n, bound_size;
  std::optional<double> alpha_max;
  double step = 1e-3;
  bound->add_option("--t", bound_t, "print l(t)");
  bound->add_option("--n", bound_n, "vertex count for the minimal-set count bound");
  bound->add_option("--size", bound_size, "terminal count for the minimal-set count bound");
  bound->add_option("--alpha-max", alpha_max, "upper end of the runtime curve");
  bound->add_option("--step", step, "runtime curve grid step");

  auto* gen = app.add_subcommand("gen", "write a generated instance to stdout");
  std::string kind;
  int columns = 2, r_size = 1, gen_n = 10;
  std::string variant = "exact3i";
  double edge_prob = 0.3;
  std::uint64_t seed = 1;
  gen->add_option("kind", kind, "figure1 | random | path | cycle | star | complete")->required();
  gen->add_option("--columns", columns, "figure1: number of columns");
  gen->add_option("--r-size", r_size, "figure1: |R|");
  gen->add_option("--variant", variant, "figure1: exact3i | plus1 | plus2");
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--p", edge_prob, "random: edge probability");
  gen->add_option("--seed", seed, "random: seed");
  flags.add_to(gen);

  auto* verify = app.add_subcommand("verify", "compare enumerators against brute-force oracles");
  verify->add_option("file", file, "instance file")->required();
  flags.add_to(verify);

  auto* bench = app.add_subcommand("bench", "run instances and report counts, bounds and timings");
  std::vector<std::string> bench_files;
  std::string bench_mode = "mcs";
  int jobs = 1, figure1_max = 0, random_count = 0, bench_terminals = 3;
  std::string output;
  bench->add_option("files", bench_files, "instance files");
  bench->add_option("--mode", bench_mode, "mcs | paths | dcs | brute")
      ->check(CLI::IsMember({"mcs", "paths", "dcs", "brute"}));
  bench->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--figure1", figure1_max, "add figure-1 instances with 1..N columns");
  bench->add_option("--random", random_count, "add N random instances");
  bench->add_option("--n", gen_n, "random: vertex count");
  bench->add_option("--p", edge_prob, "random: edge probability");
  bench->add_option("--seed", seed, "random: seed");
  bench->add_option("--terminals-count", bench_terminals, "random: terminals per instance");
  bench->add_option("--format", format)->check(CLI::IsMember(formats));
  bench->add_option("--output", output, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*mcs) return cmd_enumerate_mcs(file, flags, raw, strategy, incremental, format);
    if (*paths) return cmd_enumerate_paths(file, flags, t_limit, format);
    if (*dcs) return cmd_solve_2dcs(file, flags, count_all, dcs_strategy);
    if (*bound) return cmd_bound(bound_t, bound_n, bound_size, alpha_max, step);
    if (*gen) {
      Instance inst = make_generated(kind, columns, r_size, variant, gen_n, edge_prob, seed);
      flags.apply(inst);
      std::cout << serialize_instance(inst);
      return kExitYes;
    }
    if (*verify) return cmd_verify(file, flags);
    if (*bench)
      return cmd_bench(bench_files, bench_mode, jobs, figure1_max, random_count, gen_n, edge_prob, seed,
                       bench_terminals, format, output);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInput;
}
