#include "tconn/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "tconn/connecting.hpp"
#include "tconn/dcs.hpp"
#include "tconn/errors.hpp"
#include "tconn/induced_paths.hpp"

namespace tconn {

std::string_view to_string(BenchMode mode) {
  switch (mode) {
    case BenchMode::Mcs:
      return "mcs";
    case BenchMode::Paths:
      return "paths";
    case BenchMode::Dcs:
      return "dcs";
    case BenchMode::Brute:
      return "brute";
  }
  return "?";
}

BenchMode parse_bench_mode(std::string_view name) {
  for (BenchMode m : {BenchMode::Mcs, BenchMode::Paths, BenchMode::Dcs, BenchMode::Brute})
    if (to_string(m) == name) return m;
  throw InputError("unknown benchmark mode '" + std::string(name) + "'");
}

namespace {

constexpr double kLogSlack = 1e-9;

std::optional<double> connecting_bound(int n, int t) {
  if (t < 2 || 3 * t > n) return std::nullopt;
  return minimal_set_count_bound(n, t).ln_value;
}

void check_against_bound(RunReport& r) {
  if (r.bound_ln && r.emitted > 0 && std::log(static_cast<double>(r.emitted)) > *r.bound_ln + kLogSlack)
    r.status = "bound-violation";
}

}  // namespace

RunReport run_one(const BenchInstance& bench, BenchMode mode) {
  const Instance& inst = bench.instance;
  const Graph& g = inst.graph;
  RunReport r;
  r.instance = bench.id;
  r.n = g.size();
  r.m = g.edge_count();
  r.mode = mode;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (mode) {
      case BenchMode::Mcs:
      case BenchMode::Brute: {
        const VertexSet t = inst.set("T");
        r.terminals = t.size();
        const auto count = [](const VertexSet&) { return Flow::Continue; };
        const ConnectingResult res = mode == BenchMode::Mcs ? enumerate_minimal_connecting(g, t, count)
                                                            : brute_force_connecting(g, t, count);
        r.emitted = res.emitted;
        r.raw = res.raw;
        r.nodes = res.nodes;
        r.bound_ln = connecting_bound(r.n, r.terminals);
        break;
      }
      case BenchMode::Paths: {
        const Vertex v = inst.vertex("v");
        const VertexSet targets = inst.set("R");
        r.terminals = targets.size();
        const PathEnumeration res =
            enumerate_induced_paths(g, v, targets, std::nullopt, [](const InducedPath&) { return Flow::Continue; });
        r.emitted = res.count;
        r.raw = res.count;
        r.nodes = res.nodes;
        r.bound_ln = std::log(max_leaves(r.n - r.terminals - 1).convert_to<double>());
        break;
      }
      case BenchMode::Dcs: {
        DcsInstance dcs{g, inst.set("Z1"), inst.set("Z2")};
        r.terminals = dcs.z1.size() + dcs.z2.size();
        const DcsResult res = solve_2dcs(dcs);
        r.emitted = res.witness ? 1 : 0;
        r.raw = res.candidates;
        r.nodes = res.candidates;
        if (res.witness && !verify_witness(dcs, *res.witness)) r.status = "invalid-witness";
        break;
      }
    }
    check_against_bound(r);
  } catch (const std::exception& e) {
    r.status = std::string("error: ") + e.what();
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<RunReport> run_benchmark(const std::vector<BenchInstance>& instances, BenchMode mode, int jobs) {
  std::vector<RunReport> out(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) out[i] = run_one(instances[i], mode);
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(instances.size())));
  if (threads == 1) {
    worker();
    return out;
  }
  std::vector<std::jthread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  pool.clear();
  return out;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> split_csv_row(std::string_view line, int line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quote");
  return fields;
}

template <class T>
T parse_number(const std::string& s, int line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(line_no, "bad number '" + s + "'");
  return value;
}

}  // namespace

std::string csv_header() { return "instance,n,m,terminals,mode,emitted,raw,bound_ln,wall_seconds,nodes,status"; }

std::string to_csv_row(const RunReport& r) {
  std::ostringstream os;
  os << quote(r.instance) << ',' << r.n << ',' << r.m << ',' << r.terminals << ',' << to_string(r.mode) << ','
     << r.emitted << ',' << r.raw << ',' << (r.bound_ln ? format_double(*r.bound_ln) : "") << ','
     << format_double(r.wall_seconds) << ',' << r.nodes << ',' << quote(r.status);
  return os.str();
}

std::vector<RunReport> parse_csv(std::string_view text) {
  std::vector<RunReport> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != csv_header()) throw ParseError(line_no, "unexpected CSV header");
      continue;
    }
    const auto f = split_csv_row(line, line_no);
    if (f.size() != 11) throw ParseError(line_no, "expected 11 fields, found " + std::to_string(f.size()));
    RunReport r;
    r.instance = f[0];
    r.n = parse_number<int>(f[1], line_no);
    r.m = parse_number<int>(f[2], line_no);
    r.terminals = parse_number<int>(f[3], line_no);
    try {
      r.mode = parse_bench_mode(f[4]);
    } catch (const InputError& e) {
      throw ParseError(line_no, e.what());
    }
    r.emitted = parse_number<std::uint64_t>(f[5], line_no);
    r.raw = parse_number<std::uint64_t>(f[6], line_no);
    if (!f[7].empty()) r.bound_ln = parse_number<double>(f[7], line_no);
    r.wall_seconds = parse_number<double>(f[8], line_no);
    r.nodes = parse_number<std::uint64_t>(f[9], line_no);
    r.status = f[10];
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tconn
