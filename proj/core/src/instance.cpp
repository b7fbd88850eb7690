#include "tconn/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "tconn/errors.hpp"

namespace tconn {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_integer(std::string_view word) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) return std::nullopt;
  return value;
}

}  // namespace

VertexSet Instance::set(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) throw InputError("instance has no vertex set named '" + name + "'");
  return from_external(graph, it->second);
}

Vertex Instance::vertex(const std::string& name) const {
  const VertexSet s = set(name);
  if (s.size() != 1) throw InputError("vertex set '" + name + "' must hold exactly one vertex");
  return s.first();
}

std::vector<int> parse_id_list(std::string_view text) {
  std::string buf(text);
  for (char& c : buf)
    if (c == ',') c = ' ';
  std::vector<int> out;
  for (auto word : split_words(buf)) {
    auto value = to_integer(word);
    if (!value || *value < 1 || *value > 1'000'000'000) throw InputError("bad vertex id '" + std::string(word) + "'");
    out.push_back(static_cast<int>(*value));
  }
  return out;
}

Instance parse_instance(std::string_view text) {
  Instance inst;
  std::optional<int> n;
  long long declared_edges = 0;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, std::string>> set_lines;  // line number, name

  int line_no = 0;
  int p_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (words[0] == "c") {
      if (words.size() >= 3 && words[1] == "set") {
        std::vector<int> ids;
        for (std::size_t i = 3; i < words.size(); ++i) {
          auto id = to_integer(words[i]);
          if (!id || *id < 1) throw ParseError(line_no, "bad vertex id '" + std::string(words[i]) + "'");
          ids.push_back(static_cast<int>(*id));
        }
        const std::string name(words[2]);
        if (inst.sets.contains(name)) throw ParseError(line_no, "vertex set '" + name + "' defined twice");
        inst.sets.emplace(name, std::move(ids));
        set_lines.emplace_back(line_no, name);
      } else if (words.size() >= 2 && words[1] == "meta") {
        const auto at = line.find("meta") + 4;
        std::string_view rest = line.substr(at);
        while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
        inst.meta.emplace_back(rest);
      }
      continue;
    }

    if (words[0] == "p") {
      if (n) throw ParseError(line_no, "second problem line");
      if (words.size() != 4 || words[1] != "edge") throw ParseError(line_no, "expected 'p edge <n> <m>'");
      auto nv = to_integer(words[2]);
      auto mv = to_integer(words[3]);
      if (!nv || !mv || *nv < 0 || *mv < 0 || *nv > 1'000'000) throw ParseError(line_no, "bad vertex or edge count");
      n = static_cast<int>(*nv);
      declared_edges = *mv;
      p_line = line_no;
      continue;
    }

    if (words[0] == "e") {
      if (!n) throw ParseError(line_no, "edge before problem line");
      if (words.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      auto u = to_integer(words[1]);
      auto v = to_integer(words[2]);
      if (!u || !v) throw ParseError(line_no, "bad edge endpoint");
      if (*u < 1 || *u > *n || *v < 1 || *v > *n) throw ParseError(line_no, "vertex id out of range");
      if (*u == *v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(*u));
      const int a = static_cast<int>(std::min(*u, *v));
      const int b = static_cast<int>(std::max(*u, *v));
      if (!seen.emplace(a, b).second)
        throw ParseError(line_no, "duplicate edge " + std::to_string(*u) + " " + std::to_string(*v));
      edges.emplace_back(static_cast<int>(*u) - 1, static_cast<int>(*v) - 1);
      continue;
    }

    throw ParseError(line_no, "unrecognised line '" + std::string(line) + "'");
  }

  if (!n) throw ParseError(line_no, "missing problem line");
  if (static_cast<long long>(edges.size()) != declared_edges)
    throw ParseError(p_line, "problem line declares " + std::to_string(declared_edges) + " edges, found " +
                                  std::to_string(edges.size()));
  for (const auto& [at, name] : set_lines)
    for (int id : inst.sets[name])
      if (id > *n) throw ParseError(at, "vertex id " + std::to_string(id) + " out of range in set '" + name + "'");

  inst.graph = Graph(*n, edges);
  return inst;
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream os;
  for (const auto& m : inst.meta) os << "c meta " << m << '\n';
  for (const auto& [name, ids] : inst.sets) {
    os << "c set " << name;
    for (int id : ids) os << ' ' << id;
    os << '\n';
  }
  const Graph& g = inst.graph;
  os << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << g.external_id(u) << ' ' << g.external_id(v) << '\n';
  return os.str();
}

}  // namespace tconn
