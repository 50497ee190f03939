#include "brooks/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace brooks {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

// Strict integer token; rejects trailing garbage such as "12x".
template <class Int>
bool read_int(std::istringstream& in, Int& out) {
  std::string token;
  if (!(in >> token)) return false;
  std::size_t used = 0;
  try {
    const long long value = std::stoll(token, &used);
    out = static_cast<Int>(value);
    return used == token.size() && static_cast<long long>(out) == value;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

DimacsGraph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Vertex n = 0;
  EdgeId declared = 0;
  std::vector<Edge> edges;
  std::vector<Sign> signs;
  std::size_t signed_lines = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (have_header) fail(line_no, "second problem line");
      std::string format;
      ls >> format;
      if (format != "edge" && format != "col") fail(line_no, "expected 'p edge n m'");
      if (!read_int(ls, n) || !read_int(ls, declared) || n < 0 || declared < 0) {
        fail(line_no, "bad vertex or edge count");
      }
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail(line_no, "edge before problem line");
      Vertex u = 0, v = 0;
      if (!read_int(ls, u) || !read_int(ls, v)) fail(line_no, "expected 'e u v'");
      if (u < 1 || u > n || v < 1 || v > n) fail(line_no, "vertex id outside [1, " + std::to_string(n) + "]");
      if (u == v) fail(line_no, "self-loop at vertex " + std::to_string(u));
      edges.push_back({u - 1, v - 1});
      std::string sign;
      if (ls >> sign) {
        if (sign != "+" && sign != "-") fail(line_no, "edge sign must be '+' or '-'");
        signs.push_back(sign == "+" ? Sign::Plus : Sign::Minus);
        ++signed_lines;
      } else {
        signs.push_back(Sign::Plus);
      }
      std::string extra;
      if (ls >> extra) fail(line_no, "unexpected token '" + extra + "'");
    } else {
      fail(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!have_header) fail(line_no, "missing problem line");
  if (static_cast<EdgeId>(edges.size()) != declared) {
    fail(line_no, "header declares " + std::to_string(declared) + " edges, found " +
                      std::to_string(edges.size()));
  }
  if (signed_lines != 0 && signed_lines != edges.size()) fail(line_no, "only some edges carry a sign");

  DimacsGraph out;
  try {
    out.graph = Graph::from_edges(n, edges);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (signed_lines != 0) {
    // Re-key signs by canonical edge id.
    std::vector<Sign> by_id(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      by_id[*out.graph.edge_between(edges[i].u, edges[i].v)] = signs[i];
    }
    out.signs = std::move(by_id);
  }
  return out;
}

void write_dimacs(std::ostream& out, const Graph& g, const std::vector<Sign>* signs) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "e " << g.edge(e).u + 1 << ' ' << g.edge(e).v + 1;
    if (signs) out << ' ' << static_cast<char>((*signs)[e]);
    out << '\n';
  }
}

JsonInstance parse_instance_json(std::istream& in) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  try {
    JsonInstance inst;
    const auto n = doc.at("n").get<Vertex>();
    inst.k = doc.at("k").get<ColorIndex>();
    inst.lists = doc.at("lists").get<std::vector<std::vector<Label>>>();
    if (n < 0 || inst.k < 0) throw Error(ErrorCode::ParseError, "negative n or k");
    if (inst.lists.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) + " lists");
    }
    for (std::size_t v = 0; v < inst.lists.size(); ++v) {
      if (inst.lists[v].size() != static_cast<std::size_t>(inst.k)) {
        throw Error(ErrorCode::RaggedLists, "list " + std::to_string(v) + " does not have k labels");
      }
    }

    std::vector<Edge> edges;
    std::vector<std::vector<IndexPair>> raw;
    inst.has_matchings = true;
    for (const auto& rec : doc.at("edges")) {
      edges.push_back({rec.at("u").get<Vertex>(), rec.at("v").get<Vertex>()});
      auto& pairs = raw.emplace_back();
      if (rec.contains("matching")) {
        for (const auto& p : rec.at("matching")) {
          if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::ParseError, "matching entries are [i, j]");
          pairs.emplace_back(p[0].get<ColorIndex>(), p[1].get<ColorIndex>());
        }
      } else {
        inst.has_matchings = false;
      }
    }
    inst.graph = Graph::from_edges(n, edges);
    inst.matchings.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const EdgeId id = *inst.graph.edge_between(edges[i].u, edges[i].v);
      const bool flip = edges[i].u > edges[i].v;
      for (auto [a, b] : raw[i]) inst.matchings[id].emplace_back(flip ? b : a, flip ? a : b);
    }
    return inst;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed instance: ") + e.what());
  }
}

void write_instance_json(std::ostream& out, const ColorSystem& sys) {
  using nlohmann::json;
  const Graph& g = sys.graph();
  json doc;
  doc["n"] = g.vertex_count();
  doc["k"] = sys.k();
  json lists = json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto l = sys.list(v);
    lists.push_back(std::vector<Label>(l.begin(), l.end()));
  }
  doc["lists"] = std::move(lists);
  json edges = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    json pairs = json::array();
    for (auto [a, b] : sys.matching(e)) pairs.push_back({a, b});
    edges.push_back({{"u", g.edge(e).u}, {"v", g.edge(e).v}, {"matching", std::move(pairs)}});
  }
  doc["edges"] = std::move(edges);
  out << doc.dump() << '\n';
}

void write_coloring(std::ostream& out, const ColorSystem& sys, const Coloring& c) {
  for (Vertex v = 0; v < c.size(); ++v) {
    if (c.is_colored(v)) out << v + 1 << ' ' << sys.label(v, c[v]) << '\n';
  }
}

void write_coloring_json(std::ostream& out, const ColorSystem& sys, const Coloring& c) {
  nlohmann::json labels = nlohmann::json::array();
  for (Vertex v = 0; v < c.size(); ++v) {
    labels.push_back(c.is_colored(v) ? nlohmann::json(sys.label(v, c[v])) : nlohmann::json(nullptr));
  }
  out << nlohmann::json{{"coloring", std::move(labels)}}.dump() << '\n';
}

Coloring parse_coloring(std::istream& in, const ColorSystem& sys) {
  const Vertex n = sys.graph().vertex_count();
  Coloring c(n);
  auto set = [&](std::size_t line, Vertex v, Label label) {
    if (v < 0 || v >= n) fail(line, "vertex out of range");
    if (c.is_colored(v)) fail(line, "vertex " + std::to_string(v + 1) + " colored twice");
    auto idx = sys.index_of(v, label);
    if (!idx) fail(line, "label " + std::to_string(label) + " is not in the list of vertex " + std::to_string(v + 1));
    c.assign(v, *idx);
  };

  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      const auto doc = nlohmann::json::parse(text);
      const auto& labels = doc.at("coloring");
      if (labels.size() != static_cast<std::size_t>(n)) fail(1, "coloring array must have one entry per vertex");
      for (std::size_t v = 0; v < labels.size(); ++v) {
        if (!labels[v].is_null()) set(1, static_cast<Vertex>(v), labels[v].get<Label>());
      }
    } catch (const nlohmann::json::exception& e) {
      fail(1, std::string("malformed coloring JSON: ") + e.what());
    }
    return c;
  }

  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string peek;
    if (!(ls >> peek) || peek == "c" || peek[0] == '#') continue;
    ls = std::istringstream(line);
    Vertex v = 0;
    Label label = 0;
    if (!read_int(ls, v) || !read_int(ls, label)) fail(line_no, "expected 'vertex label'");
    std::string extra;
    if (ls >> extra) fail(line_no, "unexpected token '" + extra + "'");
    set(line_no, v - 1, label);
  }
  return c;
}

}  // namespace brooks
