#include "selpred/stp.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "selpred/errors.hpp"

namespace selpred {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Line-oriented reader that tracks 1-based line numbers for error messages.
class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line, tokenized. Returns false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      tokens = tokenize(line);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int line_number() const { return line_number_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line_number_) + ": " + msg);
  }

private:
  std::istream& in_;
  int line_number_ = 0;
};

long long parse_int_token(const std::string& tok, const LineReader& reader) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    reader.fail("expected an integer, got '" + tok + "'");
  return value;
}

double parse_real_token(const std::string& tok, const LineReader& reader) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    reader.fail("expected a number, got '" + tok + "'");
  return value;
}

}  // namespace

SteinerInstance parse_stp(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;

  struct EdgeLine {
    VertexId u;
    VertexId v;
    double w;
    int line;
  };

  long long node_count = -1;
  std::vector<EdgeLine> edge_lines;
  std::vector<long long> terminal_lines;
  bool saw_graph = false;
  bool saw_terminals = false;

  while (reader.next(tok)) {
    std::string head = lower(tok[0]);
    if (head.rfind("33d32945", 0) == 0) continue;  // magic header
    if (head == "eof") break;
    if (head != "section") reader.fail("expected SECTION or EOF, got '" + tok[0] + "'");
    if (tok.size() < 2) reader.fail("SECTION without a name");

    std::string section = lower(tok[1]);
    if (section == "graph") {
      saw_graph = true;
      long long declared_edges = -1;
      while (true) {
        if (!reader.next(tok)) reader.fail("unterminated Graph section");
        std::string key = lower(tok[0]);
        if (key == "end") break;
        if (key == "nodes") {
          if (tok.size() != 2) reader.fail("Nodes expects one count");
          node_count = parse_int_token(tok[1], reader);
          if (node_count < 0) reader.fail("negative node count");
        } else if (key == "edges") {
          if (tok.size() != 2) reader.fail("Edges expects one count");
          declared_edges = parse_int_token(tok[1], reader);
        } else if (key == "e") {
          if (tok.size() != 4) reader.fail("E expects 'E u v w'");
          if (node_count < 0) reader.fail("E line before Nodes declaration");
          long long u = parse_int_token(tok[1], reader);
          long long v = parse_int_token(tok[2], reader);
          double w = parse_real_token(tok[3], reader);
          if (u < 1 || u > node_count || v < 1 || v > node_count)
            reader.fail("vertex id out of range in 'E " + tok[1] + " " + tok[2] + " " +
                        tok[3] + "' (Nodes " + std::to_string(node_count) + ")");
          edge_lines.push_back(EdgeLine{static_cast<VertexId>(u - 1),
                                        static_cast<VertexId>(v - 1), w,
                                        reader.line_number()});
        } else {
          reader.fail("unknown Graph entry '" + tok[0] + "'");
        }
      }
      if (node_count < 0) reader.fail("Graph section missing Nodes");
      if (declared_edges >= 0 &&
          declared_edges != static_cast<long long>(edge_lines.size()))
        reader.fail("Edges declares " + std::to_string(declared_edges) + " but " +
                    std::to_string(edge_lines.size()) + " E lines were given");
    } else if (section == "terminals") {
      saw_terminals = true;
      long long declared_terminals = -1;
      while (true) {
        if (!reader.next(tok)) reader.fail("unterminated Terminals section");
        std::string key = lower(tok[0]);
        if (key == "end") break;
        if (key == "terminals") {
          if (tok.size() != 2) reader.fail("Terminals expects one count");
          declared_terminals = parse_int_token(tok[1], reader);
        } else if (key == "t") {
          if (tok.size() != 2) reader.fail("T expects one vertex id");
          long long t = parse_int_token(tok[1], reader);
          if (node_count < 0) reader.fail("Terminals section before Graph section");
          if (t < 1 || t > node_count)
            reader.fail("terminal id " + tok[1] + " out of range (Nodes " +
                        std::to_string(node_count) + ")");
          terminal_lines.push_back(t - 1);
        } else {
          reader.fail("unknown Terminals entry '" + tok[0] + "'");
        }
      }
      if (declared_terminals >= 0 &&
          declared_terminals != static_cast<long long>(terminal_lines.size()))
        reader.fail("Terminals declares " + std::to_string(declared_terminals) +
                    " but " + std::to_string(terminal_lines.size()) +
                    " T lines were given");
    } else {
      // Unknown section (Comment, Coordinates, ...): skip to its END.
      while (true) {
        if (!reader.next(tok)) reader.fail("unterminated section '" + section + "'");
        if (lower(tok[0]) == "end") break;
      }
    }
  }

  if (!saw_graph) throw ParseError("missing SECTION Graph");
  if (!saw_terminals) throw ParseError("missing SECTION Terminals");
  if (terminal_lines.empty()) throw ParseError("instance has no terminals");

  SteinerInstance inst;
  inst.graph = Graph(static_cast<int>(node_count));
  for (const auto& e : edge_lines) {
    try {
      inst.graph.add_edge(e.u, e.v, e.w);
    } catch (const std::invalid_argument& ex) {
      throw ParseError("line " + std::to_string(e.line) + ": " + ex.what());
    }
  }
  for (long long t : terminal_lines) inst.terminals.push_back(static_cast<VertexId>(t));
  std::sort(inst.terminals.begin(), inst.terminals.end());
  inst.terminals.erase(std::unique(inst.terminals.begin(), inst.terminals.end()),
                       inst.terminals.end());
  return inst;
}

SteinerInstance parse_stp_text(const std::string& text) {
  std::istringstream in(text);
  return parse_stp(in);
}

SteinerInstance parse_stp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  SteinerInstance inst = parse_stp(in);
  if (inst.name.empty()) {
    // Name defaults to the file stem.
    std::string stem = path;
    if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
      stem = stem.substr(slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos)
      stem = stem.substr(0, dot);
    inst.name = stem;
  }
  return inst;
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  if (value == std::floor(value) && std::abs(value) < 9.007199254740992e15) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf),
                                   static_cast<long long>(value));
    return std::string(buf, ptr);
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string write_stp(const SteinerInstance& inst) {
  std::ostringstream out;
  out << "33D32945 STP File, STP Format Version 1.0\n\n";
  if (!inst.name.empty())
    out << "SECTION Comment\nName \"" << inst.name << "\"\nEND\n\n";
  out << "SECTION Graph\n";
  out << "Nodes " << inst.graph.vertex_count() << "\n";
  out << "Edges " << inst.graph.edge_count() << "\n";
  for (const Edge& e : inst.graph.edges())
    out << "E " << (e.u + 1) << ' ' << (e.v + 1) << ' ' << format_number(e.weight)
        << "\n";
  out << "END\n\nSECTION Terminals\n";
  out << "Terminals " << inst.terminals.size() << "\n";
  for (VertexId t : inst.terminals) out << "T " << (t + 1) << "\n";
  out << "END\n\nEOF\n";
  return out.str();
}

std::string write_edge_set(const Graph& g, std::span<const EdgeId> edges) {
  std::ostringstream out;
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  for (EdgeId e : sorted) {
    const Edge& ed = g.edge(e);
    out << (ed.u + 1) << ' ' << (ed.v + 1) << '\n';
  }
  return out.str();
}

std::vector<EdgeId> parse_edge_set(const Graph& g, std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  std::vector<EdgeId> out;
  while (reader.next(tok)) {
    if (tok.size() != 2) reader.fail("expected 'u v'");
    long long u = parse_int_token(tok[0], reader) - 1;
    long long v = parse_int_token(tok[1], reader) - 1;
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
      reader.fail("vertex id out of range in pair " + tok[0] + " " + tok[1]);

    // Minimum-weight edge between u and v, ties by edge id.
    EdgeId best = -1;
    for (EdgeId e : g.incident(static_cast<VertexId>(u))) {
      if (g.other_endpoint(e, static_cast<VertexId>(u)) != static_cast<VertexId>(v))
        continue;
      if (best == -1 || g.edge(e).weight < g.edge(best).weight ||
          (g.edge(e).weight == g.edge(best).weight && e < best))
        best = e;
    }
    if (best == -1)
      reader.fail("no edge matches pair " + tok[0] + " " + tok[1]);
    out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeId> parse_edge_set_text(const Graph& g, const std::string& text) {
  std::istringstream in(text);
  return parse_edge_set(g, in);
}

std::vector<EdgeId> parse_edge_set_file(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_edge_set(g, in);
}

std::string write_id_set(std::span<const int> ids) {
  std::vector<int> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream out;
  for (int id : sorted) out << (id + 1) << '\n';
  return out.str();
}

std::vector<int> parse_id_set(std::istream& in, int max_count) {
  LineReader reader(in);
  std::vector<std::string> tok;
  std::vector<int> out;
  while (reader.next(tok)) {
    if (tok.size() != 1) reader.fail("expected one id per line");
    long long id = parse_int_token(tok[0], reader);
    if (id < 1 || id > max_count)
      reader.fail("id " + tok[0] + " out of range [1, " + std::to_string(max_count) +
                  "]");
    out.push_back(static_cast<int>(id - 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> parse_id_set_text(const std::string& text, int max_count) {
  std::istringstream in(text);
  return parse_id_set(in, max_count);
}

std::vector<int> parse_id_set_file(const std::string& path, int max_count) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_id_set(in, max_count);
}

std::vector<double> parse_real_list(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  std::vector<double> out;
  while (reader.next(tok)) {
    for (const std::string& t : tok) out.push_back(parse_real_token(t, reader));
  }
  return out;
}

std::vector<double> parse_real_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_real_list(in);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << content;
}

}  // namespace selpred
