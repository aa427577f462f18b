#include "swnet/network_io.hpp"

#include <fstream>
#include <sstream>

#include "swnet/errors.hpp"

namespace swnet {

std::string serialize(const SwitchingNetwork& net) {
  std::ostringstream out;
  out << "SWNET v1\n";
  out << "N " << net.space.n << "\n";
  out << "SPRIME " << net.s_prime << "\n";
  out << "TPRIME " << net.t_prime << "\n";
  for (int v = 0; v < net.vertex_count(); ++v) {
    out << "VERT " << v;
    const Annotation& a = net.annotations[v];
    if (const auto* ks = std::get_if<KnowledgeSet>(&a))
      out << " KSET " << ks->to_string(net.space);
    else if (const auto* cf = std::get_if<CutFunction>(&a))
      out << " FOUR " << cf->to_string();
    out << "\n";
  }
  for (const NetEdge& e : net.edges)
    out << "EDGE " << e.u << " " << e.v << " " << e.label.to_string(net.space) << "\n";
  return out.str();
}

namespace {

struct LineReader {
  std::istringstream in;
  int number = 0;
  std::string current;

  explicit LineReader(const std::string& text) : in(text) {}

  bool next() {
    if (!std::getline(in, current)) return false;
    ++number;
    return true;
  }
};

// Splits on single spaces; the annotation payload is always one token.
std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, const LineReader& r, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw parse_error(std::string("bad ") + what + " '" + tok + "'", r.number);
  }
}

}  // namespace

SwitchingNetwork deserialize(const std::string& text) {
  LineReader r(text);
  auto expect = [&](const char* what) {
    if (!r.next()) throw parse_error(std::string("missing ") + what + " line", r.number + 1);
  };

  expect("SWNET v1");
  if (r.current != "SWNET v1") throw parse_error("expected 'SWNET v1'", r.number);

  expect("N");
  auto toks = tokens_of(r.current);
  if (toks.size() != 2 || toks[0] != "N") throw parse_error("expected 'N <n>'", r.number);
  VertexSpace space = VertexSpace::make(parse_int(toks[1], r, "vertex count"));

  expect("SPRIME");
  toks = tokens_of(r.current);
  if (toks.size() != 2 || toks[0] != "SPRIME") throw parse_error("expected 'SPRIME <id>'", r.number);
  const int s_prime = parse_int(toks[1], r, "vertex id");

  expect("TPRIME");
  toks = tokens_of(r.current);
  if (toks.size() != 2 || toks[0] != "TPRIME") throw parse_error("expected 'TPRIME <id>'", r.number);
  const int t_prime = parse_int(toks[1], r, "vertex id");

  std::vector<Annotation> annotations;
  std::vector<NetEdge> edges;
  bool seen_edge = false;
  while (r.next()) {
    toks = tokens_of(r.current);
    if (toks.empty()) throw parse_error("blank line", r.number);
    if (toks[0] == "VERT") {
      if (seen_edge) throw parse_error("VERT after EDGE", r.number);
      if (toks.size() != 2 && toks.size() != 4)
        throw parse_error("expected 'VERT <id> [KSET <k> | FOUR <f>]'", r.number);
      const int id = parse_int(toks[1], r, "vertex id");
      if (id != static_cast<int>(annotations.size()))
        throw parse_error("vertex ids must be consecutive from 0, got " + toks[1], r.number);
      Annotation a;
      if (toks.size() == 4) {
        try {
          if (toks[2] == "KSET")
            a = KnowledgeSet::parse(space, toks[3]);
          else if (toks[2] == "FOUR")
            a = CutFunction::parse(space.interior(), toks[3]);
          else
            throw std::invalid_argument("unknown annotation tag '" + toks[2] + "'");
        } catch (const std::exception& e) {
          throw parse_error(e.what(), r.number);
        }
      }
      annotations.push_back(std::move(a));
    } else if (toks[0] == "EDGE") {
      seen_edge = true;
      if (toks.size() != 4) throw parse_error("expected 'EDGE <u> <v> <label>'", r.number);
      const int u = parse_int(toks[1], r, "vertex id");
      const int v = parse_int(toks[2], r, "vertex id");
      Label label;
      try {
        label = Label::parse(space, toks[3]);
      } catch (const std::exception& e) {
        throw parse_error(e.what(), r.number);
      }
      if (u < 0 || v < 0 || u >= static_cast<int>(annotations.size()) ||
          v >= static_cast<int>(annotations.size()))
        throw parse_error("edge endpoint out of range", r.number);
      edges.push_back(NetEdge{u, v, label});
    } else {
      throw parse_error("unknown directive '" + toks[0] + "'", r.number);
    }
  }
  if (annotations.empty()) throw parse_error("no vertices", r.number + 1);

  try {
    const int vertex_count = static_cast<int>(annotations.size());
    return SwitchingNetwork::make(space, vertex_count, s_prime, t_prime, std::move(edges),
                                  std::move(annotations));
  } catch (const std::exception& e) {
    throw parse_error(e.what(), r.number);
  }
}

void write_network(const std::string& path, const SwitchingNetwork& net) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << serialize(net);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

SwitchingNetwork read_network(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str());
}

}  // namespace swnet
