#include "shellkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace shellkit {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view s, int& out) {
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

template <class F>
std::string write(std::span<const F> seq, int n, Mode mode) {
  std::string out = "n=" + std::to_string(n) + (mode == Mode::Sorted ? " mode=sorted\n" : " mode=tuple\n");
  for (const F& f : seq) {
    std::vector<int> v;
    if constexpr (std::is_same_v<F, KSubset>) {
      v = f.members();
    } else {
      v = f.entries();
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(v[i]);
    }
    out += '\n';
  }
  return out;
}

template <class F>
std::string dot(std::span<const F> seq, GraphKind kind) {
  const LabeledGraph g = graph_of(seq, kind);
  const Track t = track(g);
  std::string out = kind == GraphKind::Dual ? "graph dual {\n" : "graph hasse {\n";
  for (int i = 1; i <= g.order(); ++i) {
    out += "  " + std::to_string(i) + " [facet=\"" + seq[static_cast<std::size_t>(i - 1)].to_string() + "\"";
    if (t.contains(i)) out += ", track=true, peripheries=2";
    out += "];\n";
  }
  for (auto [i, j] : g.edges()) out += "  " + std::to_string(i) + " -- " + std::to_string(j) + ";\n";
  return out + "}\n";
}

}  // namespace

ParseError::ParseError(std::string_view source, int line_no, const std::string& what)
    : std::runtime_error(std::string(source) + (line_no > 0 ? ":" + std::to_string(line_no) : "") + ": " + what),
      line(line_no) {}

FacetFile parse_input(std::istream& in, std::string_view source) {
  FacetFile file;
  bool have_header = false;
  bool have_n = false;
  bool have_mode = false;
  int first_size = -1;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;

    if (!have_header) {
      for (std::string_view t : tok) {
        if (t.starts_with("n=")) {
          if (!to_int(t.substr(2), file.n) || file.n < 1 || file.n > kMaxUniverse) {
            throw ParseError(source, line_no, "n must be an integer in [1, 64]");
          }
          have_n = true;
        } else if (t == "mode=sorted") {
          file.mode = Mode::Sorted;
          have_mode = true;
        } else if (t == "mode=tuple") {
          file.mode = Mode::Tuple;
          have_mode = true;
        } else {
          throw ParseError(source, line_no, "expected header `n=<int> mode=<sorted|tuple>`");
        }
      }
      if (!have_n || !have_mode) {
        throw ParseError(source, line_no, "expected header `n=<int> mode=<sorted|tuple>`");
      }
      have_header = true;
      continue;
    }

    std::vector<int> v;
    for (std::string_view t : tok) {
      int x = 0;
      if (!to_int(t, x)) throw ParseError(source, line_no, "not an integer: " + std::string(t));
      if (x < 1 || x > file.n) {
        throw ParseError(source, line_no, "vertex " + std::to_string(x) + " outside [1, " + std::to_string(file.n) + "]");
      }
      v.push_back(x);
    }
    if (first_size < 0) first_size = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != first_size) {
      throw ParseError(source, line_no, "facet has " + std::to_string(v.size()) + " vertices, expected " +
                                            std::to_string(first_size));
    }
    try {
      if (file.mode == Mode::Sorted) {
        KSubset s(file.n, v);
        if (std::find(file.subsets.begin(), file.subsets.end(), s) != file.subsets.end()) {
          throw ParseError(source, line_no, "duplicate facet " + s.to_string());
        }
        file.subsets.push_back(s);
      } else {
        FlagTuple t(file.n, v);
        if (std::find(file.tuples.begin(), file.tuples.end(), t) != file.tuples.end()) {
          throw ParseError(source, line_no, "duplicate facet " + t.to_string());
        }
        file.tuples.push_back(std::move(t));
      }
    } catch (const Error& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  if (file.size() == 0) throw ParseError(source, have_header ? line_no : 0, "empty complex");
  return file;
}

FacetFile parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_input(in, path);
}

FacetFile parse_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_input(in);
}

std::string serialize_sequence(std::span<const KSubset> seq, int n) { return write(seq, n, Mode::Sorted); }
std::string serialize_sequence(std::span<const FlagTuple> seq, int n) { return write(seq, n, Mode::Tuple); }

std::string serialize_complex(std::span<const KSubset> facets, int n) {
  std::vector<KSubset> v(facets.begin(), facets.end());
  std::sort(v.begin(), v.end());
  return write(std::span<const KSubset>(v), n, Mode::Sorted);
}

std::string serialize_complex(std::span<const FlagTuple> facets, int n) {
  std::vector<FlagTuple> v(facets.begin(), facets.end());
  std::sort(v.begin(), v.end());
  return write(std::span<const FlagTuple>(v), n, Mode::Tuple);
}

std::string export_dot(std::span<const KSubset> seq, GraphKind kind) { return dot(seq, kind); }
std::string export_dot(std::span<const FlagTuple> seq, GraphKind kind) { return dot(seq, kind); }

}  // namespace shellkit
