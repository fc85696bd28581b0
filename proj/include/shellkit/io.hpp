#pragma once

#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shellkit/core.hpp"
#include "shellkit/promotion.hpp"

namespace shellkit {

/// Facet files: a header `n=<int> mode=<sorted|tuple>`, then one facet per line as
/// whitespace-separated vertices. `#` starts a comment; blank lines are ignored.
enum class Mode { Sorted, Tuple };

struct ParseError : std::runtime_error {
  ParseError(std::string_view source, int line, const std::string& what);
  int line;
};

struct FacetFile {
  int n = 0;
  Mode mode = Mode::Sorted;
  /// Filled in Sorted mode, in file order.
  std::vector<KSubset> subsets;
  /// Filled in Tuple mode, in file order.
  std::vector<FlagTuple> tuples;

  std::size_t size() const { return mode == Mode::Sorted ? subsets.size() : tuples.size(); }
};

FacetFile parse_input(std::istream& in, std::string_view source = "<input>");
FacetFile parse_file(const std::string& path);
FacetFile parse_string(std::string_view text);

/// Sequences keep their order; complexes are written in canonical ascending order.
std::string serialize_sequence(std::span<const KSubset> seq, int n);
std::string serialize_sequence(std::span<const FlagTuple> seq, int n);
std::string serialize_complex(std::span<const KSubset> facets, int n);
std::string serialize_complex(std::span<const FlagTuple> facets, int n);

/// Undirected DOT graph on positions 1..h; track vertices carry `track=true`.
std::string export_dot(std::span<const KSubset> seq, GraphKind kind);
std::string export_dot(std::span<const FlagTuple> seq, GraphKind kind);

}  // namespace shellkit
