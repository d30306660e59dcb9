#pragma once

#include <string>
#include <string_view>

#include "critgen/graph.hpp"

namespace critgen {

/// Decodes one graph6 line (short form only, n <= 62). A leading
/// ">>graph6<<" header and trailing whitespace are ignored.
Graph parse_graph6(std::string_view line);

/// Encodes g as graph6 with the labeling as given.
std::string emit_graph6(const Graph& g);

}  // namespace critgen
