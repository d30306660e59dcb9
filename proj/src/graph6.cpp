#include "critgen/graph6.hpp"

#include "critgen/error.hpp"

namespace critgen {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw Error(ErrorCode::kTruncatedPayload, "empty graph6 line");

  for (char c : line) {
    const int b = static_cast<unsigned char>(c);
    if (b < kBias || b > 126) {
      throw Error(ErrorCode::kByteOutOfRange, "graph6 byte " + std::to_string(b) + " out of range");
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - kBias;
  if (n > kMaxVertices) {
    throw Error(ErrorCode::kOversize, "graph6 order " + std::to_string(n) + " not supported");
  }

  const std::size_t nbits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  const std::string_view payload = line.substr(1);
  if (payload.size() < nbytes) throw Error(ErrorCode::kTruncatedPayload, "graph6 payload too short");
  if (payload.size() > nbytes) throw Error(ErrorCode::kTrailingBits, "graph6 payload too long");

  auto get_bit = [&](std::size_t k) {
    const int byte = static_cast<unsigned char>(payload[k / 6]) - kBias;
    return (byte >> (5 - k % 6)) & 1;
  };

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (get_bit(k)) g.add_edge(i, j);
    }
  }
  for (; k < nbytes * 6; ++k) {
    if (get_bit(k)) throw Error(ErrorCode::kTrailingBits, "graph6 padding bit set");
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxVertices) throw Error(ErrorCode::kOversize, "graph too large for graph6 short form");
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace critgen
