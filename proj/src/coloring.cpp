#include "critgen/coloring.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>

#include "critgen/error.hpp"

namespace critgen {

namespace {

void mix(SearchTranscript* t, int v, int c) {
  if (t == nullptr) return;
  ++t->nodes;
  constexpr std::uint64_t kPrime = 0x100000001b3ULL;
  t->digest = (t->digest ^ static_cast<std::uint64_t>(v + 1)) * kPrime;
  t->digest = (t->digest ^ static_cast<std::uint64_t>(c + 0x40)) * kPrime;
}

// DSATUR-ordered backtracking over list assignments. With `symmetric` set
// all lists are the full palette and a new color is opened only as the
// smallest unused one.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k, std::vector<ColorSet> lists, bool symmetric,
                 SearchTranscript* transcript, VertexSet rainbow = 0, bool rainbow_mode = false)
      : g_(g),
        k_(k),
        lists_(std::move(lists)),
        symmetric_(symmetric),
        transcript_(transcript),
        rainbow_(rainbow),
        rainbow_mode_(rainbow_mode),
        color_(static_cast<std::size_t>(g.order()), 0),
        classes_(static_cast<std::size_t>(k), 0) {}

  std::optional<Coloring> solve(VertexSet skip = 0) {
    if (search(g_.vertices() & ~skip, 0)) return color_;
    return std::nullopt;
  }

 private:
  ColorSet blocked(int v) const {
    ColorSet out = 0;
    const VertexSet nv = g_.neighbors(v);
    for (int c = 1; c <= k_; ++c) {
      if (classes_[static_cast<std::size_t>(c - 1)] & nv) out |= color_bit(c);
    }
    return out;
  }

  bool search(VertexSet uncolored, int max_used) {
    // rainbow vertices go first; bail out once the missing colors outnumber them
    VertexSet pool = uncolored;
    if (rainbow_mode_) {
      int present = 0;
      for (VertexSet cls : classes_) present += (cls & rainbow_) != 0 ? 1 : 0;
      const VertexSet open = rainbow_ & uncolored;
      if (k_ - present > popcount(open)) return false;
      if (open != 0) pool = open;
    }
    if (uncolored == 0) return true;
    int best = -1;
    ColorSet best_avail = 0;
    int best_count = k_ + 1;
    int best_deg = -1;
    bool dead = false;
    for_each_vertex(pool, [&](int v) {
      if (dead) return;
      ColorSet avail = lists_[static_cast<std::size_t>(v)] & ~blocked(v);
      if (symmetric_) avail &= palette(std::min(k_, max_used + 1));
      const int count = popcount(avail);
      if (count == 0) {
        dead = true;
        return;
      }
      const int deg = popcount(g_.neighbors(v) & uncolored);
      if (count < best_count || (count == best_count && deg > best_deg)) {
        best = v;
        best_avail = avail;
        best_count = count;
        best_deg = deg;
      }
    });
    if (dead) return false;

    const VertexSet rest = uncolored & ~bit(best);
    while (best_avail != 0) {
      const int c = lowest(best_avail) + 1;
      best_avail &= best_avail - 1;
      mix(transcript_, best, c);
      color_[static_cast<std::size_t>(best)] = c;
      classes_[static_cast<std::size_t>(c - 1)] |= bit(best);
      if (search(rest, std::max(max_used, c))) return true;
      classes_[static_cast<std::size_t>(c - 1)] &= ~bit(best);
      color_[static_cast<std::size_t>(best)] = 0;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<ColorSet> lists_;
  bool symmetric_;
  SearchTranscript* transcript_;
  VertexSet rainbow_;
  bool rainbow_mode_;
  Coloring color_;
  std::vector<VertexSet> classes_;
};

void check_palette(int k) {
  if (k < 0 || k > kMaxColors) {
    throw Error(ErrorCode::kInvalidArgument, "palette size " + std::to_string(k) + " out of range");
  }
}

}  // namespace

bool is_proper_coloring(const Graph& g, std::span<const int> coloring, int k) {
  if (static_cast<int>(coloring.size()) != g.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    const int c = coloring[static_cast<std::size_t>(v)];
    if (c < 1 || c > k) return false;
    bool clash = false;
    for_each_vertex(g.neighbors(v), [&](int u) {
      if (coloring[static_cast<std::size_t>(u)] == c) clash = true;
    });
    if (clash) return false;
  }
  return true;
}

int greedy_clique_bound(const Graph& g) {
  int best = 0;
  for (int start = 0; start < g.order(); ++start) {
    VertexSet clique = bit(start);
    VertexSet cand = g.neighbors(start);
    while (cand != 0) {
      int pick = -1;
      int pick_deg = -1;
      for_each_vertex(cand, [&](int v) {
        const int d = popcount(g.neighbors(v) & cand);
        if (d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      });
      clique |= bit(pick);
      cand &= g.neighbors(pick);
    }
    best = std::max(best, popcount(clique));
  }
  return best;
}

std::optional<Coloring> is_k_colorable(const Graph& g, int k, SearchTranscript* transcript) {
  check_palette(k);
  if (g.order() == 0) return Coloring{};
  if (k == 0) return std::nullopt;
  std::vector<ColorSet> lists(static_cast<std::size_t>(g.order()), palette(k));
  return ColoringSearch(g, k, std::move(lists), true, transcript).solve();
}

std::optional<Coloring> find_rainbow_coloring(const Graph& g, int k, VertexSet rainbow, VertexSet skip) {
  check_palette(k);
  if (k == 0) return std::nullopt;
  std::vector<ColorSet> lists(static_cast<std::size_t>(g.order()), palette(k));
  return ColoringSearch(g, k, std::move(lists), true, nullptr, rainbow & ~skip, true).solve(skip);
}

ChromaticResult chromatic_number(const Graph& g) {
  if (g.order() == 0) return {};
  for (int k = std::max(1, greedy_clique_bound(g)); k <= g.order(); ++k) {
    if (auto c = is_k_colorable(g, k)) return {k, *std::move(c)};
  }
  // unreachable: n colors always suffice
  throw Error(ErrorCode::kInternalContradiction, "no coloring with n colors");
}

ColorSet make_color_set(std::initializer_list<int> colors) {
  ColorSet s = 0;
  for (int c : colors) s |= color_bit(c);
  return s;
}

ListAssignment::ListAssignment(int n, int k)
    : k_(k), lists_(static_cast<std::size_t>(n), palette(k)) {
  check_palette(k);
}

ListAssignment::ListAssignment(int k, std::vector<ColorSet> lists) : k_(k), lists_(std::move(lists)) {
  check_palette(k);
  for (ColorSet s : lists_) {
    if ((s & ~palette(k)) != 0) throw Error(ErrorCode::kInvalidArgument, "list color outside palette");
  }
}

void ListAssignment::set_list(int v, ColorSet colors) {
  if (v < 0 || v >= order()) throw Error(ErrorCode::kBadVertex, "vertex out of range");
  if ((colors & ~palette(k_)) != 0) throw Error(ErrorCode::kInvalidArgument, "list color outside palette");
  lists_[static_cast<std::size_t>(v)] = colors;
}

void ListAssignment::set_list(int v, std::initializer_list<int> colors) {
  set_list(v, make_color_set(colors));
}

bool ListAssignment::has_empty_list() const {
  return std::any_of(lists_.begin(), lists_.end(), [](ColorSet s) { return s == 0; });
}

int ListAssignment::forced_color(int v) const {
  if (!forced(v)) throw Error(ErrorCode::kNotForced, "vertex " + std::to_string(v) + " is not forced");
  return lowest(list(v)) + 1;
}

std::string ListAssignment::to_string() const {
  std::ostringstream os;
  for (int v = 0; v < order(); ++v) {
    os << v << ": {";
    bool first = true;
    for_each_vertex(list(v), [&](int bit_index) {
      os << (first ? "" : ",") << bit_index + 1;
      first = false;
    });
    os << "}\n";
  }
  return os.str();
}

ListAssignment propagate_once(const Graph& g, const ListAssignment& lists, int v) {
  const int c = lists.forced_color(v);
  ListAssignment out = lists;
  for_each_vertex(g.neighbors(v), [&](int u) { out.set_list(u, out.list(u) & ~color_bit(c)); });
  return out;
}

ListAssignment propagate_exhaustive(const Graph& g, const ListAssignment& lists, int v) {
  lists.forced_color(v);
  ListAssignment out = lists;
  std::vector<char> queued(static_cast<std::size_t>(g.order()), 0);
  std::deque<int> work{v};
  queued[static_cast<std::size_t>(v)] = 1;
  while (!work.empty()) {
    const int u = work.front();
    work.pop_front();
    if (!out.forced(u)) continue;  // emptied while waiting
    const ColorSet c = out.list(u);
    for_each_vertex(g.neighbors(u), [&](int w) {
      const ColorSet before = out.list(w);
      out.set_list(w, before & ~c);
      if (popcount(before) > 1 && out.forced(w) && !queued[static_cast<std::size_t>(w)]) {
        queued[static_cast<std::size_t>(w)] = 1;
        work.push_back(w);
      }
    });
  }
  return out;
}

ListAssignment propagate_exhaustive_ordered(const Graph& g, const ListAssignment& lists, int v,
                                            std::span<const int> rank) {
  lists.forced_color(v);
  ListAssignment out = lists;
  std::vector<char> queued(static_cast<std::size_t>(g.order()), 0);
  auto later = [&](int a, int b) { return rank[static_cast<std::size_t>(a)] > rank[static_cast<std::size_t>(b)]; };
  std::priority_queue<int, std::vector<int>, decltype(later)> work(later);
  work.push(v);
  queued[static_cast<std::size_t>(v)] = 1;
  while (!work.empty()) {
    const int u = work.top();
    work.pop();
    if (!out.forced(u)) continue;
    const ColorSet c = out.list(u);
    for_each_vertex(g.neighbors(u), [&](int w) {
      const ColorSet before = out.list(w);
      out.set_list(w, before & ~c);
      if (popcount(before) > 1 && out.forced(w) && !queued[static_cast<std::size_t>(w)]) {
        queued[static_cast<std::size_t>(w)] = 1;
        work.push(w);
      }
    });
  }
  return out;
}

std::optional<Coloring> solve_list_coloring(const Graph& g, const ListAssignment& lists) {
  if (lists.order() != g.order()) throw Error(ErrorCode::kInvalidArgument, "list assignment size mismatch");
  if (lists.has_empty_list()) return std::nullopt;
  std::vector<ColorSet> raw(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) raw[static_cast<std::size_t>(v)] = lists.list(v);
  return ColoringSearch(g, lists.palette_size(), std::move(raw), false, nullptr).solve();
}

bool is_list_coloring(const Graph& g, const ListAssignment& lists, std::span<const int> coloring) {
  if (!is_proper_coloring(g, coloring, lists.palette_size())) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!(lists.list(v) & color_bit(coloring[static_cast<std::size_t>(v)]))) return false;
  }
  return true;
}

}  // namespace critgen
