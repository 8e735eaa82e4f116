#include "zdg/search.hpp"

#include <algorithm>
#include <numeric>

namespace zdg {

namespace {

using Word = Graph::Word;

/// Adjacency rows relabelled so that index order is non-increasing degree.
struct OrderedBits {
  std::size_t words = 0;
  std::vector<Vertex> original; // new index -> original vertex
  std::vector<Word> rows;

  explicit OrderedBits(const Graph &g) {
    const Vertex n = g.order();
    words = (static_cast<std::size_t>(n) + 63) / 64;
    original.resize(n);
    std::iota(original.begin(), original.end(), 0);
    std::ranges::stable_sort(original, [&](Vertex a, Vertex b) {
      return g.degree(a) > g.degree(b);
    });
    std::vector<Vertex> inverse(n);
    for (Vertex i = 0; i < n; ++i)
      inverse[original[i]] = i;
    rows.assign(static_cast<std::size_t>(n) * words, 0);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j : g.neighbors(original[i])) {
        const Vertex k = inverse[j];
        rows[i * words + k / 64] |= Word{1} << (k % 64);
      }
  }

  const Word *row(Vertex i) const { return rows.data() + i * words; }
};

bool any_bit(const std::vector<Word> &s) {
  return std::ranges::any_of(s, [](Word w) { return w != 0; });
}

class CliqueSearch {
public:
  CliqueSearch(const OrderedBits &bits, std::uint64_t limit) : bits_(bits), limit_(limit) {}

  void run(Vertex n) {
    std::vector<Word> all(bits_.words, 0);
    for (Vertex i = 0; i < n; ++i)
      all[i / 64] |= Word{1} << (i % 64);
    if (n > 0) {
      best_ = 1;
      best_set_ = {0};
    }
    expand(all);
  }

  std::int64_t best() const { return best_; }
  std::int64_t upper() const { return exhausted_ ? std::max(best_, root_bound_) : best_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Vertex> &best_set() const { return best_set_; }

private:
  // Greedy sequential colouring of P in index order; colour classes are
  // emitted in increasing colour so the last vertices carry the largest bound.
  void color_sort(std::vector<Word> p, std::vector<Vertex> &order,
                  std::vector<std::int64_t> &color) const {
    order.clear();
    color.clear();
    std::vector<Word> q(bits_.words);
    for (std::int64_t k = 1; any_bit(p); ++k) {
      q = p;
      for (std::size_t w = 0; w < q.size(); ++w) {
        while (q[w] != 0) {
          const auto v = static_cast<Vertex>(w * 64 + std::countr_zero(q[w]));
          q[w] &= q[w] - 1;
          p[w] &= ~(Word{1} << (v % 64));
          const Word *r = bits_.row(v);
          for (std::size_t x = w; x < q.size(); ++x)
            q[x] &= ~r[x];
          order.push_back(v);
          color.push_back(k);
        }
      }
    }
  }

  void expand(std::vector<Word> p) {
    if (++nodes_ > limit_) {
      exhausted_ = true;
      return;
    }
    const bool root = current_.empty();
    std::vector<Vertex> order;
    std::vector<std::int64_t> color;
    color_sort(p, order, color);
    const auto depth = static_cast<std::int64_t>(current_.size());
    std::vector<Word> next(bits_.words);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + color[i] <= best_ || exhausted_)
        return;
      if (root)
        root_bound_ = color[i];
      const Vertex v = order[i];
      current_.push_back(v);
      const Word *r = bits_.row(v);
      for (std::size_t w = 0; w < next.size(); ++w)
        next[w] = p[w] & r[w];
      if (!any_bit(next)) {
        if (depth + 1 > best_) {
          best_ = depth + 1;
          best_set_ = current_;
        }
      } else {
        expand(next);
      }
      current_.pop_back();
      p[v / 64] &= ~(Word{1} << (v % 64));
    }
  }

  const OrderedBits &bits_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::int64_t best_ = 0;
  std::int64_t root_bound_ = 0;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_set_;
};

} // namespace

CliqueResult max_clique(const Graph &g, SearchBudget budget) {
  const Vertex n = g.order();
  if (n == 0)
    return {{0, 0, 0}, {}};
  OrderedBits bits(g);
  CliqueSearch search(bits, budget.node_limit);
  search.run(n);
  CliqueResult out;
  out.value = {search.best(), search.upper(), search.nodes()};
  for (Vertex v : search.best_set())
    out.witness.push_back(bits.original[v]);
  std::ranges::sort(out.witness);
  return out;
}

std::vector<std::int32_t> dsatur_coloring(const Graph &g) {
  const Vertex n = g.order();
  std::vector<std::int32_t> color(n, -1);
  std::vector<std::vector<bool>> seen(n);
  std::vector<std::int32_t> sat(n, 0), free_degree(n);
  for (Vertex v = 0; v < n; ++v)
    free_degree[v] = g.degree(v);
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v)
    adj[v] = g.neighbors(v);
  for (Vertex step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] >= 0)
        continue;
      if (pick < 0 || sat[v] > sat[pick] ||
          (sat[v] == sat[pick] && free_degree[v] > free_degree[pick]))
        pick = v;
    }
    std::int32_t c = 0;
    while (c < static_cast<std::int32_t>(seen[pick].size()) && seen[pick][c])
      ++c;
    color[pick] = c;
    for (Vertex y : adj[pick]) {
      --free_degree[y];
      if (seen[y].size() <= static_cast<std::size_t>(c))
        seen[y].resize(c + 1, false);
      if (!seen[y][c]) {
        seen[y][c] = true;
        ++sat[y];
      }
    }
  }
  return color;
}

bool is_proper_coloring(const Graph &g, const std::vector<std::int32_t> &colors) {
  if (colors.size() != static_cast<std::size_t>(g.order()))
    return false;
  if (std::ranges::any_of(colors, [](std::int32_t c) { return c < 0; }))
    return false;
  for (auto [i, j] : g.edges())
    if (colors[i] == colors[j])
      return false;
  return true;
}

namespace {

std::int64_t color_count(const std::vector<std::int32_t> &colors) {
  return colors.empty() ? 0 : *std::ranges::max_element(colors) + 1;
}

class ColoringSearch {
public:
  ColoringSearch(const Graph &g, std::int64_t lower, std::vector<std::int32_t> best,
                 std::uint64_t limit)
      : n_(g.order()), lower_(lower), best_(std::move(best)), best_k_(color_count(best_)),
        stride_(best_k_), limit_(limit), color_(n_, -1), sat_(n_, 0), free_degree_(n_),
        counts_(static_cast<std::size_t>(n_) * stride_, 0) {
    adj_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      adj_[v] = g.neighbors(v);
      free_degree_[v] = static_cast<std::int32_t>(adj_[v].size());
    }
  }

  void precolor(const std::vector<Vertex> &clique) {
    std::int32_t c = 0;
    for (Vertex v : clique)
      assign(v, c++);
    used_ = c;
    colored_ = static_cast<Vertex>(clique.size());
  }

  void run() { search(); }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  std::int64_t best_k() const { return best_k_; }
  const std::vector<std::int32_t> &best() const { return best_; }

private:
  std::uint16_t &count(Vertex v, std::int32_t c) {
    return counts_[static_cast<std::size_t>(v) * stride_ + c];
  }

  void assign(Vertex v, std::int32_t c) {
    color_[v] = c;
    for (Vertex y : adj_[v]) {
      --free_degree_[y];
      if (count(y, c)++ == 0)
        ++sat_[y];
    }
  }

  void unassign(Vertex v) {
    const std::int32_t c = color_[v];
    color_[v] = -1;
    for (Vertex y : adj_[v]) {
      ++free_degree_[y];
      if (--count(y, c) == 0)
        --sat_[y];
    }
  }

  void search() {
    if (++nodes_ > limit_) {
      exhausted_ = true;
      return;
    }
    if (colored_ == n_) {
      best_k_ = used_;
      best_ = color_;
      return;
    }
    Vertex pick = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] >= 0)
        continue;
      if (pick < 0 || sat_[v] > sat_[pick] ||
          (sat_[v] == sat_[pick] && free_degree_[v] > free_degree_[pick]))
        pick = v;
    }
    const std::int32_t saved_used = used_;
    for (std::int32_t c = 0; c < used_; ++c) {
      if (count(pick, c) != 0)
        continue;
      assign(pick, c);
      ++colored_;
      search();
      --colored_;
      unassign(pick);
      if (exhausted_ || best_k_ <= lower_)
        return;
    }
    if (used_ + 1 < best_k_) {
      assign(pick, used_);
      ++used_;
      ++colored_;
      search();
      --colored_;
      --used_;
      unassign(pick);
    }
    used_ = saved_used;
  }

  Vertex n_;
  std::int64_t lower_;
  std::vector<std::int32_t> best_;
  std::int64_t best_k_;
  std::int64_t stride_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::int32_t> color_;
  std::vector<std::int32_t> sat_;
  std::vector<std::int32_t> free_degree_;
  std::vector<std::uint16_t> counts_;
  std::vector<std::vector<Vertex>> adj_;
  std::int32_t used_ = 0;
  Vertex colored_ = 0;
};

} // namespace

ColoringResult chromatic(const Graph &g, SearchBudget budget) {
  return chromatic(g, max_clique(g, budget), budget);
}

ColoringResult chromatic(const Graph &g, const CliqueResult &clique, SearchBudget budget) {
  if (g.order() == 0)
    return {{0, 0, 0}, {}};
  ColoringResult out;
  out.witness = dsatur_coloring(g);
  const std::int64_t lower = clique.value.lower;
  const std::int64_t upper = color_count(out.witness);
  out.value = {lower, upper, clique.value.nodes};
  if (lower == upper)
    return out;

  ColoringSearch search(g, lower, out.witness, budget.node_limit);
  search.precolor(clique.witness);
  search.run();
  out.value.nodes += search.nodes();
  out.witness = search.best();
  out.value.upper = search.best_k();
  if (!search.exhausted())
    out.value.lower = out.value.upper;
  return out;
}

} // namespace zdg
