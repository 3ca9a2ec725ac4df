#include "zcoarse/rectify.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "zcoarse/errors.hpp"

namespace zcoarse {

namespace {

bool in_generators(Base g, std::int64_t v) {
  if (v == 0) return false;
  std::uint64_t m = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
  const auto base = static_cast<std::uint64_t>(g.value());
  while (m % base == 0) m /= base;
  return m == 1;
}

}  // namespace

std::int64_t block_index(Base g, std::int64_t x) {
  const std::int64_t b = g.value();
  if (x == 0) return 1;  // 0 = 1 + (-1), and 0 is not a generator
  if (x > 0) {
    std::int64_t power = 1;
    while (power <= x / b) power *= b;
    return x - power;  // the largest power below x beats x + 1
  }
  std::int64_t power = 1;
  while (power < -x) power *= b;
  return x + power;
}

PartitionCover build_partition(Base g, Interval window) {
  if (window.empty()) throw PreconditionError("empty window");
  PartitionCover cover{g, window, {}};
  for (std::int64_t x = window.lo; x <= window.hi; ++x) cover.blocks[block_index(g, x)].push_back(x);

  // Verify: each member x of B_n has x - n in S_g and x - i outside S_g for i < n.
  std::uint64_t covered = 0;
  for (const auto& [n, members] : cover.blocks) {
    for (const auto x : members) {
      if (n < 0 || !in_generators(g, x - n)) throw std::logic_error("block member outside its translate");
      for (std::int64_t power = 1;; power *= g.value()) {
        for (const std::int64_t s : {power, -power}) {
          const std::int64_t i = x - s;
          if (i >= 0 && i < n) throw std::logic_error("block member belongs to an earlier translate");
        }
        if (power > (std::numeric_limits<std::int64_t>::max() / g.value()) || power > std::abs(x) + n + 1) {
          break;
        }
      }
      ++covered;
    }
  }
  if (covered != window.size()) throw std::logic_error("blocks do not cover the window");
  return cover;
}

FiniteCoarseMap FiniteCoarseMap::tabulate(Interval domain, const std::function<std::int64_t(std::int64_t)>& f) {
  FiniteCoarseMap out{domain, {}};
  out.values.reserve(domain.size());
  for (std::int64_t x = domain.lo; x <= domain.hi; ++x) out.values.push_back(f(x));
  return out;
}

std::int64_t FiniteCoarseMap::operator()(std::int64_t x) const {
  if (!domain.contains(x)) throw PreconditionError("point " + std::to_string(x) + " outside the map's domain");
  return values[static_cast<std::size_t>(x - domain.lo)];
}

WindowTooSmall::WindowTooSmall(std::int64_t block_, std::size_t room_, std::size_t demand_)
    : std::runtime_error("WINDOW_TOO_SMALL: block " + std::to_string(block_) + " has " + std::to_string(room_) +
                         " slots for " + std::to_string(demand_) + " preimages"),
      block(block_),
      room(room_),
      demand(demand_) {}

Table greedy_injection(const FiniteCoarseMap& f, const PartitionCover& cover) {
  if (f.values.size() != f.domain.size()) throw MalformedInput("map table does not cover its domain");
  std::map<std::int64_t, std::vector<std::int64_t>> preimages;
  for (std::int64_t x = f.domain.lo; x <= f.domain.hi; ++x) preimages[cover.block_of(f(x))].push_back(x);
  Table g;
  for (const auto& [block, xs] : preimages) {
    auto it = cover.blocks.find(block);
    const std::size_t room = it == cover.blocks.end() ? 0 : it->second.size();
    if (room < xs.size()) throw WindowTooSmall(block, room, xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) g.emplace(xs[i], it->second[i]);
  }
  return g;
}

namespace {

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();

// Maximum bipartite matching on left/right index sets (Hopcroft-Karp).
class Matcher {
 public:
  explicit Matcher(std::vector<std::vector<int>> adjacency, int right_size)
      : adj_(std::move(adjacency)), match_l_(adj_.size(), -1), match_r_(right_size, -1), dist_(adj_.size()) {}

  int run() {
    int matched = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_l_[u] == -1 && dfs(static_cast<int>(u))) ++matched;
      }
    }
    return matched;
  }

  const std::vector<int>& left_matches() const { return match_l_; }

 private:
  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      dist_[u] = match_l_[u] == -1 ? 0 : -1;
      if (dist_[u] == 0) q.push(static_cast<int>(u));
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const int v : adj_[u]) {
        const int w = match_r_[v];
        if (w == -1) {
          found = true;
        } else if (dist_[w] == -1) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (const int v : adj_[u]) {
      const int w = match_r_[v];
      if (w == -1 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_l_[u] = v;
        match_r_[v] = u;
        return true;
      }
    }
    dist_[u] = -1;
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_l_;
  std::vector<int> match_r_;
  std::vector<int> dist_;
};

constexpr std::size_t kMaxBottleneckSize = 4096;

void pair_leftovers(const std::vector<std::int64_t>& left, const std::vector<std::int64_t>& right,
                    const PairCost& cost, CsbResult& out) {
  const std::size_t n = left.size();
  if (n == 0) return;
  if (!cost || n > kMaxBottleneckSize) {
    std::uint64_t worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      out.h.emplace(left[i], right[i]);
      if (cost) worst = std::max(worst, cost(left[i], right[i]));
    }
    if (cost) out.fallback_bottleneck = worst;
    return;
  }
  std::vector<std::uint64_t> costs(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) costs[i * n + j] = cost(left[i], right[j]);
  }
  std::vector<std::uint64_t> levels(costs);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  auto try_level = [&](std::uint64_t limit, std::vector<int>* matches) {
    std::vector<std::vector<int>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (costs[i * n + j] <= limit) adj[i].push_back(static_cast<int>(j));
      }
    }
    Matcher m(std::move(adj), static_cast<int>(n));
    const bool perfect = m.run() == static_cast<int>(n);
    if (perfect && matches) *matches = m.left_matches();
    return perfect;
  };

  std::size_t lo = 0, hi = levels.size() - 1;  // the top level is complete, so always perfect
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (try_level(levels[mid], nullptr)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  std::vector<int> matches;
  try_level(levels[lo], &matches);
  for (std::size_t i = 0; i < n; ++i) out.h.emplace(left[i], right[static_cast<std::size_t>(matches[i])]);
  out.fallback_bottleneck = levels[lo];
}

std::vector<std::int64_t> restrict_and_invert(const Table& t, Interval from, Interval to, std::vector<std::int64_t>& inverse,
                                              const char* name) {
  std::vector<std::int64_t> forward(from.size(), kNone);
  for (const auto& [x, y] : t) {
    if (!from.contains(x) || !to.contains(y)) continue;
    auto& slot = inverse[static_cast<std::size_t>(y - to.lo)];
    if (slot != kNone) throw PreconditionError(std::string(name) + " is not injective");
    slot = x;
    forward[static_cast<std::size_t>(x - from.lo)] = y;
  }
  return forward;
}

}  // namespace

CsbResult csb_bijection(Interval a_side, Interval b_side, const Table& g_fwd, const Table& g_bwd, const PairCost& cost) {
  if (a_side.size() != b_side.size()) throw PreconditionError("CSB needs windows of equal size");
  // Injectivity is checked on the full tables, not only the in-window part.
  for (const Table* t : {&g_fwd, &g_bwd}) {
    std::vector<std::int64_t> values;
    for (const auto& [x, y] : *t) values.push_back(y);
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
      throw PreconditionError(t == &g_fwd ? "g_fwd is not injective" : "g_bwd is not injective");
    }
  }
  const std::size_t n = a_side.size();
  std::vector<std::int64_t> fwd_inv(n, kNone), bwd_inv(n, kNone);
  const auto fwd = restrict_and_invert(g_fwd, a_side, b_side, fwd_inv, "g_fwd");
  const auto bwd = restrict_and_invert(g_bwd, b_side, a_side, bwd_inv, "g_bwd");
  auto ai = [&](std::int64_t a) { return static_cast<std::size_t>(a - a_side.lo); };
  auto bi = [&](std::int64_t b) { return static_cast<std::size_t>(b - b_side.lo); };

  CsbResult out;
  std::vector<bool> a_seen(n, false), b_taken(n, false);
  for (std::int64_t a0 = a_side.lo; a0 <= a_side.hi; ++a0) {
    if (a_seen[ai(a0)]) continue;
    // Walk back to the start of the chain, or around its cycle.
    bool on_a = true;
    std::int64_t cur = a0;
    bool cycle = false;
    while (true) {
      const std::int64_t prev = on_a ? bwd_inv[ai(cur)] : fwd_inv[bi(cur)];
      if (prev == kNone) break;
      on_a = !on_a;
      cur = prev;
      if (on_a && cur == a0) {
        cycle = true;
        break;
      }
    }
    const bool use_forward = cycle || on_a;
    // Walk forward along the chain from its start.
    while (true) {
      if (on_a) {
        if (a_seen[ai(cur)]) break;
        a_seen[ai(cur)] = true;
        const std::int64_t next = fwd[ai(cur)];
        if (use_forward && next != kNone) {
          out.h.emplace(cur, next);
          b_taken[bi(next)] = true;
          ++out.from_forward;
        }
        if (next == kNone) break;
        cur = next;
        on_a = false;
      } else {
        const std::int64_t next = bwd[bi(cur)];
        if (!use_forward && next != kNone) {
          out.h.emplace(next, cur);
          b_taken[bi(cur)] = true;
          ++out.from_backward;
        }
        if (next == kNone) break;
        cur = next;
        on_a = true;
      }
    }
  }

  std::vector<std::int64_t> left, right;
  for (std::int64_t a = a_side.lo; a <= a_side.hi; ++a) {
    if (!out.h.contains(a)) left.push_back(a);
  }
  for (std::int64_t b = b_side.lo; b <= b_side.hi; ++b) {
    if (!b_taken[bi(b)]) right.push_back(b);
  }
  if (left.size() != right.size()) throw std::logic_error("CSB leftovers do not balance");
  out.fallback = left.size();
  pair_leftovers(left, right, cost, out);
  return out;
}

AuditResult closeness_audit(const Table& h, const FiniteCoarseMap& f, Base target) {
  AuditResult out;
  bool first = true;
  for (std::int64_t x = f.domain.lo; x <= f.domain.hi; ++x) {
    auto it = h.find(x);
    if (it == h.end()) throw PreconditionError("h is undefined at " + std::to_string(x));
    const WordLength d = distance(target, it->second, f(x));
    if (first || d > out.max_displacement) {
      out.max_displacement = d;
      out.worst_point = x;
      first = false;
    }
  }
  return out;
}

namespace {

Interval hull(Interval w, const FiniteCoarseMap& f) {
  for (const auto v : f.values) {
    w.lo = std::min(w.lo, v);
    w.hi = std::max(w.hi, v);
  }
  return w;
}

std::pair<Table, Interval> fit_injection(const FiniteCoarseMap& f, Base g, Interval window, unsigned max_enlargements) {
  window = hull(window, f);
  for (unsigned attempt = 0;; ++attempt) {
    try {
      return {greedy_injection(f, build_partition(g, window)), window};
    } catch (const WindowTooSmall&) {
      if (attempt >= max_enlargements) throw;
      const auto grow = static_cast<std::int64_t>(window.size() / 2 + 1);
      window.lo -= grow;
      window.hi += grow;
    }
  }
}

}  // namespace

RectifyReport rectify(const FiniteCoarseMap& f, const FiniteCoarseMap& f_inverse, Base source, Base target,
                      unsigned max_enlargements) {
  RectifyReport r;
  r.domain = f.domain;
  r.codomain = f_inverse.domain;
  if (r.domain.size() != r.codomain.size()) throw PreconditionError("domain and codomain windows differ in size");
  std::tie(r.g_fwd, r.forward_window) = fit_injection(f, target, r.codomain, max_enlargements);
  std::tie(r.g_bwd, r.backward_window) = fit_injection(f_inverse, source, r.domain, max_enlargements);
  r.csb = csb_bijection(r.domain, r.codomain, r.g_fwd, r.g_bwd,
                        [&](std::int64_t a, std::int64_t b) { return distance(target, b, f(a)); });
  r.audit = closeness_audit(r.csb.h, f, target);
  return r;
}

}  // namespace zcoarse
