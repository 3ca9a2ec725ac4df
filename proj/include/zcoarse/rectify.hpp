#pragma once

// Turning a coarse equivalence of (Z, d_g) into a nearby bijection on finite windows:
// a partition of Z into translates of S_g, blockwise injections, and the
// Cantor-Schroeder-Bernstein chain decomposition.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zcoarse/gadic_core.hpp"
#include "zcoarse/interval.hpp"

namespace zcoarse {

/// Index n of the block B_n = (n + S_g) minus the earlier translates containing x:
/// the least n >= 0 with x - n in S_g.
std::int64_t block_index(Base g, std::int64_t x);

struct PartitionCover {
  Base base;
  Interval window;
  /// Block index -> members inside the window, ascending.
  std::map<std::int64_t, std::vector<std::int64_t>> blocks;

  std::int64_t block_of(std::int64_t x) const { return block_index(base, x); }
};

/// Throws std::logic_error if the computed blocks fail to be a disjoint cover of the window
/// or a block leaves its translate n + S_g.
PartitionCover build_partition(Base g, Interval window);

using Table = std::map<std::int64_t, std::int64_t>;

/// Values of a map on a finite domain window.
struct FiniteCoarseMap {
  Interval domain;
  std::vector<std::int64_t> values;

  static FiniteCoarseMap tabulate(Interval domain, const std::function<std::int64_t(std::int64_t)>& f);
  std::int64_t operator()(std::int64_t x) const;
};

class WindowTooSmall : public std::runtime_error {
 public:
  WindowTooSmall(std::int64_t block, std::size_t room, std::size_t demand);
  std::int64_t block;
  std::size_t room;
  std::size_t demand;
};

/// Injective g with g(x) in the same block as f(x). Blocks are filled in ascending
/// index, preimages and slots in ascending value. Throws WindowTooSmall when a block
/// has fewer slots inside the cover window than preimages.
Table greedy_injection(const FiniteCoarseMap& f, const PartitionCover& cover);

struct CsbResult {
  Table h;
  std::uint64_t from_forward = 0;   ///< h(x) = g_fwd(x)
  std::uint64_t from_backward = 0;  ///< h(x) = g_bwd^-1(x)
  /// Elements left unmatched by the chains (paths with unequal ends inside the finite
  /// windows), paired afterwards.
  std::uint64_t fallback = 0;
  /// Largest cost among fallback pairs, when a cost was supplied.
  std::optional<std::uint64_t> fallback_bottleneck;
};

/// Cost of sending a to b, used to pair elements the chains leave unmatched.
using PairCost = std::function<std::uint64_t(std::int64_t a, std::int64_t b)>;

/// Bijection h : a_side -> b_side built from partial injections g_fwd : A -> B and
/// g_bwd : B -> A (entries leaving the other window are ignored). Chains starting in
/// A \ image(g_bwd) and cycles use g_fwd, chains starting in B \ image(g_fwd) use g_bwd^-1.
/// Leftovers are paired by a bottleneck matching under `cost` if given, else in
/// ascending order. Throws PreconditionError if |A| != |B| or a table is not injective.
CsbResult csb_bijection(Interval a_side, Interval b_side, const Table& g_fwd, const Table& g_bwd,
                        const PairCost& cost = {});

struct AuditResult {
  WordLength max_displacement = 0;
  std::int64_t worst_point = 0;
};

/// max over the domain of d_g(h(x), f(x)).
AuditResult closeness_audit(const Table& h, const FiniteCoarseMap& f, Base target);

struct RectifyReport {
  Interval domain;
  Interval codomain;
  Interval forward_window;   ///< cover window that made the forward injection fit
  Interval backward_window;
  Table g_fwd;
  Table g_bwd;
  CsbResult csb;
  AuditResult audit;
};

/// Full pipeline on A = domain, B = codomain (|A| = |B|): greedy injections for f and
/// its coarse inverse (enlarging cover windows until every block fits), CSB, audit.
RectifyReport rectify(const FiniteCoarseMap& f, const FiniteCoarseMap& f_inverse, Base source, Base target,
                      unsigned max_enlargements = 16);

}  // namespace zcoarse
