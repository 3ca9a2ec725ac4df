#pragma once

// Brute-force shortest signed decompositions k = sum +-s_j in Cay(Z, S) for finite
// truncations of a symmetric generating set. Ground truth for the digit formulas.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zcoarse/gadic_core.hpp"
#include "zcoarse/interval.hpp"

namespace zcoarse {

class GeneratorSet {
 public:
  enum class Kind { geometric, explicit_list, q_star };

  static GeneratorSet geometric(Base g);
  /// Positive, distinct generators; the symmetric closure is implied.
  static GeneratorSet explicit_list(std::vector<std::int64_t> positives);
  /// Every m <= bound whose prime factors all lie in primes (including m = 1).
  static GeneratorSet q_star(std::vector<std::int64_t> primes, std::int64_t bound);

  Kind kind() const { return kind_; }
  /// Positive generators of magnitude <= cap, ascending.
  std::vector<std::int64_t> truncate(std::int64_t cap) const;
  /// Cap used when the caller does not supply one. For S_g this is g^(D+2) with
  /// D = ceil(log_g(|k| + 1)), which admits every index of the special representation.
  std::int64_t default_cap(std::int64_t k) const;
  std::string describe() const;

 private:
  GeneratorSet(Kind kind, std::int64_t g, std::vector<std::int64_t> members);

  Kind kind_;
  std::int64_t g_ = 0;
  std::vector<std::int64_t> members_;  // explicit list, Q* members, or the prime set
  std::int64_t bound_ = 0;
};

struct OracleResult {
  /// Empty means INCONCLUSIVE: no decomposition within max_terms (or the search budget).
  std::optional<WordLength> length;
  /// Signed terms summing to k, largest magnitude first.
  std::vector<std::int64_t> witness;
  std::vector<std::int64_t> generators_used;
  std::int64_t search_bound = 0;
  std::vector<std::string> warnings;

  bool inconclusive() const { return !length.has_value(); }
};

/// Iterative deepening over the number of terms for a fixed finite generator list.
/// Depth d is answered from the exact ball of radius d around 0 while that ball fits the
/// budget, then by meeting two balls in the middle. Reusable across many targets.
class GeodesicSearch {
 public:
  explicit GeodesicSearch(std::vector<std::int64_t> positive_generators,
                          std::size_t ball_budget = std::size_t{1} << 20);

  OracleResult shortest(std::int64_t k, unsigned max_terms);

  const std::vector<std::int64_t>& generators() const { return gens_; }
  unsigned radius() const { return static_cast<unsigned>(layers_.size()) - 1; }

 private:
  struct Node {
    std::int64_t parent;
    unsigned depth;
  };

  bool grow();
  std::vector<std::int64_t> path_to(std::int64_t v) const;

  std::vector<std::int64_t> gens_;
  std::size_t budget_;
  std::int64_t magnitude_limit_;
  std::unordered_map<std::int64_t, Node> ball_;
  std::vector<std::vector<std::int64_t>> layers_;
  bool saturated_ = false;
};

OracleResult oracle_length(const GeneratorSet& s, std::int64_t k, unsigned max_terms,
                           std::optional<std::int64_t> gen_cap = std::nullopt);

struct FormulaMismatch {
  std::int64_t k;
  WordLength formula;
  WordLength oracle;
};

struct FormulaReport {
  Base base;
  Interval range;
  std::int64_t search_bound = 0;
  unsigned max_terms = 0;
  std::uint64_t matches = 0;
  std::vector<FormulaMismatch> mismatches;
  std::vector<std::int64_t> inconclusive;

  bool all_match() const { return mismatches.empty() && inconclusive.empty(); }
};

/// Compares word_length against the oracle for every k in range.
FormulaReport validate_formula(Base g, Interval range, unsigned max_terms = 40);

}  // namespace zcoarse
