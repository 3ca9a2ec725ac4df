#include "zcoarse/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "zcoarse/errors.hpp"

namespace zcoarse {

namespace {

constexpr std::int64_t kSearchLimit = std::int64_t{1} << 62;

std::int64_t magnitude(std::int64_t k) {
  if (k == std::numeric_limits<std::int64_t>::min()) throw PreconditionError("oracle target out of range");
  return k < 0 ? -k : k;
}

}  // namespace

GeneratorSet::GeneratorSet(Kind kind, std::int64_t g, std::vector<std::int64_t> members)
    : kind_(kind), g_(g), members_(std::move(members)) {}

GeneratorSet GeneratorSet::geometric(Base g) { return GeneratorSet(Kind::geometric, g.value(), {}); }

GeneratorSet GeneratorSet::explicit_list(std::vector<std::int64_t> positives) {
  if (positives.empty()) throw PreconditionError("explicit generator list is empty");
  std::sort(positives.begin(), positives.end());
  if (positives.front() <= 0) throw PreconditionError("generators must be positive");
  if (std::adjacent_find(positives.begin(), positives.end()) != positives.end()) {
    throw PreconditionError("generators must be distinct");
  }
  return GeneratorSet(Kind::explicit_list, 0, std::move(positives));
}

GeneratorSet GeneratorSet::q_star(std::vector<std::int64_t> primes, std::int64_t bound) {
  if (primes.empty()) throw PreconditionError("Q* needs at least one prime");
  if (bound < 1) throw PreconditionError("Q* bound must be >= 1");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const auto p : primes) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  }
  GeneratorSet s(Kind::q_star, 0, std::move(primes));
  s.bound_ = bound;
  return s;
}

std::vector<std::int64_t> GeneratorSet::truncate(std::int64_t cap) const {
  std::vector<std::int64_t> out;
  switch (kind_) {
    case Kind::geometric:
      for (std::int64_t power = 1; power <= cap; power *= g_) {
        out.push_back(power);
        if (power > cap / g_) break;
      }
      break;
    case Kind::explicit_list:
      for (const auto s : members_) {
        if (s <= cap) out.push_back(s);
      }
      break;
    case Kind::q_star: {
      const std::int64_t limit = std::min(cap, bound_);
      if (limit >= 1) out.push_back(1);
      for (const auto p : members_) {
        const std::size_t existing = out.size();
        for (std::size_t i = 0; i < existing; ++i) {
          for (std::int64_t m = out[i]; m <= limit / p;) {
            m *= p;
            out.push_back(m);
          }
        }
      }
      std::sort(out.begin(), out.end());
      break;
    }
  }
  return out;
}

std::int64_t GeneratorSet::default_cap(std::int64_t k) const {
  switch (kind_) {
    case Kind::geometric: {
      const std::int64_t target = magnitude(k) + 1;
      unsigned d = 0;
      std::int64_t power = 1;
      while (power < target) {
        power *= g_;
        ++d;
      }
      std::int64_t cap = 1;
      for (unsigned i = 0; i < d + 2; ++i) {
        if (cap > kSearchLimit / g_) throw PreconditionError("default generator cap overflows the search range");
        cap *= g_;
      }
      return cap;
    }
    case Kind::explicit_list:
      return members_.back();
    case Kind::q_star:
      return bound_;
  }
  return 0;
}

std::string GeneratorSet::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::geometric:
      out << "geometric(" << g_ << ")";
      break;
    case Kind::explicit_list:
      out << "explicit(";
      for (std::size_t i = 0; i < members_.size(); ++i) out << (i ? "," : "") << members_[i];
      out << ")";
      break;
    case Kind::q_star:
      out << "q_star({";
      for (std::size_t i = 0; i < members_.size(); ++i) out << (i ? "," : "") << members_[i];
      out << "}, " << bound_ << ")";
      break;
  }
  return out.str();
}

GeodesicSearch::GeodesicSearch(std::vector<std::int64_t> positive_generators, std::size_t ball_budget)
    : gens_(std::move(positive_generators)), budget_(ball_budget) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  if (!gens_.empty() && gens_.front() <= 0) throw PreconditionError("generators must be positive");
  const std::int64_t largest = gens_.empty() ? 1 : gens_.back();
  magnitude_limit_ = kSearchLimit - largest;
  ball_.emplace(0, Node{0, 0});
  layers_.push_back({0});
}

bool GeodesicSearch::grow() {
  if (saturated_ || gens_.empty()) return false;
  if (ball_.size() >= budget_) {
    saturated_ = true;
    return false;
  }
  const auto depth = static_cast<unsigned>(layers_.size());
  std::vector<std::int64_t> next;
  for (const auto v : layers_.back()) {
    if (v > magnitude_limit_ || v < -magnitude_limit_) throw PreconditionError("oracle search left the 62-bit range");
    for (const auto s : gens_) {
      for (const std::int64_t step : {s, -s}) {
        const std::int64_t w = v + step;
        if (ball_.try_emplace(w, Node{v, depth}).second) next.push_back(w);
      }
    }
  }
  std::sort(next.begin(), next.end());
  layers_.push_back(std::move(next));
  return true;
}

std::vector<std::int64_t> GeodesicSearch::path_to(std::int64_t v) const {
  std::vector<std::int64_t> steps;
  while (v != 0) {
    const Node& node = ball_.at(v);
    steps.push_back(v - node.parent);
    v = node.parent;
  }
  return steps;
}

OracleResult GeodesicSearch::shortest(std::int64_t k, unsigned max_terms) {
  OracleResult result;
  result.generators_used = gens_;
  result.search_bound = gens_.empty() ? 0 : gens_.back();

  auto finish = [&](std::vector<std::int64_t> witness) {
    std::sort(witness.begin(), witness.end(), [](std::int64_t a, std::int64_t b) {
      return std::llabs(a) != std::llabs(b) ? std::llabs(a) > std::llabs(b) : a > b;
    });
    // Soundness: the witness must reproduce k with exactly `length` terms.
    const std::int64_t sum = std::accumulate(witness.begin(), witness.end(), std::int64_t{0});
    if (sum != k) throw std::logic_error("oracle witness does not sum to the target");
    result.length = witness.size();
    result.witness = std::move(witness);
    return result;
  };

  // Direct lookup while the exact ball of radius d is available.
  for (unsigned d = 0; d <= max_terms; ++d) {
    if (d >= layers_.size() && !grow()) break;
    if (auto it = ball_.find(k); it != ball_.end() && it->second.depth <= d) return finish(path_to(k));
  }

  const unsigned radius = this->radius();
  const unsigned reachable = std::min(max_terms, 2 * radius);
  for (unsigned d = radius + 1; d <= reachable; ++d) {
    // k = v + w with |v|_S <= d - radius and |w|_S <= radius.
    const unsigned near = d - radius;
    for (unsigned layer = 0; layer <= near; ++layer) {
      for (const auto v : layers_[layer]) {
        if (auto it = ball_.find(k - v); it != ball_.end()) {
          auto witness = path_to(v);
          auto rest = path_to(k - v);
          witness.insert(witness.end(), rest.begin(), rest.end());
          return finish(std::move(witness));
        }
      }
    }
  }
  if (max_terms > 2 * radius && saturated_) {
    result.warnings.push_back("search budget exhausted at " + std::to_string(2 * radius) + " terms");
  }
  return result;
}

OracleResult oracle_length(const GeneratorSet& s, std::int64_t k, unsigned max_terms,
                           std::optional<std::int64_t> gen_cap) {
  const std::int64_t cap = gen_cap.value_or(s.default_cap(k));
  if (cap < 1) throw PreconditionError("generator cap must be positive");
  std::vector<std::string> warnings;
  if (cap < magnitude(k)) {
    warnings.push_back("generator cap " + std::to_string(cap) + " is below |k|; the search may still succeed");
  }
  if (max_terms > 0 && cap > kSearchLimit / (static_cast<std::int64_t>(max_terms) + 1)) {
    throw PreconditionError("generator cap too large for exact 62-bit search");
  }
  GeodesicSearch search(s.truncate(cap));
  OracleResult result = search.shortest(k, max_terms);
  result.search_bound = cap;
  result.warnings.insert(result.warnings.begin(), warnings.begin(), warnings.end());
  return result;
}

FormulaReport validate_formula(Base g, Interval range, unsigned max_terms) {
  if (range.empty()) throw PreconditionError("empty range");
  FormulaReport report{g, range, 0, max_terms, 0, {}, {}};
  const auto s = GeneratorSet::geometric(g);
  const std::int64_t widest = std::max(magnitude(range.lo), magnitude(range.hi));
  report.search_bound = s.default_cap(widest);
  GeodesicSearch search(s.truncate(report.search_bound));
  for (std::int64_t k = range.lo; k <= range.hi; ++k) {
    const OracleResult r = search.shortest(k, max_terms);
    if (r.inconclusive()) {
      report.inconclusive.push_back(k);
      continue;
    }
    const WordLength formula = word_length(g, k);
    if (formula == *r.length) {
      ++report.matches;
    } else {
      report.mismatches.push_back({k, formula, *r.length});
    }
  }
  return report;
}

}  // namespace zcoarse
