#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wbd/matrix.hpp"

namespace wbd {

/// Knobs for every bounded element search in the engine.
struct SearchOptions {
  std::uint64_t seed = 0;
  int bound = 3;                 ///< integer coefficients are drawn from [-bound, bound]
  std::size_t max_tries = 4000;  ///< total candidates per search
};

/// Deterministic stream of candidate vectors drawn from span(basis): the basis
/// vectors, then pairwise sums and differences, then seeded random integer
/// combinations. Stops after max_tries candidates.
template <ExactField K>
class CandidateStream {
 public:
  CandidateStream(std::vector<Vec<K>> basis, const SearchOptions& opts)
      : basis_(std::move(basis)), opts_(opts), rng_(opts.seed) {}

  std::optional<Vec<K>> next() {
    if (basis_.empty() || produced_ >= opts_.max_tries) return std::nullopt;
    ++produced_;
    const std::size_t n = basis_.size();
    if (phase_ == 0) {
      if (i_ < n) return basis_[i_++];
      phase_ = 1;
      i_ = 0;
      j_ = 1;
    }
    if (phase_ == 1) {
      while (i_ + 1 < n) {
        if (j_ >= n) {
          ++i_;
          j_ = i_ + 1;
          continue;
        }
        Vec<K> v = sign_ == 0 ? basis_[i_] + basis_[j_] : basis_[i_] - basis_[j_];
        if (sign_ == 1) ++j_;
        sign_ ^= 1;
        return v;
      }
      phase_ = 2;
    }
    const std::uint64_t width = 2 * static_cast<std::uint64_t>(opts_.bound > 0 ? opts_.bound : 1) + 1;
    for (;;) {
      Vec<K> v(basis_.front().size(), K(0));
      bool any = false;
      for (const auto& b : basis_) {
        const long c = static_cast<long>(rng_() % width) - static_cast<long>(width / 2);
        if (c == 0) continue;
        any = true;
        v = v + K(c) * b;
      }
      if (any) return v;
    }
  }

  std::size_t produced() const { return produced_; }

 private:
  std::vector<Vec<K>> basis_;
  SearchOptions opts_;
  std::mt19937_64 rng_;
  std::size_t produced_ = 0;
  int phase_ = 0;
  std::size_t i_ = 0, j_ = 1;
  int sign_ = 0;
};

}  // namespace wbd
