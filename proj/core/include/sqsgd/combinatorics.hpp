// Copyright 2026 The sqsgd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "sqsgd/rng.hpp"

namespace sqsgd {

// A nonnegative quantity stored as its natural log, with a dedicated
// representation for zero (log = -inf). Addition goes through log-sum-exp,
// so sums of astronomically large counts (binomial tails at d ~ 1e6) never
// overflow.
class LogWeight {
 public:
  static constexpr double kLogZero = -std::numeric_limits<double>::infinity();

  LogWeight() : log_(kLogZero) {}

  static LogWeight from_log(double log_value) { return LogWeight(log_value); }
  static LogWeight zero() { return LogWeight(); }
  static LogWeight one() { return LogWeight(0.0); }

  double log() const { return log_; }
  double value() const;  // exp(log); may round to 0 or inf at the extremes
  bool is_zero() const { return log_ == kLogZero; }

  LogWeight operator+(LogWeight other) const;  // log-sum-exp
  LogWeight operator*(LogWeight other) const;  // adds logs
  LogWeight& operator+=(LogWeight other) {
    *this = *this + other;
    return *this;
  }

 private:
  explicit LogWeight(double log_value) : log_(log_value) {}
  double log_;
};

// Compensated (Kahan) log-sum-exp over raw log-values.
LogWeight log_sum_exp(std::span<const double> logs);

// log(1 + e^x) without overflow.
double log1pexp(double x);

// Precomputed lgamma(i) for integer arguments 0 < i <= max_arg. Building one
// per configured dimension keeps repeated tail-sum evaluations (e.g. the
// budget solver's binary search) cheap.
class LgammaCache {
 public:
  explicit LgammaCache(int64_t max_arg);
  double operator()(int64_t i) const { return table_[static_cast<size_t>(i)]; }
  int64_t max_arg() const { return static_cast<int64_t>(table_.size()) - 1; }

 private:
  std::vector<double> table_;
};

// log C(n, k) via lgamma. Returns LogWeight::zero() when k < 0 or k > n.
LogWeight log_binomial(int64_t n, int64_t k);
LogWeight log_binomial(int64_t n, int64_t k, const LgammaCache& lg);

// log of sum_{l=lo}^{hi} C(d, l) (K-1)^(d-l). Requires 0 <= lo <= hi <= d.
LogWeight log_tail_sum(int64_t d, int64_t k_levels, int64_t lo, int64_t hi);
LogWeight log_tail_sum(int64_t d, int64_t k_levels, int64_t lo, int64_t hi,
                       const LgammaCache& lg);

// Draws a match count l in [lo, hi] with P(l) proportional to
// C(d, l) (K-1)^(d-l). Inverse-CDF over normalized weights accumulated in
// descending order with compensated summation.
class MatchCountSampler {
 public:
  MatchCountSampler(int64_t d, int64_t k_levels, int64_t lo, int64_t hi);
  MatchCountSampler(int64_t d, int64_t k_levels, int64_t lo, int64_t hi,
                    const LgammaCache& lg);

  int64_t operator()(Rng& rng) const;

  int64_t lo() const { return lo_; }
  int64_t hi() const { return hi_; }
  LogWeight total() const { return total_; }

 private:
  void build(int64_t d, int64_t k_levels, const LgammaCache& lg);

  int64_t lo_;
  int64_t hi_;
  LogWeight total_;
  std::vector<int64_t> values_;  // bucket values, descending weight
  std::vector<double> cdf_;      // cumulative normalized weights
};

// One-shot convenience around MatchCountSampler.
int64_t sample_truncated_matchcount(int64_t d, int64_t k_levels, int64_t lo,
                                    int64_t hi, Rng& rng);

}  // namespace sqsgd
