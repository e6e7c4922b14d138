#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nalen/canonical.hpp"
#include "nalen/identities.hpp"
#include "nalen/spans.hpp"

namespace nalen {

// 2^{n-1} + n - 2, n >= 2
std::uint64_t alt_min_dim(std::uint64_t n);
// ceil(log2 D), D >= 3
std::uint64_t alt_max_length(std::uint64_t dim_minus_d0);
// n (n <= 2), 2n - 1 (3 <= n <= 5), 3 * 2^{n-4} + n - 3 (n >= 6)
std::uint64_t flex_min_dim(std::uint64_t n);
// ceil(D / 2) for D <= 10, least n with 3 * 2^n >= 8D beyond
std::uint64_t flex_max_length(std::uint64_t dim_minus_d0);
// max { n : flex_min_dim(n) <= D }
std::uint64_t flex_max_length_inverse(std::uint64_t dim_minus_d0);

enum class BoundClass { alt, flex };
const char* to_string(BoundClass c);

// 2 d_1 or 3 d_1 - 1; 0 for d_1 = 0
std::uint64_t quick_set_bound(std::uint64_t d1, BoundClass c);
// max{k, n-k} + 2^n - 2^k - 2^{n-k} + 1, 1 <= k <= n - 1
std::uint64_t alt_word_dim_bound(std::uint64_t n, std::uint64_t k);

struct BoundEntry {
  std::string name;
  std::string subject;  // "A" or the generator set
  std::vector<std::pair<std::string, std::int64_t>> inputs;
  std::string inequality;
  std::string observed;
  bool pass = true;
  bool equality = false;
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  bool passed() const;
};

struct SetLength {
  std::string name;
  GeneratorSet set;
  DiffSequence sequence;
};

struct LengthData {
  std::vector<SetLength> sets;
  std::optional<std::size_t> algebra_length;  // exact l(A) when known
  std::uint64_t word_budget = 200'000;        // restricted words scanned for canonical witnesses
};

BoundReport audit(const Algebra& a, const ClassificationReport& report, const LengthData& lengths);

}  // namespace nalen
