#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dyck/path.hpp"

namespace dyck {

inline constexpr int kOracleCap = 16;

using BigInt = boost::multiprecision::cpp_int;

/// Every Dyck word of semilength n, strictly ascending ('0' < '1').
struct WordSet {
  int n = 0;
  std::vector<DyckWord> words;
};

/// Plain prefix backtracking: append a down step while the height is
/// positive, an up step while fewer than n have been used. Unrelated to the
/// generating tree on purpose. Throws CapExceeded above `cap` (at most
/// kOracleCap).
WordSet brute_enumerate(int n, int cap = kOracleCap);

/// C_0 = 1, C_{m+1} = sum_j C_j C_{m-j}, exact.
BigInt catalan(int n);

struct DiffReport {
  std::vector<DyckWord> duplicates;  // repeated in the candidate list
  std::vector<DyckWord> missing;     // in the oracle set, absent from the list
  std::vector<DyckWord> unexpected;  // in the list, absent from the oracle set

  bool empty() const noexcept {
    return duplicates.empty() && missing.empty() && unexpected.empty();
  }
};

DiffReport compare(const WordSet& expected, std::span<const DyckWord> candidate);

/// One '1'/'0' word per line, LF terminated.
void write_words(std::ostream& os, const WordSet& set);

}  // namespace dyck
