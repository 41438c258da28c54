#include "dyck/oracle.hpp"

#include <algorithm>
#include <ostream>

#include "dyck/errors.hpp"

namespace dyck {

namespace {

void extend(std::vector<std::uint8_t>& prefix, int ups, int height, int n,
            std::vector<DyckWord>& out) {
  if (prefix.size() == 2 * static_cast<std::size_t>(n)) {
    out.push_back(validate(prefix));
    return;
  }
  // Down first so the output comes out in ascending order.
  if (height > 0) {
    prefix.push_back(kDown);
    extend(prefix, ups, height - 1, n, out);
    prefix.pop_back();
  }
  if (ups < n) {
    prefix.push_back(kUp);
    extend(prefix, ups + 1, height + 1, n, out);
    prefix.pop_back();
  }
}

}  // namespace

WordSet brute_enumerate(int n, int cap) {
  if (n < 0) throw std::invalid_argument("brute_enumerate: negative semilength");
  const int limit = std::min(cap, kOracleCap);
  if (n > limit) throw CapExceeded("brute_enumerate", n, limit);
  WordSet set{n, {}};
  std::vector<std::uint8_t> prefix;
  prefix.reserve(2 * static_cast<std::size_t>(n));
  extend(prefix, 0, 0, n, set.words);
  return set;
}

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: negative index");
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  for (std::size_t m = 0; m < static_cast<std::size_t>(n); ++m) {
    BigInt sum = 0;
    for (std::size_t j = 0; j <= m; ++j) sum += c[j] * c[m - j];
    c[m + 1] = sum;
  }
  return c.back();
}

DiffReport compare(const WordSet& expected, std::span<const DyckWord> candidate) {
  DiffReport report;
  std::vector<DyckWord> sorted(candidate.begin(), candidate.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 1; j < sorted.size(); ++j) {
    if (sorted[j] == sorted[j - 1] && (report.duplicates.empty() || report.duplicates.back() != sorted[j])) {
      report.duplicates.push_back(sorted[j]);
    }
  }
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<DyckWord> reference(expected.words);
  std::sort(reference.begin(), reference.end());
  std::set_difference(reference.begin(), reference.end(), sorted.begin(), sorted.end(),
                      std::back_inserter(report.missing));
  std::set_difference(sorted.begin(), sorted.end(), reference.begin(), reference.end(),
                      std::back_inserter(report.unexpected));
  return report;
}

void write_words(std::ostream& os, const WordSet& set) {
  for (const auto& w : set.words) os << w.to_string() << '\n';
}

}  // namespace dyck
