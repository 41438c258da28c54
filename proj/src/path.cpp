#include "dyck/path.hpp"

#include <algorithm>

namespace dyck {

std::string DyckWord::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t j = 0; j < bits_.size(); ++j) {
    if (bits_[j] == kUp) s[j] = '1';
  }
  return s;
}

DyckWord max_path(int n) {
  if (n < 1) throw std::invalid_argument("max_path: semilength must be >= 1");
  std::vector<std::uint8_t> bits(2 * static_cast<std::size_t>(n), kDown);
  std::fill_n(bits.begin(), n, kUp);
  return DyckWord::from_bits_unchecked(std::move(bits));
}

std::optional<ValidationError> check(std::span<const std::uint8_t> bits) {
  using Kind = ValidationError::Kind;
  long long height = 0;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] == kUp) {
      ++height;
    } else if (bits[j] == kDown) {
      if (--height < 0) {
        return ValidationError(Kind::negative_prefix, j,
                               "negative height at prefix index " + std::to_string(j));
      }
    } else {
      return ValidationError(Kind::bad_symbol, j,
                             "invalid step symbol at index " + std::to_string(j));
    }
  }
  if (bits.size() % 2 != 0) {
    return ValidationError(Kind::odd_length, bits.size(),
                           "odd word length " + std::to_string(bits.size()));
  }
  if (height != 0) {
    return ValidationError(Kind::unbalanced, bits.size(),
                           "unbalanced word: final height " + std::to_string(height));
  }
  return std::nullopt;
}

DyckWord validate(std::span<const std::uint8_t> bits) {
  if (auto err = check(bits)) throw *err;
  return DyckWord::from_bits_unchecked({bits.begin(), bits.end()});
}

DyckWord parse_word(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t j = 0; j < text.size(); ++j) {
    switch (text[j]) {
      case '1':
      case 'U':
        bits.push_back(kUp);
        break;
      case '0':
      case 'D':
        bits.push_back(kDown);
        break;
      default:
        throw ValidationError(ValidationError::Kind::bad_symbol, j,
                              "invalid step character at index " + std::to_string(j));
    }
  }
  return validate(bits);
}

HeightProfile heights(const DyckWord& w) {
  HeightProfile h(w.size());
  int y = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    y += w.is_up(j) ? 1 : -1;
    h[j] = y;
  }
  return h;
}

PathMetrics metrics(const DyckWord& w) {
  PathMetrics m;
  int y = 0;
  int down_run = 0;
  int up_run = 0;
  const std::size_t len = w.size();
  for (std::size_t j = 0; j < len; ++j) {
    if (w.is_up(j)) {
      ++y;
      m.area += y;
      // An up step after a down step closes a run of ascents and opens a new one.
      if (down_run > 0) up_run = 0;
      ++up_run;
      down_run = 0;
      if (j + 1 < len && !w.is_up(j + 1)) m.peaks.push_back(j);
    } else {
      --y;
      ++down_run;
      if (j + 1 < len && w.is_up(j + 1)) {
        m.valleys.push_back({j, y});
        if (!m.lowest_valley || y < *m.lowest_valley) m.lowest_valley = y;
      }
    }
  }
  m.last_descent_len = down_run;
  m.last_ascent_len = up_run;
  return m;
}

int last_descent_length(const DyckWord& w) {
  int k = 0;
  for (std::size_t j = w.size(); j > 0 && !w.is_up(j - 1); --j) ++k;
  return k;
}

std::optional<int> lowest_valley(const DyckWord& w) {
  std::optional<int> low;
  int y = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    y += w.is_up(j) ? 1 : -1;
    if (!w.is_up(j) && j + 1 < w.size() && w.is_up(j + 1)) {
      if (!low || y < *low) low = y;
    }
  }
  return low;
}

bool is_max_path(const DyckWord& w) {
  const std::size_t n = w.size() / 2;
  if (n == 0) return false;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w.is_up(j) != (j < n)) return false;
  }
  return true;
}

bool is_active(const DyckWord& w) {
  // Interior returns to the axis are exactly the height-0 valleys.
  int y = 0;
  for (std::size_t j = 0; j + 1 < w.size(); ++j) {
    y += w.is_up(j) ? 1 : -1;
    if (y == 0) return false;
  }
  return true;
}

bool ends_in_p1(const DyckWord& w) { return last_descent_length(w) == 1; }

}  // namespace dyck
