#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dyck {

/// Step symbols: 1 is a northeast (up) step, 0 a southeast (down) step.
inline constexpr std::uint8_t kUp = 1;
inline constexpr std::uint8_t kDown = 0;

class ValidationError : public std::invalid_argument {
 public:
  enum class Kind { bad_symbol, odd_length, negative_prefix, unbalanced };

  ValidationError(Kind kind, std::size_t index, const std::string& what)
      : std::invalid_argument(what), kind_(kind), index_(index) {}

  Kind kind() const noexcept { return kind_; }
  /// Index of the offending symbol; for `unbalanced` and `odd_length` it is
  /// the word length.
  std::size_t index() const noexcept { return index_; }

 private:
  Kind kind_;
  std::size_t index_;
};

/// A balanced binary word of length 2n whose prefixes never dip below zero.
/// Only `validate`, `parse_word`, `max_path` and the unchecked factory create
/// one, so every instance satisfies the Dyck invariants.
class DyckWord {
 public:
  /// The empty word (semilength 0).
  DyckWord() = default;

  /// Caller guarantees the invariants; used on hot paths that construct
  /// words known to be valid.
  static DyckWord from_bits_unchecked(std::vector<std::uint8_t> bits) {
    DyckWord w;
    w.bits_ = std::move(bits);
    return w;
  }

  int semilength() const noexcept { return static_cast<int>(bits_.size() / 2); }
  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  std::uint8_t operator[](std::size_t j) const { return bits_[j]; }
  bool is_up(std::size_t j) const { return bits_[j] == kUp; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  /// '1'/'0' rendering in path order.
  std::string to_string() const;

  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  friend std::strong_ordering operator<=>(const DyckWord& a, const DyckWord& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

using HeightProfile = std::vector<int>;

struct Valley {
  std::size_t index;  // index of the down step entering the valley
  int height;

  friend bool operator==(const Valley&, const Valley&) = default;
};

struct PathMetrics {
  std::vector<std::size_t> peaks;  // index of the up step of each "10"
  std::vector<Valley> valleys;
  int last_descent_len = 0;
  int last_ascent_len = 0;
  std::optional<int> lowest_valley;
  long long area = 0;
};

/// The pyramid p_n: n up steps then n down steps. Throws for n < 1.
DyckWord max_path(int n);

/// First violated invariant of `bits`, if any. Accepts the empty word.
std::optional<ValidationError> check(std::span<const std::uint8_t> bits);

/// Returns the word or throws ValidationError naming the first violation.
DyckWord validate(std::span<const std::uint8_t> bits);

/// Parses '1'/'0' text (also accepts 'U'/'D') and validates it.
DyckWord parse_word(std::string_view text);

/// heights[j] is the ordinate after step j.
HeightProfile heights(const DyckWord& w);

/// Single left-to-right pass over the word.
PathMetrics metrics(const DyckWord& w);

int last_descent_length(const DyckWord& w);
std::optional<int> lowest_valley(const DyckWord& w);
bool is_max_path(const DyckWord& w);

/// No valley touches the axis; stripping the first and last step leaves a
/// Dyck word.
bool is_active(const DyckWord& w);

/// The word finishes with a height-1 pyramid.
bool ends_in_p1(const DyckWord& w);

}  // namespace dyck
