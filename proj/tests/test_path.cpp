#include <doctest.h>

#include "dyck/oracle.hpp"
#include "dyck/path.hpp"

using namespace dyck;

namespace {

std::vector<std::uint8_t> bits_of(std::string_view s) {
  std::vector<std::uint8_t> b;
  for (char c : s) b.push_back(c == '1' ? 1 : 0);
  return b;
}

// Independent recomputation of the area: ordinate at the end of every up step.
long long area_by_heights(const std::string& s) {
  long long area = 0;
  int y = 0;
  for (char c : s) {
    y += c == '1' ? 1 : -1;
    if (c == '1') area += y;
  }
  return area;
}

}  // namespace

TEST_CASE("max_path builds the pyramid") {
  CHECK(max_path(1).to_string() == "10");
  CHECK(max_path(3).to_string() == "111000");
  CHECK(max_path(4).to_string() == "11110000");
  CHECK_THROWS_AS(max_path(0), std::invalid_argument);
}

TEST_CASE("validate accepts Dyck words and pinpoints violations") {
  CHECK(validate(bits_of("1100")).to_string() == "1100");
  CHECK(validate(bits_of("110100")).to_string() == "110100");
  CHECK(validate(bits_of("")).empty());

  auto err = check(bits_of("0110"));
  REQUIRE(err);
  CHECK(err->kind() == ValidationError::Kind::negative_prefix);
  CHECK(err->index() == 0);

  err = check(bits_of("110"));
  REQUIRE(err);
  CHECK(err->kind() == ValidationError::Kind::odd_length);

  err = check(bits_of("1110"));
  REQUIRE(err);
  CHECK(err->kind() == ValidationError::Kind::unbalanced);

  err = check(bits_of("1001"));
  REQUIRE(err);
  CHECK(err->kind() == ValidationError::Kind::negative_prefix);
  CHECK(err->index() == 2);

  CHECK_THROWS_AS(validate(bits_of("0110")), ValidationError);
  CHECK_THROWS_AS(parse_word("1x"), ValidationError);
  CHECK(parse_word("UUDD") == parse_word("1100"));
}

TEST_CASE("metrics of small words") {
  SUBCASE("11101000") {
    const auto m = metrics(parse_word("11101000"));
    CHECK(m.last_descent_len == 3);
    CHECK(m.last_ascent_len == 1);
    CHECK(m.lowest_valley == 2);
    CHECK(m.peaks == std::vector<std::size_t>{2, 4});
    CHECK(m.valleys == std::vector<Valley>{{3, 2}});
    CHECK(m.area == 9);
  }
  SUBCASE("11110000") {
    const auto m = metrics(parse_word("11110000"));
    CHECK_FALSE(m.lowest_valley.has_value());
    CHECK(m.last_descent_len == 4);
    CHECK(m.last_ascent_len == 4);
    CHECK(m.area == 10);
  }
  SUBCASE("1010") {
    const auto m = metrics(parse_word("1010"));
    CHECK(m.lowest_valley == 0);
    CHECK(m.last_descent_len == 1);
    CHECK(m.area == 2);
  }
  CHECK(heights(parse_word("110100")) == HeightProfile{1, 2, 1, 2, 1, 0});
}

TEST_CASE("is_active and ends_in_p1") {
  CHECK(is_active(parse_word("11011000")));
  CHECK_FALSE(is_active(parse_word("1010")));
  CHECK(is_active(parse_word("10")));

  CHECK(ends_in_p1(parse_word("11100010")));
  CHECK_FALSE(ends_in_p1(parse_word("11101000")));
  CHECK(ends_in_p1(parse_word("10")));
}

TEST_CASE("path properties over every word up to n = 10") {
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    const auto top = max_path(n);
    const long long top_area = metrics(top).area;
    CHECK(top_area == static_cast<long long>(n) * (n + 1) / 2);

    for (const auto& w : brute_enumerate(n).words) {
      const auto m = metrics(w);
      const auto s = w.to_string();
      CHECK(ends_in_p1(w) == (m.last_descent_len == 1));
      CHECK(m.last_descent_len == last_descent_length(w));
      CHECK(m.lowest_valley == lowest_valley(w));
      CHECK(m.area == area_by_heights(s));
      CHECK(m.area >= n);
      CHECK(m.lowest_valley.has_value() == (w != top));
      CHECK(is_max_path(w) == (w == top));
      if (w != top) CHECK(m.area < top_area);
      // Active iff every valley sits above the axis.
      CHECK(is_active(w) == (!m.lowest_valley || *m.lowest_valley > 0));
    }
  }
}

TEST_CASE("validate round-trips oracle words and rejects single bit flips") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : brute_enumerate(n).words) {
      std::vector<std::uint8_t> b(w.bits().begin(), w.bits().end());
      CHECK(validate(b) == w);
      for (std::size_t j = 0; j < b.size(); ++j) {
        b[j] ^= 1;
        CHECK(check(b).has_value());
        b[j] ^= 1;
      }
    }
  }
}
