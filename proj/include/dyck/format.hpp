#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "dyck/path.hpp"

namespace dyck {

/// Line formats for a word: "1100", "UUDD", or the lattice points as a JSON
/// array "[[0,0],[1,1],...]".
enum class Format { bits, updown, coords };

Format parse_format(std::string_view name);
std::string_view format_name(Format f);

/// Appends the rendering of `bits` to `out` (no newline).
void render_into(std::span<const std::uint8_t> bits, Format f, std::string& out);

inline std::string render(const DyckWord& w, Format f) {
  std::string out;
  render_into(w.bits(), f, out);
  return out;
}

}  // namespace dyck
