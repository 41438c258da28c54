#include "dyck/format.hpp"

#include <stdexcept>

#include <json.hpp>

namespace dyck {

Format parse_format(std::string_view name) {
  if (name == "bits") return Format::bits;
  if (name == "updown") return Format::updown;
  if (name == "coords") return Format::coords;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::bits:
      return "bits";
    case Format::updown:
      return "updown";
    case Format::coords:
      return "coords";
  }
  return "?";
}

void render_into(std::span<const std::uint8_t> bits, Format f, std::string& out) {
  switch (f) {
    case Format::bits:
      for (auto b : bits) out.push_back(b == kUp ? '1' : '0');
      break;
    case Format::updown:
      for (auto b : bits) out.push_back(b == kUp ? 'U' : 'D');
      break;
    case Format::coords: {
      auto points = nlohmann::json::array();
      int y = 0;
      points.push_back({0, 0});
      for (std::size_t x = 0; x < bits.size(); ++x) {
        y += bits[x] == kUp ? 1 : -1;
        points.push_back({static_cast<int>(x + 1), y});
      }
      out += points.dump();
      break;
    }
  }
}

}  // namespace dyck
