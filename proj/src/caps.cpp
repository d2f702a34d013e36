#include "permcm/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <map>

namespace permcm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Caps parse_caps(std::string_view spec, Caps base) {
  const std::map<std::string_view, int Caps::*> fields = {
      {"vd", &Caps::vd},
      {"cm", &Caps::cm},
      {"goren", &Caps::goren},
      {"nearly", &Caps::nearly},
      {"ainv", &Caps::ainv},
      {"bicm", &Caps::bicm},
      {"hilb", &Caps::hilb},
      {"covs", &Caps::covs},
      {"shed", &Caps::shed},
      {"gap", &Caps::gap},
      {"survey", &Caps::survey},
      {"hochster", &Caps::hochster_vertices},
      {"shelling", &Caps::shelling_facets},
      {"quotients", &Caps::quotient_generators},
  };
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("cap entry needs key=value");
    const auto key = trim(item.substr(0, eq));
    const auto text = trim(item.substr(eq + 1));
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
      throw std::invalid_argument("bad cap value: " + std::string(item));
    }
    const auto it = fields.find(key);
    if (it == fields.end()) throw std::invalid_argument("unknown cap: " + std::string(key));
    base.*(it->second) = value;
  }
  return base;
}

const Caps& caps() {
  static const Caps value = [] {
    const char* env = std::getenv("PERMCM_CAPS");
    return env ? parse_caps(env) : Caps{};
  }();
  return value;
}

}  // namespace permcm
