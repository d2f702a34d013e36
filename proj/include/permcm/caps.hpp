#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permcm {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Size limits for the exponential searches. Defaults cover the desk-scale
// sweeps; PERMCM_CAPS="vd=8,hochster=16" raises them (unsupported territory).
struct Caps {
  int vd = 7;
  int cm = 7;
  int goren = 7;
  int nearly = 7;
  int ainv = 6;
  int bicm = 6;
  int hilb = 6;
  int covs = 6;
  int shed = 7;
  int gap = 8;
  int survey = 8;
  int hochster_vertices = 14;
  int shelling_facets = 8;
  int quotient_generators = 20;
};

// Overrides `base` with "key=value" pairs separated by commas.
Caps parse_caps(std::string_view spec, Caps base = {});

// Defaults merged with PERMCM_CAPS, read once.
const Caps& caps();

}  // namespace permcm
