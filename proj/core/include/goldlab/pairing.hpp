#pragma once

#include <utility>

#include "goldlab/prefix.hpp"

namespace goldlab {

// Cantor pairing: ⟨x,y⟩ = (x+y)(x+y+1)/2 + y.
Natural pairEncode(Natural x, Natural y);
std::pair<Natural, Natural> pairDecode(Natural n);

}  // namespace goldlab
