#include "goldlab/pairing.hpp"

#include <cmath>

namespace goldlab {

Natural pairEncode(Natural x, Natural y) {
    const Natural w = x + y;
    return w * (w + 1) / 2 + y;
}

std::pair<Natural, Natural> pairDecode(Natural n) {
    // Largest w with w(w+1)/2 <= n; the floating estimate is corrected both ways.
    auto w = static_cast<Natural>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
    while (w * (w + 1) / 2 > n) --w;
    while ((w + 1) * (w + 2) / 2 <= n) ++w;
    const Natural y = n - w * (w + 1) / 2;
    return {w - y, y};
}

}  // namespace goldlab
