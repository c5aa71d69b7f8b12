#pragma once

#include <vector>

#include "starcover/core_model.hpp"

namespace starcover {

/// max over `facilities` of L(i, x); 0 when empty.
inline Rational max_fractional_load(const MetricInstance& instance, const Matrix<Rational>& x,
                                    const std::vector<std::size_t>& facilities) {
  Rational best = 0;
  for (std::size_t i : facilities) {
    Rational load = fractional_load(instance, x, i);
    if (load > best) best = load;
  }
  return best;
}

}  // namespace starcover
