#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "starcover/core_model.hpp"

namespace starcover {

/// Client -> facility map; nullopt for clients outside the rounded scope.
using IntegralAssignment = std::vector<std::optional<std::size_t>>;

/// Rounds x over the clients in `clients` onto `opened` facilities. Every
/// rounded client ends on a facility in its x-support, and each opened i
/// gets integral load at most L(i, x) + max{ d(i, j) : x_ij > 0 }, where
/// L(i, x) only counts clients in scope.
/// Throws Error(UnnormalizedClient) if a scoped client's column restricted to
/// `opened` does not sum to 1, and Error(InvalidArgument) if a scoped client
/// has mass outside `opened`.
IntegralAssignment assignment_round(const MetricInstance& instance,
                                    const std::vector<std::size_t>& opened,
                                    const Matrix<Rational>& x,
                                    const std::vector<std::size_t>& clients);

/// Same, over every client.
IntegralAssignment assignment_round(const MetricInstance& instance,
                                    const std::vector<std::size_t>& opened,
                                    const Matrix<Rational>& x);

}  // namespace starcover
