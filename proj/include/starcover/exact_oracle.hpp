#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "starcover/core_model.hpp"

namespace starcover {

/// Searches are refused when |F|^|C| exceeds this.
inline constexpr std::uint64_t kExactSearchLimit = 10'000'000;

/// True when |F|^|C| <= kExactSearchLimit.
bool exact_search_allowed(std::size_t n_facilities, std::size_t n_clients);

struct ExactMlkResult {
  StarCover cover;
  Rational opt_load;
};

/// Minimum-load cover with at most k stars, by branch and bound over
/// client -> facility maps. Among optima the lexicographically smallest
/// client -> facility map wins.
/// Throws Error(TooLarge) past the search limit, Error(InvalidArgument) if k = 0.
ExactMlkResult exact_mlk(const MetricInstance& instance, std::size_t k);

struct ExactMsscResult {
  StarCover cover;
  std::size_t opt_size = 0;
};

/// Fewest stars with every star load <= T; nullopt when no such cover exists.
/// Ties go to the lexicographically smallest client -> facility map.
/// Throws Error(TooLarge) past the search limit.
std::optional<ExactMsscResult> exact_mssc(const MetricInstance& instance, const Rational& T);

}  // namespace starcover
