#pragma once

#include <filesystem>
#include <iosfwd>

#include "starcover/core_model.hpp"

namespace starcover {

/// `.scv`: `starcover-instance v1`, `facilities <n>`, `clients <n>`, then
/// n_facilities + n_clients rows of decimals or `p/q`; `#` starts a comment.
/// Throws Error(Parse) with the offending line number.
MetricInstance read_instance(std::istream& in);
void write_instance(std::ostream& out, const MetricInstance& instance);

/// `.scs`: `starcover-solution v1`, then `star <facility>: <clients...>` lines.
StarCover read_cover(std::istream& in);
void write_cover(std::ostream& out, const StarCover& cover);

MetricInstance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const MetricInstance& instance);
StarCover load_cover(const std::filesystem::path& path);
void save_cover(const std::filesystem::path& path, const StarCover& cover);

}  // namespace starcover
