#pragma once

#include <cstddef>
#include <string>

namespace starcover {

inline constexpr const char* kBenchHeader =
    "instance,mode,epsilon,lp_value,size,load,size_bound,load_bound,exact_opt,wall_ms,error";

/// Runs every row of a JSON suite config and returns the CSV report (header
/// first, rows in config order). Rows execute on up to `threads` workers.
///
/// Config: {"runs": [{"id": "...", "generator": {...}, "mode": "mlk"|"mssc",
///   "epsilon": ["1/4", 0.5], "k": 3, "T": "1", "T_exact_factor": "3/2",
///   "exact": true}]}
/// generator kinds: {"kind":"gap-mlk","R":2,"M":3}, {"kind":"gap-mssc","N":3,"T":"1"},
///   {"kind":"random","facilities":4,"clients":8,"dim":2,"seed":7},
///   {"kind":"file","path":"inst.scv"}.
/// exact_opt holds the exact optimum (load for mlk, size for mssc) when the
/// search limit permits. Failures land in the error column.
/// Throws Error(Parse) when the config itself is malformed.
std::string run_suite(const std::string& config_json, std::size_t threads = 1);

/// Reads the config from a file; an empty file yields the header alone.
std::string run_suite_file(const std::string& path, std::size_t threads = 1);

}  // namespace starcover
