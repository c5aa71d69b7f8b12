#pragma once

#include <cstddef>
#include <cstdint>

#include "starcover/core_model.hpp"

namespace starcover {

struct GapMlkInstance {
  MetricInstance instance;
  std::size_t k = 0;
};

/// Hard MLkSC family: R groups, each with an M-facility (M collocated clients)
/// and an R-facility (R collocated clients). Facility 2g is group g's
/// M-facility and 2g+1 its R-facility; clients are numbered group by group,
/// M-clients first. k = 2R - 1.
GapMlkInstance gen_gap_mlk(std::size_t R, std::size_t M);

/// Fractional solution of SC-LP(1, 2R - 1) for gen_gap_mlk(R, M).
FractionalSolution gap_mlk_witness(std::size_t R, std::size_t M);

/// Hard MSSC family: facilities i_1..i_N (indices 0..N-1), client J (index 0)
/// and clients j_1..j_N (indices 1..N); shortest-path metric of the edges
/// (i_r, j_r) of length (1 - 1/N)T and (i_r, J) of length T.
MetricInstance gen_gap_mssc(std::size_t N, const Rational& T);

/// All facilities open, j_r fully on i_r, J split 1/N across facilities.
FractionalSolution gap_mssc_witness(std::size_t N, const Rational& T);

/// splitmix64 stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

inline constexpr unsigned kRandomGridBits = 20;

/// Points on the 2^-20 grid of the unit cube drawn from splitmix64(seed),
/// facilities first. Euclidean distances are rounded up to multiples of 2^-20
/// and then closed under shortest paths so the triangle inequality holds
/// exactly.
MetricInstance gen_random(std::size_t n_facilities, std::size_t n_clients, std::size_t dim,
                          std::uint64_t seed);

/// In-place all-pairs shortest-path closure (Floyd-Warshall).
void shortest_path_closure(Matrix<Rational>& dist);

}  // namespace starcover
