#include "starcover/instance_gen.hpp"

#include <optional>
#include <vector>

#include "starcover/error.hpp"

namespace starcover {

namespace {

std::uint64_t isqrt_ceil(std::uint64_t v) {
  Integer root;
  Integer value(static_cast<unsigned long>(v));
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  if (root * root < value) root += 1;
  return root.get_ui();
}

}  // namespace

GapMlkInstance gen_gap_mlk(std::size_t R, std::size_t M) {
  if (R < 1 || M < 1) throw Error(ErrorCode::InvalidArgument, "gap-mlk needs R >= 1 and M >= 1");
  const std::size_t nF = 2 * R;
  const std::size_t nC = (M + R) * R;

  // Every point is hosted by a facility; distances are host distances.
  std::vector<std::size_t> host(nF + nC);
  for (std::size_t f = 0; f < nF; ++f) host[f] = f;
  std::size_t c = nF;
  for (std::size_t g = 0; g < R; ++g) {
    for (std::size_t t = 0; t < M; ++t) host[c++] = 2 * g;
    for (std::size_t t = 0; t < R; ++t) host[c++] = 2 * g + 1;
  }
  auto facility_dist = [&](std::size_t a, std::size_t b) -> Rational {
    if (a == b) return 0;
    if (a / 2 == b / 2) return 1;
    return Rational(static_cast<unsigned long>(R));
  };
  Matrix<Rational> dist(nF + nC, nF + nC);
  for (std::size_t p = 0; p < nF + nC; ++p) {
    for (std::size_t q = 0; q < nF + nC; ++q) dist(p, q) = facility_dist(host[p], host[q]);
  }
  return {MetricInstance(nF, nC, std::move(dist)), 2 * R - 1};
}

FractionalSolution gap_mlk_witness(std::size_t R, std::size_t M) {
  if (R < 1 || M < 1) throw Error(ErrorCode::InvalidArgument, "gap-mlk needs R >= 1 and M >= 1");
  FractionalSolution sol(2 * R, (M + R) * R);
  const Rational share(1, static_cast<unsigned long>(R));
  std::size_t c = 0;
  for (std::size_t g = 0; g < R; ++g) {
    const std::size_t m_fac = 2 * g;
    const std::size_t r_fac = 2 * g + 1;
    sol.y[m_fac] = 1;
    sol.y[r_fac] = 1 - share;
    for (std::size_t t = 0; t < M; ++t) sol.x(m_fac, c++) = 1;
    for (std::size_t t = 0; t < R; ++t) {
      sol.x(r_fac, c) = 1 - share;
      sol.x(m_fac, c) = share;
      ++c;
    }
  }
  return sol;
}

void shortest_path_closure(Matrix<Rational>& dist) {
  const std::size_t n = dist.rows();
  for (std::size_t via = 0; via < n; ++via) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Rational through = dist(a, via) + dist(via, b);
        if (through < dist(a, b)) dist(a, b) = std::move(through);
      }
    }
  }
}

MetricInstance gen_gap_mssc(std::size_t N, const Rational& T) {
  if (N < 2) throw Error(ErrorCode::InvalidArgument, "gap-mssc needs N >= 2");
  if (T <= 0) throw Error(ErrorCode::InvalidArgument, "gap-mssc needs T > 0");
  const std::size_t nF = N;
  const std::size_t nC = N + 1;
  const std::size_t n = nF + nC;
  const std::size_t J = nF;  // point index of client J

  // Unreached pairs start at the sum of all edge lengths, which exceeds any path.
  const Rational short_edge = (1 - Rational(1, static_cast<unsigned long>(N))) * T;
  const Rational unreachable = (short_edge + T) * static_cast<unsigned long>(N) + 1;
  Matrix<Rational> dist(n, n, unreachable);
  for (std::size_t p = 0; p < n; ++p) dist(p, p) = 0;
  for (std::size_t r = 0; r < N; ++r) {
    const std::size_t jr = nF + 1 + r;
    dist(r, jr) = dist(jr, r) = short_edge;
    dist(r, J) = dist(J, r) = T;
  }
  shortest_path_closure(dist);
  return MetricInstance(nF, nC, std::move(dist));
}

FractionalSolution gap_mssc_witness(std::size_t N, const Rational& T) {
  if (N < 2) throw Error(ErrorCode::InvalidArgument, "gap-mssc needs N >= 2");
  (void)T;
  FractionalSolution sol(N, N + 1);
  const Rational share(1, static_cast<unsigned long>(N));
  for (std::size_t r = 0; r < N; ++r) {
    sol.y[r] = 1;
    sol.x(r, 1 + r) = 1;
    sol.x(r, 0) = share;
  }
  return sol;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

MetricInstance gen_random(std::size_t n_facilities, std::size_t n_clients, std::size_t dim,
                          std::uint64_t seed) {
  if (n_facilities < 1 || n_clients < 1 || dim < 1) {
    throw Error(ErrorCode::InvalidArgument, "gen_random needs positive dimensions");
  }
  if (dim > 4096) throw Error(ErrorCode::InvalidArgument, "dimension too large");
  const std::size_t n = n_facilities + n_clients;
  SplitMix64 rng(seed);
  std::vector<std::vector<std::uint64_t>> points(n, std::vector<std::uint64_t>(dim));
  for (auto& p : points) {
    for (auto& coord : p) coord = rng.next() >> (64 - kRandomGridBits);
  }

  Rational unit;
  mpq_div_2exp(unit.get_mpq_t(), Rational(1).get_mpq_t(), kRandomGridBits);
  Matrix<Rational> dist(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::uint64_t sq = 0;
      for (std::size_t t = 0; t < dim; ++t) {
        std::uint64_t diff = points[a][t] > points[b][t] ? points[a][t] - points[b][t]
                                                          : points[b][t] - points[a][t];
        sq += diff * diff;
      }
      Rational d = unit * static_cast<unsigned long>(isqrt_ceil(sq));
      dist(a, b) = d;
      dist(b, a) = d;
    }
  }
  shortest_path_closure(dist);
  return MetricInstance(n_facilities, n_clients, std::move(dist));
}

}  // namespace starcover
