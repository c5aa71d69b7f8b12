#include "starcover/formats.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "starcover/error.hpp"

namespace starcover {

namespace {

constexpr std::string_view kInstanceMagic = "starcover-instance v1";
constexpr std::string_view kCoverMagic = "starcover-solution v1";

// Non-blank, comment-stripped lines with their 1-based numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = raw.find_last_not_of(" \t\r");
      line = raw.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, "line " + std::to_string(number_) + ": " + what);
  }

  void expect(std::string& line, const std::string& what) {
    if (!next(line)) {
      ++number_;
      fail("unexpected end of input, expected " + what);
    }
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::size_t parse_index(std::string_view token, const LineReader& reader) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    reader.fail("expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::size_t parse_header_count(const std::string& line, std::string_view keyword,
                               const LineReader& reader) {
  std::istringstream fields(line);
  std::string key, count, extra;
  fields >> key >> count;
  if (key != keyword || count.empty() || (fields >> extra)) {
    reader.fail("expected '" + std::string(keyword) + " <count>'");
  }
  return parse_index(count, reader);
}

}  // namespace

MetricInstance read_instance(std::istream& in) {
  LineReader reader(in);
  std::string line;
  reader.expect(line, "header");
  if (line != kInstanceMagic) reader.fail("expected '" + std::string(kInstanceMagic) + "'");
  reader.expect(line, "facilities line");
  const std::size_t nF = parse_header_count(line, "facilities", reader);
  reader.expect(line, "clients line");
  const std::size_t nC = parse_header_count(line, "clients", reader);
  const std::size_t n = nF + nC;

  Matrix<Rational> dist(n, n);
  for (std::size_t row = 0; row < n; ++row) {
    reader.expect(line, "matrix row " + std::to_string(row));
    std::istringstream fields(line);
    std::string token;
    std::size_t col = 0;
    while (fields >> token) {
      if (col == n) reader.fail("too many values in matrix row " + std::to_string(row));
      try {
        dist(row, col) = parse_rational(token);
      } catch (const Error& e) {
        reader.fail(e.what());
      }
      ++col;
    }
    if (col != n) reader.fail("matrix row " + std::to_string(row) + " has " + std::to_string(col) +
                              " values, expected " + std::to_string(n));
  }
  if (reader.next(line)) reader.fail("trailing content after matrix");
  return MetricInstance(nF, nC, std::move(dist));
}

void write_instance(std::ostream& out, const MetricInstance& instance) {
  out << kInstanceMagic << '\n'
      << "facilities " << instance.n_facilities() << '\n'
      << "clients " << instance.n_clients() << '\n';
  const std::size_t n = instance.n_points();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << to_string(instance.point_distance(a, b));
    }
    out << '\n';
  }
}

StarCover read_cover(std::istream& in) {
  LineReader reader(in);
  std::string line;
  reader.expect(line, "header");
  if (line != kCoverMagic) reader.fail("expected '" + std::string(kCoverMagic) + "'");
  StarCover cover;
  while (reader.next(line)) {
    const auto colon = line.find(':');
    if (line.rfind("star ", 0) != 0 || colon == std::string::npos) {
      reader.fail("expected 'star <facility>: <clients>'");
    }
    std::string head = line.substr(5, colon - 5);
    while (!head.empty() && (head.back() == ' ' || head.back() == '\t')) head.pop_back();
    while (!head.empty() && (head.front() == ' ' || head.front() == '\t')) head.erase(0, 1);
    Star star;
    star.facility = parse_index(head, reader);
    std::istringstream fields(line.substr(colon + 1));
    std::string token;
    while (fields >> token) star.clients.push_back(parse_index(token, reader));
    cover.stars.push_back(std::move(star));
  }
  return cover;
}

void write_cover(std::ostream& out, const StarCover& cover) {
  out << kCoverMagic << '\n';
  for (const Star& star : cover.stars) {
    out << "star " << star.facility << ':';
    for (std::size_t j : star.clients) out << ' ' << j;
    out << '\n';
  }
}

MetricInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  return read_instance(in);
}

void save_instance(const std::filesystem::path& path, const MetricInstance& instance) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  write_instance(out, instance);
}

StarCover load_cover(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  return read_cover(in);
}

void save_cover(const std::filesystem::path& path, const StarCover& cover) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  write_cover(out, cover);
}

}  // namespace starcover
