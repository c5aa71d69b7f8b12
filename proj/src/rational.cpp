#include "starcover/rational.hpp"

#include <cctype>

#include "starcover/error.hpp"

namespace starcover {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    Integer q{std::string(den)};
    if (q == 0) bad(text);
    value = Rational(Integer(std::string(num)), q);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text);
    if (!whole.empty() && !all_digits(whole)) bad(text);
    if (!frac.empty() && !all_digits(frac)) bad(text);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
    Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac));
    value = Rational(w * scale + f, scale);
    value.canonicalize();
  } else {
    if (!all_digits(body)) bad(text);
    value = Rational(Integer(std::string(body)));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidStar: return "InvalidStar";
    case ErrorCode::InvalidCover: return "InvalidCover";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::UnboundedObjective: return "UnboundedObjective";
    case ErrorCode::NoCoverWithinT: return "NoCoverWithinT";
    case ErrorCode::NoCaseApplies: return "NoCaseApplies";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::OrphanFacility: return "OrphanFacility";
    case ErrorCode::EmptyClusterOpening: return "EmptyClusterOpening";
    case ErrorCode::ZeroDemandClient: return "ZeroDemandClient";
    case ErrorCode::UnnormalizedClient: return "UnnormalizedClient";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace starcover
