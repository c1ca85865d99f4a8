#include "logconcave/scalar.hpp"

#include "logconcave/error.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace logconcave {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Scalar parse_decimal(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  std::string_view whole = body.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{}
                                                        : body.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
      (!frac.empty() && !all_digits(frac)))
    fail(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");

  mpz_class numerator(whole.empty() ? std::string("0") : std::string(whole), 10);
  mpz_class denominator = 1;
  if (!frac.empty()) {
    mpz_class f(std::string(frac), 10);
    mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac.size());
    numerator = numerator * denominator + f;
  }
  Scalar value(numerator, denominator);
  value.canonicalize();
  return negative ? Scalar(-value) : value;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) fail(ErrorCode::Parse, "empty rational");

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);

  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+'))
    num_digits.remove_prefix(1);
  if (!all_digits(num_digits) || !all_digits(den))
    fail(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");

  std::string num_text(num);
  if (num_text.front() == '+') num_text.erase(0, 1);
  mpz_class n(num_text, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Scalar value(n, d);
  value.canonicalize();
  return value;
}

std::string format_scalar(const Scalar& value) { return value.get_str(10); }

double to_double(const Scalar& value) { return value.get_d(); }

Scalar from_double(double value) {
  if (!std::isfinite(value)) fail(ErrorCode::InvalidArgument, "non-finite double");
  Scalar q(value);
  q.canonicalize();
  return q;
}

int sign(const Scalar& value) { return sgn(value); }

Scalar abs(const Scalar& value) { return value < 0 ? Scalar(-value) : value; }

Scalar ratio(long n, long d) {
  if (d == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotTransversal: return "NotTransversal";
    case ErrorCode::NoCrossings: return "NoCrossings";
    case ErrorCode::ZeroArea: return "ZeroArea";
    case ErrorCode::PerturbationFailed: return "PerturbationFailed";
    case ErrorCode::NoValidStrip: return "NoValidStrip";
    case ErrorCode::NotAParallelogram: return "NotAParallelogram";
    case ErrorCode::UnclassifiedConfiguration: return "UnclassifiedConfiguration";
    case ErrorCode::NotEdgeCase: return "NotEdgeCase";
    case ErrorCode::NotCornerCase: return "NotCornerCase";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::OutsideSector: return "OutsideSector";
    case ErrorCode::CurvatureViolated: return "CurvatureViolated";
    case ErrorCode::NotConvexProfile: return "NotConvexProfile";
    case ErrorCode::NoViolationFound: return "NoViolationFound";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace logconcave
