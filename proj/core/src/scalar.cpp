#include "hominduce/scalar.hpp"

#include "hominduce/errors.hpp"

#include <cctype>

namespace hominduce {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotADifferential: return "NotADifferential";
    case ErrorCode::MissingProduct: return "MissingProduct";
    case ErrorCode::MultipleFreeSlots: return "MultipleFreeSlots";
    case ErrorCode::TypeCheckFailure: return "TypeCheckFailure";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::WSCLost: return "WSCLost";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::TruncationUnsound: return "TruncationUnsound";
    case ErrorCode::EmptyPerturbationSpace: return "EmptyPerturbationSpace";
    case ErrorCode::BreakUnsatisfiable: return "BreakUnsatisfiable";
    case ErrorCode::DefectNonzero: return "DefectNonzero";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::TruncationTooTight: return "TruncationTooTight";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

std::string to_string(const Scalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {
bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}
}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'");
  std::string n(num[0] == '+' ? num.substr(1) : num);
  mpz_class zn(n, 10), zd(std::string(den), 10);
  if (zd == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Scalar q(zn, zd);
  q.canonicalize();
  return q;
}

}  // namespace hominduce
