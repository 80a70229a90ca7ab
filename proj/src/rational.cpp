#include "lagdesk/rational.hpp"

#include <cctype>

namespace lagdesk {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::ChartViolation: return "ChartViolation";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NonIntegralDegree: return "NonIntegralDegree";
    case ErrorCode::CleanViolation: return "CleanViolation";
    case ErrorCode::DegenerateNormalHessian: return "DegenerateNormalHessian";
    case ErrorCode::MissingGrading: return "MissingGrading";
    case ErrorCode::BoundaryNotSquareZero: return "BoundaryNotSquareZero";
    case ErrorCode::TooCoarse: return "TooCoarse";
    case ErrorCode::BadWindow: return "BadWindow";
    case ErrorCode::NotNormalForm: return "NotNormalForm";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::InconsistentComponentData: return "InconsistentComponentData";
    case ErrorCode::UnsupportedRHS: return "UnsupportedRHS";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::BadScenario: return "BadScenario";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

namespace {

bool is_plain_int(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  std::string ns = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string ds = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  require(is_plain_int(ns) && is_plain_int(ds), ErrorCode::BadInput,
          "not a rational literal: '" + s + "'");
  BigInt p(ns), q(ds);
  require(q != 0, ErrorCode::BadInput, "zero denominator: '" + s + "'");
  return Rat(p) / Rat(q);  // division canonicalizes
}

std::string rat_str(const Rat& r) { return r.str(); }

BigInt floor_rat(const Rat& r) {
  BigInt p = numerator(r), q = denominator(r);
  BigInt d = p / q;  // truncates towards zero
  if (p < 0 && d * q != p) d -= 1;
  return d;
}

RatX parse_ratx(const std::string& s) {
  if (s == "-inf") return RatX::neg_inf();
  if (s == "inf" || s == "+inf") return RatX::pos_inf();
  return RatX(parse_rat(s));
}

std::string ratx_str(const RatX& r) {
  if (r.is_neg_inf()) return "-inf";
  if (r.is_pos_inf()) return "inf";
  return rat_str(r.value());
}

}  // namespace lagdesk
