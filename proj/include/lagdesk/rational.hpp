#pragma once
#include <boost/multiprecision/gmp.hpp>
#include <compare>
#include <optional>
#include <string>

#include "lagdesk/error.hpp"

namespace lagdesk {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Parses "p", "-p", "p/q". Canonicalizes; rejects q = 0 and junk.
Rat parse_rat(const std::string& s);

// Canonical text form "p/q" (or "p" when q = 1); inverse of parse_rat.
std::string rat_str(const Rat& r);

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }
// Half-integers: denominators 1 or 2; the only fractional values the index theory produces.
inline bool is_half_integer(const Rat& r) { return denominator(r) == 1 || denominator(r) == 2; }

// Rounds towards -infinity; exact for the integral case.
BigInt floor_rat(const Rat& r);

inline int sign(const Rat& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

// Rational extended with the two infinities: window endpoints and bar endpoints.
class RatX {
public:
  enum class Kind { NegInf, Finite, PosInf };

  RatX() : kind_(Kind::Finite), v_(0) {}
  RatX(const Rat& v) : kind_(Kind::Finite), v_(v) {}  // NOLINT: implicit by design
  static RatX neg_inf() { return RatX(Kind::NegInf); }
  static RatX pos_inf() { return RatX(Kind::PosInf); }

  bool finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  const Rat& value() const {
    require(finite(), ErrorCode::BadInput, "RatX: value() on infinite endpoint");
    return v_;
  }

  friend bool operator==(const RatX& a, const RatX& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.v_ == b.v_;
  }
  friend bool operator<(const RatX& a, const RatX& b) {
    if (a.kind_ == b.kind_) return a.kind_ == Kind::Finite && a.v_ < b.v_;
    if (a.kind_ == Kind::NegInf) return true;
    if (b.kind_ == Kind::PosInf) return true;
    return false;
  }
  friend bool operator<=(const RatX& a, const RatX& b) { return a == b || a < b; }
  friend bool operator>(const RatX& a, const RatX& b) { return b < a; }
  friend bool operator>=(const RatX& a, const RatX& b) { return b <= a; }
  friend bool operator!=(const RatX& a, const RatX& b) { return !(a == b); }

  // Addition with a finite rational only (translation of endpoints).
  RatX operator+(const Rat& d) const { return finite() ? RatX(v_ + d) : *this; }
  RatX operator-(const Rat& d) const { return finite() ? RatX(v_ - d) : *this; }

private:
  explicit RatX(Kind k) : kind_(k), v_(0) {}
  Kind kind_;
  Rat v_;
};

// Parses "p/q", "-inf", "inf", "+inf".
RatX parse_ratx(const std::string& s);
std::string ratx_str(const RatX& r);

}  // namespace lagdesk
