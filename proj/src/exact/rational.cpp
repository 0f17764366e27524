#include <utility>

#include "disclab/bigint.hpp"
#include "disclab/error.hpp"

namespace disclab {

std::string to_string(const BigInt& v) { return v.get_str(); }

BigRational::BigRational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

BigRational::BigRational(const BigInt& num) : value_(num) {}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational::BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

std::string BigRational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return to_fraction_string();
}

std::string BigRational::to_fraction_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational operator+(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.value_ + b.value_)); }
BigRational operator-(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.value_ - b.value_)); }
BigRational operator*(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.value_ * b.value_)); }
BigRational operator/(const BigRational& a, const BigRational& b) {
  if (b.value_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  return BigRational(mpq_class(a.value_ / b.value_));
}

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TargetSmallerThanSource: return "TargetSmallerThanSource";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::EntriesOutOfRange: return "EntriesOutOfRange";
    case ErrorKind::NotBinary: return "NotBinary";
    case ErrorKind::NoShatteredSet: return "NoShatteredSet";
    case ErrorKind::NonUnitVector: return "NonUnitVector";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_resource_error(ErrorKind kind) noexcept {
  return kind == ErrorKind::SizeLimit || kind == ErrorKind::SearchSpaceTooLarge ||
         kind == ErrorKind::BudgetExceeded;
}

}  // namespace disclab
