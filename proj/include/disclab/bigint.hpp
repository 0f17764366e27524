#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace disclab {

using BigInt = mpz_class;

inline BigInt make_bigint(std::int64_t v) {
  BigInt out;
  mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
  return out;
}

std::string to_string(const BigInt& v);

inline int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
inline int cmpabs(const BigInt& a, unsigned long b) { return mpz_cmpabs_ui(a.get_mpz_t(), b); }

// Exact rational in canonical form: gcd(|num|, den) = 1, den > 0.
class BigRational {
 public:
  BigRational() = default;
  BigRational(const BigInt& num);  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den);
  BigRational(long num, long den);

  BigInt num() const { return BigInt(value_.get_num()); }
  BigInt den() const { return BigInt(value_.get_den()); }

  double to_double() const { return value_.get_d(); }

  // "p" when the denominator is 1, "p/q" otherwise.
  std::string to_string() const;
  // Always "p/q".
  std::string to_fraction_string() const;

  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  friend BigRational operator/(const BigRational& a, const BigRational& b);

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit BigRational(mpq_class v);
  mpq_class value_{0};
};

}  // namespace disclab
