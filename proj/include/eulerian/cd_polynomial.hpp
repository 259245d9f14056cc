#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eulerian/numeric.hpp"
#include "eulerian/subset.hpp"

namespace eulerian {

/// Word over {c, d}; c has degree 1 and d has degree 2.
class CdWord {
 public:
  CdWord() = default;
  /// Throws InvalidArgument on letters other than 'c' and 'd'.
  explicit CdWord(std::string letters);
  static CdWord c_power(int n) { return CdWord(std::string(static_cast<std::size_t>(n), 'c')); }

  const std::string& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  int degree() const noexcept;
  int d_count() const noexcept;

  /// Positions occupied by the d's, scanning left to right: c advances one
  /// position, d covers the next two.
  RankSubset support() const;

  CdWord reversed() const;
  CdWord operator+(const CdWord& rhs) const { return CdWord(letters_ + rhs.letters_, Trusted{}); }

  friend bool operator==(const CdWord&, const CdWord&) = default;
  friend auto operator<=>(const CdWord&, const CdWord&) = default;

 private:
  struct Trusted {};
  CdWord(std::string letters, Trusted) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// All cd-words of degree n in lexicographic order (c < d). There are
/// Fibonacci(n + 1) of them.
std::vector<CdWord> cd_words(int n);

/// Homogeneous integer polynomial in noncommuting c, d. Zero coefficients are
/// never stored.
class CdPolynomial {
 public:
  explicit CdPolynomial(int degree = 0) : degree_(degree) {}
  static CdPolynomial monomial(const CdWord& w, BigInt coefficient = 1);

  int degree() const noexcept { return degree_; }
  const std::map<CdWord, BigInt>& terms() const noexcept { return terms_; }
  BigInt coefficient(const CdWord& w) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds `coefficient * w`; the word must have this polynomial's degree.
  void add_term(const CdWord& w, const BigInt& coefficient);

  CdPolynomial operator+(const CdPolynomial& rhs) const;
  CdPolynomial operator-(const CdPolynomial& rhs) const;
  CdPolynomial operator*(const BigInt& scalar) const;

  /// Reverses every word (the cd-index of the dual poset).
  CdPolynomial reversed() const;
  /// Renders like "2*cc - d"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const CdPolynomial&, const CdPolynomial&) = default;

 private:
  int degree_ = 0;
  std::map<CdWord, BigInt> terms_;
};

/// Concatenation product; degrees add.
CdPolynomial cd_product(const CdPolynomial& lhs, const CdPolynomial& rhs);
CdPolynomial cd_power(const CdPolynomial& base, int exponent);

/// Homogeneous polynomial in noncommuting a, b of degree n, stored densely:
/// entry S is the coefficient of u_S, the word with b exactly at positions S.
struct AbPolynomial {
  int degree = 0;
  std::vector<BigInt> coefficients;

  explicit AbPolynomial(int n);
  /// "aab" style word for index S.
  static std::string word(int n, std::uint64_t s);
  friend bool operator==(const AbPolynomial&, const AbPolynomial&) = default;
};

/// Substitutes c -> a + b and d -> ab + ba.
AbPolynomial expand_cd_to_ab(const CdPolynomial& phi);

}  // namespace eulerian
