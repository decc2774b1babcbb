#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schubert {

using BigInt = boost::multiprecision::cpp_int;

// How to print the grading variable: q, or t^2 with doubled exponents.
enum class Grading { Q, T };

// Exact polynomial sum_j c_j q^j with arbitrary-precision coefficients.
// Always normalized: no trailing zero coefficients, zero is the empty vector.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);
  QPolynomial(std::initializer_list<long long> coeffs);

  static QPolynomial one() { return QPolynomial{1}; }
  static QPolynomial monomial(int degree, BigInt coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int j) const;

  BigInt value_at_one() const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  std::string to_string(Grading grading = Grading::Q) const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

QPolynomial add(const QPolynomial& p, const QPolynomial& r);
QPolynomial mul(const QPolynomial& p, const QPolynomial& r);
QPolynomial pow(const QPolynomial& p, int exponent);

// [n]_q = 1 + q + ... + q^(n-1). Throws DomainError for n <= 0.
QPolynomial q_integer(int n);

// 1 - q^m, m >= 1
QPolynomial one_minus_q_power(int m);

// c_j == c_{d-j}. Throws DomainError on the zero polynomial.
bool is_palindromic(const QPolynomial& p);

// The exact quotient, or nullopt when den does not divide num over Z[q].
// Throws DomainError when den is zero.
std::optional<QPolynomial> divide_exact(const QPolynomial& num, const QPolynomial& den);

// Multiset {n_1 >= ... >= n_r}, all n_i >= 2, with p = prod [n_i]_q, or
// nullopt when no such factorization exists. Largest candidates are tried
// first. Requires p nonzero with constant term 1 (DomainError otherwise).
std::optional<std::vector<int>> q_integer_factorization(const QPolynomial& p);

// Every such multiset, in decreasing lexicographic order.
std::vector<std::vector<int>> all_q_integer_factorizations(const QPolynomial& p);

// prod [n_i]_q
QPolynomial q_integer_product(const std::vector<int>& ns);

// "(1+q)(1+q+q^2)^3" style rendering of prod [n_i]_q; "1" when empty.
std::string format_q_integer_product(std::vector<int> ns, Grading grading = Grading::Q);

}  // namespace schubert
