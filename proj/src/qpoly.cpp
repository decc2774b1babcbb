#include "schubert/qpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

namespace {

std::string variable_power(int j, Grading grading) {
  if (grading == Grading::T) return "t^" + std::to_string(2 * j);
  return j == 1 ? "q" : "q^" + std::to_string(j);
}

}  // namespace

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPolynomial::QPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

QPolynomial QPolynomial::monomial(int degree, BigInt coeff) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = std::move(coeff);
  return QPolynomial(std::move(c));
}

void QPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coeff(int j) const {
  if (j < 0 || j > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(j)];
}

BigInt QPolynomial::value_at_one() const {
  BigInt sum = 0;
  for (const BigInt& c : coeffs_) sum += c;
  return sum;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  normalize();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(out));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) { return *this = *this * other; }

std::string QPolynomial::to_string(Grading grading) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int j = 0; j <= degree(); ++j) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (j == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << variable_power(j, grading);
  }
  return out.str();
}

QPolynomial add(const QPolynomial& p, const QPolynomial& r) { return p + r; }
QPolynomial mul(const QPolynomial& p, const QPolynomial& r) { return p * r; }

QPolynomial pow(const QPolynomial& p, int exponent) {
  if (exponent < 0) throw DomainError("negative polynomial exponent");
  QPolynomial out = QPolynomial::one();
  for (int k = 0; k < exponent; ++k) out *= p;
  return out;
}

QPolynomial q_integer(int n) {
  if (n <= 0) throw DomainError("q-integer [" + std::to_string(n) + "] requires n >= 1");
  return QPolynomial(std::vector<BigInt>(static_cast<std::size_t>(n), 1));
}

QPolynomial one_minus_q_power(int m) {
  if (m <= 0) throw DomainError("1 - q^m requires m >= 1");
  std::vector<BigInt> c(static_cast<std::size_t>(m) + 1, 0);
  c.front() = 1;
  c.back() = -1;
  return QPolynomial(std::move(c));
}

bool is_palindromic(const QPolynomial& p) {
  if (p.is_zero()) throw DomainError("palindromicity is undefined for the zero polynomial");
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<long>(c.size() / 2), c.rbegin());
}

std::optional<QPolynomial> divide_exact(const QPolynomial& num, const QPolynomial& den) {
  if (den.is_zero()) throw DomainError("division by the zero polynomial");
  if (num.is_zero()) return QPolynomial{};
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<BigInt> rem = num.coeffs();
  const auto& d = den.coeffs();
  const BigInt& lead = d.back();
  const std::size_t dd = d.size() - 1;
  std::vector<BigInt> quot(rem.size() - dd, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + dd];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    const BigInt factor = top / lead;
    quot[k] = factor;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= factor * d[j];
  }
  for (const BigInt& r : rem)
    if (r != 0) return std::nullopt;
  return QPolynomial(std::move(quot));
}

namespace {

void check_factorizable(const QPolynomial& p) {
  if (p.is_zero() || p.coeff(0) != 1)
    throw DomainError("q-integer factorization requires a nonzero polynomial with constant term 1");
}

// Backtracking over non-increasing divisors [n]_q with n <= cap. With `all`
// set, every factorization is collected; otherwise the first one found is
// left in `stack`.
bool search(const QPolynomial& p, int cap, std::vector<int>& stack, std::vector<std::vector<int>>* all) {
  if (p == QPolynomial::one()) {
    if (all) all->push_back(stack);
    return true;
  }
  const BigInt at_one = p.value_at_one();
  bool any = false;
  for (int n = std::min(cap, p.degree() + 1); n >= 2; --n) {
    if (at_one % n != 0) continue;
    auto quotient = divide_exact(p, q_integer(n));
    if (!quotient) continue;
    stack.push_back(n);
    if (search(*quotient, n, stack, all)) {
      any = true;
      if (!all) return true;
    }
    stack.pop_back();
  }
  return any;
}

}  // namespace

std::optional<std::vector<int>> q_integer_factorization(const QPolynomial& p) {
  check_factorizable(p);
  std::vector<int> stack;
  if (!search(p, p.degree() + 1, stack, nullptr)) return std::nullopt;
  return stack;
}

std::vector<std::vector<int>> all_q_integer_factorizations(const QPolynomial& p) {
  check_factorizable(p);
  std::vector<int> stack;
  std::vector<std::vector<int>> all;
  search(p, p.degree() + 1, stack, &all);
  return all;
}

QPolynomial q_integer_product(const std::vector<int>& ns) {
  QPolynomial out = QPolynomial::one();
  for (int n : ns) out *= q_integer(n);
  return out;
}

std::string format_q_integer_product(std::vector<int> ns, Grading grading) {
  std::map<int, int, std::greater<>> mult;
  for (int n : ns)
    if (n >= 2) ++mult[n];
  if (mult.empty()) return "1";
  std::string out;
  // smallest factor first, matching (1+q)(1+q+q^2)^3
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    out += "(" + q_integer(it->first).to_string(grading) + ")";
    if (it->second > 1) out += "^" + std::to_string(it->second);
  }
  return out;
}

}  // namespace schubert
