#include "ringspec/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ringspec {

IntPolynomial::IntPolynomial() : coeffs_{mpz_class(0)} {}

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending)
    : coeffs_(std::move(ascending)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
  return IntPolynomial(std::vector<mpz_class>{c});
}

IntPolynomial IntPolynomial::monomial(unsigned power, const mpz_class& c) {
  std::vector<mpz_class> v(power + 1, mpz_class(0));
  v[power] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_decimal_strings(
    const std::vector<std::string>& coeffs) {
  std::vector<mpz_class> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) {
    mpz_class c;
    if (s.empty() || c.set_str(s, 10) != 0) {
      throw std::invalid_argument("IntPolynomial: bad coefficient '" + s + "'");
    }
    v.push_back(std::move(c));
  }
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

mpz_class IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::substitute_square() const {
  std::vector<mpz_class> out(2 * coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
  return IntPolynomial(std::move(out));
}

std::optional<IntPolynomial> IntPolynomial::halve_exponents() const {
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size() / 2 + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i % 2 == 0) {
      out.push_back(coeffs_[i]);
    } else if (coeffs_[i] != 0) {
      return std::nullopt;
    }
  }
  return IntPolynomial(std::move(out));
}

double IntPolynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->get_d();
  }
  return acc;
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::vector<double> IntPolynomial::to_doubles() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_d());
  return out;
}

std::vector<std::string> IntPolynomial::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str(10));
  return out;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && k > 0;
    if (!unit) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << '*';
      os << 'x';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

IntPolynomial poly_shift_const(const IntPolynomial& p, const mpz_class& c) {
  return p + IntPolynomial::constant(c);
}

double eval_real(const IntPolynomial& p, double x) { return p.eval(x); }

mpz_class eval_exact(const IntPolynomial& p, const mpz_class& x) { return p.eval(x); }

std::size_t max_coefficient_bits(const IntPolynomial& p) {
  std::size_t bits = 0;
  for (const auto& c : p.coefficients()) {
    if (c != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  }
  return bits;
}

}  // namespace ringspec
