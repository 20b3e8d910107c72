#include "skewband/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace skewband {

namespace {
const mpz_class kZero = 0;
}

IntegerPolynomial::IntegerPolynomial(std::vector<mpz_class> coeffs)
    : c_(std::move(coeffs)) {
  trim();
}

IntegerPolynomial IntegerPolynomial::constant(const mpz_class& c) {
  IntegerPolynomial p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

IntegerPolynomial IntegerPolynomial::x() {
  IntegerPolynomial p;
  p.c_ = {0, 1};
  return p;
}

void IntegerPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntegerPolynomial::coeff(std::int64_t i) const {
  if (i < 0 || i >= static_cast<std::int64_t>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

mpz_class IntegerPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::int64_t IntegerPolynomial::low_order() const {
  if (c_.empty())
    throw std::domain_error("low_order of the zero polynomial");
  std::int64_t i = 0;
  while (c_[static_cast<std::size_t>(i)] == 0) ++i;
  return i;
}

IntegerPolynomial IntegerPolynomial::operator-() const {
  IntegerPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntegerPolynomial IntegerPolynomial::operator+(
    const IntegerPolynomial& o) const {
  IntegerPolynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] += o.c_[i];
  }
  r.trim();
  return r;
}

IntegerPolynomial IntegerPolynomial::operator-(
    const IntegerPolynomial& o) const {
  return *this + (-o);
}

IntegerPolynomial IntegerPolynomial::operator*(
    const IntegerPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  IntegerPolynomial r;
  r.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      mpz_addmul(r.c_[i + j].get_mpz_t(), c_[i].get_mpz_t(),
                 o.c_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

std::string IntegerPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::int64_t i = degree(); i >= 0; --i) {
    const mpz_class& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1 || i == 0) out += a.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace skewband
