#include "parcount/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace parcount {

namespace {
const Rat kZero(0);

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}
}  // namespace

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::monomial(const Rat& c, int e) {
  std::vector<Rat> v(e + 1, Rat(0));
  v[e] = c;
  return QPoly(std::move(v));
}

const Rat& QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(r));
}

QPoly QPoly::scaled(const Rat& c) const {
  std::vector<Rat> r(c_);
  for (auto& x : r) x *= c;
  return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  PARCOUNT_CHECK(!b.is_zero(), "division by the zero polynomial");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rat> rem = a.c_;
  std::vector<Rat> quot(a.degree() - b.degree() + 1, Rat(0));
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rat c = rem[i];
    if (c == 0) continue;
    Rat f = c / b.c_.back();
    quot[i - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= f * b.c_[j];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::div_exact(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  PARCOUNT_CHECK(r.is_zero(), "inexact polynomial division");
  return q;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.scaled(Rat(1) / a.c_.back());
}

Rat QPoly::eval(const Rat& x) const {
  Rat r(0);
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

QPoly QPoly::compose_power(int d) const {
  if (is_zero()) return QPoly();
  std::vector<Rat> r(static_cast<size_t>(degree()) * d + 1, Rat(0));
  for (int i = 0; i <= degree(); ++i) r[static_cast<size_t>(i) * d] = c_[i];
  return QPoly(std::move(r));
}

bool QPoly::integer_coefficients() const {
  for (const Rat& c : c_)
    if (denominator(c) != 1) return false;
  return true;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  // terms in descending degree
  std::vector<int> degs;
  for (int i = degree(); i >= 0; --i)
    if (c_[i] != 0) degs.push_back(i);
  // lead with the first positive term when the top one is negative
  if (c_[degs.front()] < 0) {
    for (size_t i = 1; i < degs.size(); ++i) {
      if (c_[degs[i]] > 0) {
        int d = degs[i];
        degs.erase(degs.begin() + i);
        degs.insert(degs.begin(), d);
        break;
      }
    }
  }
  std::ostringstream os;
  bool first = true;
  for (int d : degs) {
    Rat c = c_[d];
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    first = false;
    Rat ac = c > 0 ? c : -c;
    if (d == 0 || ac != 1) {
      os << rat_str(ac);
      if (d > 0) os << "*";
    }
    if (d > 0) {
      os << var;
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

}  // namespace parcount
