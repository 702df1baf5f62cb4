#include "tidal/laurent.hpp"

#include "tidal/error.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace tidal {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

LaurentPoly::LaurentPoly(int lo, std::vector<Integer> coeffs)
    : lo_(lo), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(int exponent, Integer coeff) {
  return LaurentPoly(exponent, {std::move(coeff)});
}

LaurentPoly LaurentPoly::quantum_two() { return LaurentPoly(-1, {1, 0, 1}); }

void LaurentPoly::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Integer& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  lo_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

Integer LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < lo_ || exponent > hi()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - lo_)];
}

bool LaurentPoly::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Integer& c) { return c >= 0; });
}

bool LaurentPoly::bar_invariant() const { return *this == bar(); }

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  std::vector<Integer> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-hi(), std::move(rev));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

LaurentPoly LaurentPoly::nonpositive_symmetric_part() const {
  LaurentPoly r;
  for (int e = lo_; !is_zero() && e <= std::min(0, hi()); ++e) {
    const Integer& c = coeffs_[static_cast<std::size_t>(e - lo_)];
    if (c == 0) continue;
    r.add_scaled(LaurentPoly::monomial(e, c));
    if (e != 0) r.add_scaled(LaurentPoly::monomial(-e, c));
  }
  return r;
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, int k, const Integer& c) {
  if (other.is_zero() || c == 0) return;
  const int olo = other.lo_ + k;
  const int ohi = other.hi() + k;
  if (is_zero()) {
    lo_ = olo;
    coeffs_.assign(other.coeffs_.size(), 0);
  } else if (olo < lo_ || ohi > hi()) {
    const int nlo = std::min(lo_, olo);
    const int nhi = std::max(hi(), ohi);
    std::vector<Integer> grown(static_cast<std::size_t>(nhi - nlo + 1), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      grown[i + static_cast<std::size_t>(lo_ - nlo)] = std::move(coeffs_[i]);
    coeffs_ = std::move(grown);
    lo_ = nlo;
  }
  const auto offset = static_cast<std::size_t>(olo - lo_);
  if (c == 1) {
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
      coeffs_[offset + i] += other.coeffs_[i];
  } else {
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
      coeffs_[offset + i] += c * other.coeffs_[i];
  }
  normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  add_scaled(rhs);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  add_scaled(rhs, 0, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.lo_ + b.lo_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = hi(); e >= lo_; --e) {
    Integer c = coeffs_[static_cast<std::size_t>(e - lo_)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (c < 0) c = -c;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.to_string();
}

namespace {

struct TermParser {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool at_end() {
    skip_ws();
    return i >= s.size();
  }
  [[noreturn]] void fail() const {
    throw InvalidArgument("cannot parse Laurent polynomial '" + s + "'");
  }
  long long read_int() {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail();
    return std::stoll(s.substr(start, i - start));
  }
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text) {
  TermParser p{text};
  LaurentPoly result;
  bool first = true;
  while (!p.at_end()) {
    int sign = 1;
    if (text[p.i] == '+' || text[p.i] == '-') {
      sign = text[p.i] == '-' ? -1 : 1;
      ++p.i;
      p.skip_ws();
    } else if (!first) {
      p.fail();
    }
    first = false;
    Integer coeff = 1;
    bool have_coeff = false;
    if (p.i < text.size() && std::isdigit(static_cast<unsigned char>(text[p.i]))) {
      coeff = p.read_int();
      have_coeff = true;
    }
    p.skip_ws();
    if (p.i < text.size() && text[p.i] == '*') {
      ++p.i;
      p.skip_ws();
    }
    int exponent = 0;
    if (p.i < text.size() && text[p.i] == 'v') {
      ++p.i;
      exponent = 1;
      if (p.i < text.size() && text[p.i] == '^') {
        ++p.i;
        if (p.i < text.size() && text[p.i] == '(') {
          ++p.i;
          exponent = static_cast<int>(p.read_int());
          if (p.i >= text.size() || text[p.i] != ')') p.fail();
          ++p.i;
        } else {
          exponent = static_cast<int>(p.read_int());
        }
      }
    } else if (!have_coeff) {
      p.fail();
    }
    result.add_scaled(LaurentPoly::monomial(exponent, coeff * sign));
  }
  if (first) p.fail();
  return result;
}

}  // namespace tidal
