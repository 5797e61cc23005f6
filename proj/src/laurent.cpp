#include "affhecke/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace affhecke {

LaurentInt::LaurentInt(long long constant) : LaurentInt(Integer(constant)) {}

LaurentInt::LaurentInt(Integer constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

LaurentInt LaurentInt::monomial(Integer coeff, int exponent) {
  LaurentInt r;
  if (coeff != 0) {
    r.low_ = exponent;
    r.coeffs_.push_back(std::move(coeff));
  }
  return r;
}

LaurentInt LaurentInt::v_plus_vinv() { return v_power(1) + v_power(-1); }

std::size_t LaurentInt::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

Integer LaurentInt::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

void LaurentInt::for_each_term(const std::function<void(int, const Integer&)>& fn) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) fn(low_ + static_cast<int>(i), coeffs_[i]);
}

void LaurentInt::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
}

void LaurentInt::add_scaled(const LaurentInt& other, const Integer& c, int shift) {
  if (other.is_zero() || c == 0) return;
  const int olow = other.low_ + shift;
  const int ohigh = other.high_degree() + shift;
  if (is_zero()) {
    low_ = olow;
    coeffs_.assign(other.coeffs_.size(), Integer(0));
  } else {
    if (olow < low_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - olow), Integer(0));
      low_ = olow;
    }
    if (ohigh > high_degree()) coeffs_.resize(static_cast<std::size_t>(ohigh - low_ + 1), Integer(0));
  }
  const std::size_t off = static_cast<std::size_t>(olow - low_);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    if (c == 1)
      coeffs_[off + i] += other.coeffs_[i];
    else if (c == -1)
      coeffs_[off + i] -= other.coeffs_[i];
    else
      coeffs_[off + i] += c * other.coeffs_[i];
  }
  trim();
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& other) {
  add_scaled(other, 1);
  return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& other) {
  add_scaled(other, -1);
  return *this;
}

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
  LaurentInt r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& other) {
  *this = *this * other;
  return *this;
}

LaurentInt LaurentInt::operator-() const {
  LaurentInt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentInt LaurentInt::shifted(int k) const {
  LaurentInt r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentInt LaurentInt::bar() const {
  LaurentInt r;
  if (is_zero()) return r;
  r.low_ = -high_degree();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

std::pair<int, Integer> LaurentInt::leading() const {
  if (is_zero()) throw Error("zero polynomial");
  return {high_degree(), coeffs_.back()};
}

Rational LaurentInt::specialize(const Rational& v0) const {
  if (v0 == 0) throw Error("specialization at v = 0 is undefined");
  if (is_zero()) return Rational(0);
  // Horner in v from the top, then scale by v0^low.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v0 + Rational(*it);
  Rational scale = 1;
  const Rational base = low_ >= 0 ? v0 : Rational(1) / v0;
  for (int i = 0; i < std::abs(low_); ++i) scale *= base;
  return acc * scale;
}

bool LaurentInt::is_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

bool try_divide(const LaurentInt& a, const LaurentInt& b, LaurentInt& out) {
  if (b.is_zero()) throw Error("division by zero polynomial");
  if (a.is_zero()) {
    out = LaurentInt();
    return true;
  }
  // Both are v^low * (polynomial with nonzero constant term), so ordinary
  // long division from the top decides divisibility.
  std::vector<Integer> rem = a.coeffs_;
  const std::vector<Integer>& d = b.coeffs_;
  if (rem.size() < d.size()) return false;
  std::vector<Integer> quo(rem.size() - d.size() + 1, Integer(0));
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Integer& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    Integer qk, r;
    boost::multiprecision::divide_qr(top, d.back(), qk, r);
    if (r != 0) return false;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= qk * d[j];
    quo[k] = std::move(qk);
  }
  for (const auto& c : rem)
    if (c != 0) return false;
  out.low_ = a.low_ - b.low_;
  out.coeffs_ = std::move(quo);
  out.trim();
  return true;
}

namespace {

void append_term(std::ostringstream& os, bool first, const Integer& c, int k, const char* var) {
  Integer mag = c < 0 ? Integer(-c) : c;
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (k == 0) {
    os << mag;
    return;
  }
  if (mag != 1) os << mag << '*';
  os << var;
  if (k != 1) os << '^' << k;
}

}  // namespace

std::string LaurentInt::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    append_term(os, first, coeffs_[i], low_ + static_cast<int>(i), "v");
    first = false;
  }
  return os.str();
}

std::string LaurentInt::q_str() const {
  if (is_zero()) return "0";
  if (low_ < 0) throw Error("not a polynomial in q: " + str());
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const int k = low_ + static_cast<int>(i);
    if (k % 2 != 0) throw Error("not a polynomial in q: " + str());
    const Integer& c = coeffs_[i];
    Integer mag = c < 0 ? Integer(-c) : c;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << 'q';
      if (k != 2) os << '^' << k / 2;
    }
    first = false;
  }
  return os.str();
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  LaurentInt run() {
    skip_ws();
    if (s_.empty()) fail("empty polynomial");
    LaurentInt result;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      result += parse_term(sign);
      first = false;
    }
    return result;
  }

 private:
  LaurentInt parse_term(int sign) {
    Integer coeff = 1;
    bool have_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = parse_uint();
      have_coeff = true;
    }
    if (pos_ < s_.size() && s_[pos_] == '*') {
      if (!have_coeff) fail("dangling '*'");
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] != 'v') fail("expected 'v' after '*'");
    }
    int exponent = 0;
    if (pos_ < s_.size() && s_[pos_] == 'v') {
      ++pos_;
      exponent = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        int esign = 1;
        if (pos_ < s_.size() && s_[pos_] == '-') {
          esign = -1;
          ++pos_;
        }
        exponent = esign * static_cast<int>(parse_uint());
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    return LaurentInt::monomial(sign * coeff, exponent);
  }

  Integer parse_uint() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("cannot parse Laurent polynomial '" + std::string(s_) + "' at column " +
                std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentInt LaurentInt::parse(std::string_view text) { return TermParser(text).run(); }

std::size_t LaurentInt::hash() const {
  std::size_t h = std::hash<int>{}(low_);
  for (const auto& c : coeffs_) h = h * 1000003u ^ std::hash<long long>{}(static_cast<long long>(c % 1000000007));
  return h;
}

std::ostream& operator<<(std::ostream& os, const LaurentInt& a) { return os << a.str(); }

}  // namespace affhecke
