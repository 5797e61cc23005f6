#include "affhecke/affine_weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace affhecke {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t residue(std::int64_t a, std::int64_t n) {  // in [0, n)
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void check_rank(int n) {
  if (n < 2 || n > kMaxRank)
    throw Error("rank n=" + std::to_string(n) + " outside supported range [2, " +
                std::to_string(kMaxRank) + "]");
}

}  // namespace

std::vector<int> mask_members(GenMask m, int n) {
  std::vector<int> out;
  for (int k = 0; k < n; ++k)
    if (has_gen(m, k)) out.push_back(k);
  return out;
}

void AffPerm::finish() {
  len_ = 0;
  std::int64_t shift = 0;
  for (int i = 0; i < n_; ++i) {
    shift += w_[static_cast<std::size_t>(i)] - (i + 1);
    for (int j = i + 1; j < n_; ++j) {
      const std::int64_t d = floor_div(w_[static_cast<std::size_t>(j)] - w_[static_cast<std::size_t>(i)], n_);
      len_ += static_cast<int>(d < 0 ? -d : d);
    }
  }
  if (shift % n_ != 0) throw Error("window sum not divisible by n");
  om_ = static_cast<int>(shift / n_);
}

AffPerm AffPerm::from_window(int n, const std::vector<std::int64_t>& window) {
  check_rank(n);
  if (static_cast<int>(window.size()) != n)
    throw Error("window has " + std::to_string(window.size()) + " entries, expected " + std::to_string(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (auto x : window) {
    auto r = static_cast<std::size_t>(residue(x, n));
    if (seen[r]) throw Error("not a bijection");
    seen[r] = true;
  }
  AffPerm p;
  p.n_ = n;
  std::copy(window.begin(), window.end(), p.w_.begin());
  p.finish();
  return p;
}

AffPerm AffPerm::identity(int n) { return omega(n, 0); }

AffPerm AffPerm::omega(int n, int power) {
  check_rank(n);
  AffPerm p;
  p.n_ = n;
  for (int i = 0; i < n; ++i) p.w_[static_cast<std::size_t>(i)] = i + 1 + power;
  p.finish();
  return p;
}

AffPerm AffPerm::generator(int n, int k) {
  check_rank(n);
  if (k < 0 || k >= n) throw Error("generator index s" + std::to_string(k) + " out of range");
  return identity(n).right_mul_gen(k);
}

std::vector<std::int64_t> AffPerm::window() const {
  return {w_.begin(), w_.begin() + n_};
}

std::int64_t AffPerm::operator()(std::int64_t i) const {
  const std::int64_t r = residue(i - 1, n_);  // position index 0..n-1
  return w_[static_cast<std::size_t>(r)] + (i - 1 - r);
}

bool AffPerm::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (w_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

bool AffPerm::in_finite_part() const {
  for (int i = 0; i < n_; ++i)
    if (w_[static_cast<std::size_t>(i)] < 1 || w_[static_cast<std::size_t>(i)] > n_) return false;
  return true;
}

AffPerm AffPerm::inverse() const {
  AffPerm p;
  p.n_ = n_;
  for (int i = 0; i < n_; ++i) {
    const std::int64_t j = w_[static_cast<std::size_t>(i)];
    const std::int64_t r = residue(j - 1, n_);
    p.w_[static_cast<std::size_t>(r)] = (i + 1) - (j - 1 - r);
  }
  p.len_ = len_;
  p.om_ = -om_;
  return p;
}

AffPerm AffPerm::right_mul_gen(int k) const {
  AffPerm p = *this;
  if (k == 0) {
    const std::int64_t first = w_[0];
    const std::int64_t last = w_[static_cast<std::size_t>(n_ - 1)];
    p.w_[0] = last - n_;
    p.w_[static_cast<std::size_t>(n_ - 1)] = first + n_;
  } else {
    std::swap(p.w_[static_cast<std::size_t>(k - 1)], p.w_[static_cast<std::size_t>(k)]);
  }
  p.len_ = len_ + (is_right_descent(k) ? -1 : 1);
  return p;
}

AffPerm AffPerm::left_mul_gen(int k) const {
  AffPerm p = *this;
  bool descent = false;
  for (int i = 0; i < n_; ++i) {
    std::int64_t& x = p.w_[static_cast<std::size_t>(i)];
    const std::int64_t r = residue(x, n_);
    if (r == k)
      x += 1;
    else if (r == residue(k + 1, n_))
      x -= 1;
  }
  descent = is_left_descent(k);
  p.len_ = len_ + (descent ? -1 : 1);
  return p;
}

AffPerm AffPerm::conjugate_by_omega(int m) const {
  AffPerm p;
  p.n_ = n_;
  for (int i = 1; i <= n_; ++i) p.w_[static_cast<std::size_t>(i - 1)] = (*this)(i - m) + m;
  p.len_ = len_;
  p.om_ = om_;
  return p;
}

bool AffPerm::is_right_descent(int k) const {
  if (k == 0) return w_[static_cast<std::size_t>(n_ - 1)] - n_ > w_[0];
  return w_[static_cast<std::size_t>(k - 1)] > w_[static_cast<std::size_t>(k)];
}

GenMask AffPerm::right_descents() const {
  GenMask m = 0;
  for (int k = 0; k < n_; ++k)
    if (is_right_descent(k)) m |= gen_bit(k);
  return m;
}

std::string AffPerm::window_str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << w_[static_cast<std::size_t>(i)];
  os << ']';
  return os.str();
}

std::string AffPerm::word_str() const {
  const CanonicalWord cw = canonical_word(*this);
  std::vector<std::string> parts;
  if (cw.omega_power == 1)
    parts.emplace_back("om");
  else if (cw.omega_power != 0)
    parts.push_back("om^" + std::to_string(cw.omega_power));
  for (int k : cw.word) parts.push_back("s" + std::to_string(k));
  if (parts.empty()) return "e";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "." + parts[i];
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t pos = 0;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    pos = 1;
  }
  if (pos >= s.size()) throw Error("cannot parse element '" + std::string(whole) + "': expected integer");
  std::int64_t v = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw Error("cannot parse element '" + std::string(whole) + "': bad integer '" + std::string(s) + "'");
    v = v * 10 + (s[pos] - '0');
  }
  return neg ? -v : v;
}

}  // namespace

AffPerm AffPerm::parse(int n, std::string_view text) {
  check_rank(n);
  const std::string_view s = trim(text);
  if (s.empty()) throw Error("cannot parse empty element");
  if (s.front() == '[') {
    if (s.back() != ']') throw Error("cannot parse element '" + std::string(s) + "': missing ']'");
    std::vector<std::int64_t> win;
    std::string_view body = s.substr(1, s.size() - 2);
    while (true) {
      const auto comma = body.find(',');
      win.push_back(parse_int(body.substr(0, comma), s));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return from_window(n, win);
  }
  AffPerm w = identity(n);
  std::string_view rest = s;
  while (true) {
    const auto dot = rest.find('.');
    const std::string_view tok = trim(rest.substr(0, dot));
    if (tok == "e") {
    } else if (tok == "om") {
      w = compose(w, omega(n));
    } else if (tok.substr(0, 3) == "om^") {
      w = compose(w, omega(n, static_cast<int>(parse_int(tok.substr(3), s))));
    } else if (tok.size() >= 2 && tok[0] == 's') {
      const auto k = parse_int(tok.substr(1), s);
      if (k < 0 || k >= n) throw Error("cannot parse element '" + std::string(s) + "': generator out of range");
      w = w.right_mul_gen(static_cast<int>(k));
    } else {
      throw Error("cannot parse element '" + std::string(s) + "': unknown token '" + std::string(tok) + "'");
    }
    if (dot == std::string_view::npos) break;
    rest.remove_prefix(dot + 1);
  }
  return w;
}

std::size_t AffPerm::hash() const {
  std::size_t h = static_cast<std::size_t>(n_);
  for (int i = 0; i < n_; ++i) h = h * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(w_[static_cast<std::size_t>(i)]);
  return h ^ (h >> 29);
}

AffPerm compose(const AffPerm& a, const AffPerm& b) {
  if (a.rank() != b.rank()) throw Error("rank mismatch in compose");
  const int n = a.rank();
  std::vector<std::int64_t> win(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) win[static_cast<std::size_t>(i - 1)] = a(b(i));
  return AffPerm::from_window(n, win);
}

AffPerm compose(std::initializer_list<AffPerm> factors) {
  if (factors.size() == 0) throw Error("empty product");
  auto it = factors.begin();
  AffPerm r = *it++;
  for (; it != factors.end(); ++it) r = compose(r, *it);
  return r;
}

CanonicalWord canonical_word(const AffPerm& w) {
  CanonicalWord cw;
  AffPerm x = w;
  while (x.length() > 0) {
    const GenMask d = x.right_descents();
    int k = 0;
    while (!has_gen(d, k)) ++k;
    cw.word.push_back(k);
    x = x.right_mul_gen(k);
  }
  std::reverse(cw.word.begin(), cw.word.end());
  cw.omega_power = static_cast<int>(x(1) - 1);
  return cw;
}

AffPerm from_word(int n, const CanonicalWord& cw) {
  AffPerm w = AffPerm::omega(n, cw.omega_power);
  for (int k : cw.word) w = w.right_mul_gen(k);
  return w;
}

bool BruhatOrder::leq(const AffPerm& y, const AffPerm& w) {
  if (y.rank() != w.rank()) throw Error("rank mismatch in Bruhat comparison");
  std::lock_guard lock(mu_);
  return leq_locked(y, w);
}

std::size_t BruhatOrder::cache_size() const {
  std::lock_guard lock(mu_);
  return memo_.size();
}

bool BruhatOrder::leq_locked(const AffPerm& y, const AffPerm& w) {
  if (y.omega_power() != w.omega_power()) return false;
  if (y.length() > w.length()) return false;
  if (y.length() == w.length()) return y == w;
  if (y.length() == 0) return true;
  const auto key = std::make_pair(y, w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const GenMask d = w.right_descents();
  int k = 0;
  while (!has_gen(d, k)) ++k;
  const AffPerm ws = w.right_mul_gen(k);
  const bool r = y.is_right_descent(k) ? leq_locked(y.right_mul_gen(k), ws) : leq_locked(y, ws);
  memo_.emplace(key, r);
  return r;
}

bool bruhat_leq(const AffPerm& y, const AffPerm& w) {
  static BruhatOrder order;
  return order.leq(y, w);
}

bool Weight::dominant() const {
  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i] < entries[i + 1]) return false;
  return true;
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw Error("rank mismatch in weight sum");
  Weight r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw Error("rank mismatch in weight difference");
  Weight r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] -= b.entries[i];
  return r;
}

Weight simple_root(int n, int i) {
  if (i < 1 || i >= n) throw Error("simple root index out of range");
  Weight a{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
  a.entries[static_cast<std::size_t>(i - 1)] = 1;
  a.entries[static_cast<std::size_t>(i)] = -1;
  return a;
}

Weight reflect(const Weight& lambda, int i) {
  if (i < 1 || i >= lambda.rank()) throw Error("reflection index out of range");
  Weight r = lambda;
  std::swap(r.entries[static_cast<std::size_t>(i - 1)], r.entries[static_cast<std::size_t>(i)]);
  return r;
}

AffPerm translation(const Weight& lambda) {
  const int n = lambda.rank();
  std::vector<std::int64_t> win(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) win[static_cast<std::size_t>(i)] = i + 1 + n * lambda.entries[static_cast<std::size_t>(i)];
  return AffPerm::from_window(n, win);
}

AffPerm parabolic_longest(const GenSet& T) {
  if (!T.finite_type()) throw Error("infinite parabolic");
  AffPerm w = AffPerm::identity(T.n);
  // Climb by non-descents inside T; terminates at the unique element of <T>
  // having every member of T as a right descent.
  while (true) {
    const GenMask missing = T.members & ~w.right_descents();
    if (missing == 0) return w;
    int k = 0;
    while (!has_gen(missing, k)) ++k;
    w = w.right_mul_gen(k);
  }
}

std::vector<int> block_type(const GenSet& T) {
  if (!T.finite_type()) throw Error("infinite parabolic");
  const int n = T.n;
  std::vector<int> sizes;
  // Start right after a gap so that no component wraps past the start.
  int start = 0;
  while (has_gen(T.members, start)) ++start;
  int run = 0;
  for (int step = 1; step <= n; ++step) {
    const int k = (start + step) % n;
    if (has_gen(T.members, k)) {
      ++run;
    } else if (run > 0) {
      sizes.push_back(run);
      run = 0;
    }
  }
  if (run > 0) sizes.push_back(run);
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

bool is_parabolic(const AffPerm& w) {
  if (w.omega_power() != 0) return false;
  const GenSet T{w.rank(), w.right_descents()};
  if (!T.finite_type()) return false;
  return parabolic_longest(T) == w;
}

std::vector<AffPerm> enumerate_ball(int n, int max_len, GenMask gens) {
  std::set<AffPerm> seen;
  std::vector<AffPerm> frontier{AffPerm::identity(n)};
  seen.insert(frontier[0]);
  for (int len = 0; len < max_len && !frontier.empty(); ++len) {
    std::vector<AffPerm> next;
    for (const auto& x : frontier)
      for (int k : mask_members(gens, n)) {
        if (x.is_right_descent(k)) continue;
        AffPerm y = x.right_mul_gen(k);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<AffPerm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace affhecke
