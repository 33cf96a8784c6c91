#include "bentcode/core/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace bentcode {

void require_dimension(int n, int max_n) {
  const int cap = std::min(max_n, kHardMaxDimension);
  if (n < 0 || n > cap) {
    throw std::invalid_argument("dimension " + std::to_string(n) + " outside [0, " +
                                std::to_string(cap) + "]; raise --max-n to override");
  }
}

Point::Point(std::uint32_t index, int n) : index_(index), n_(n) {
  if (n < 0 || n > kHardMaxDimension) throw std::invalid_argument("point dimension out of range");
  if (index >= pow3(n)) throw std::invalid_argument("point index out of range");
}

Point Point::from_coords(std::span<const int> coords) {
  const int n = static_cast<int>(coords.size());
  if (n > kHardMaxDimension) throw std::invalid_argument("point dimension out of range");
  std::uint32_t idx = 0;
  for (int i = n - 1; i >= 0; --i) idx = idx * 3 + static_cast<std::uint32_t>(Trit(coords[i]).value());
  return Point(idx, n);
}

Trit Point::coord(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("coordinate out of range");
  return Trit(static_cast<int>((index_ / pow3(i)) % 3));
}

std::vector<Trit> Point::coords() const {
  std::vector<Trit> out;
  out.reserve(n_);
  std::uint32_t x = index_;
  for (int i = 0; i < n_; ++i, x /= 3) out.emplace_back(static_cast<int>(x % 3));
  return out;
}

Point Point::operator+(const Point& o) const {
  if (o.n_ != n_) throw std::invalid_argument("dimension mismatch");
  return Point(add_index(index_, o.index_, n_), n_);
}

Point Point::operator-() const { return Point(negate_index(index_, n_), n_); }

Point Point::operator-(const Point& o) const { return *this + (-o); }

Point Point::scaled(Trit c) const {
  if (c.value() == 0) return zero(n_);
  if (c.value() == 1) return *this;
  return -*this;
}

Trit dot(const Point& u, const Point& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("dot: dimension mismatch");
  return Trit(dot_index(u.index(), v.index(), u.dim()));
}

int legendre(Trit a) {
  switch (a.value()) {
    case 0: return 0;
    case 1: return 1;
    default: return -1;
  }
}

std::string to_string(const Point& p) {
  std::string s = "(";
  auto c = p.coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + c[i].value());
  }
  return s + ")";
}

void decode_index(std::uint32_t index, int n, std::span<std::uint8_t> digits) {
  for (int i = 0; i < n; ++i, index /= 3) digits[i] = static_cast<std::uint8_t>(index % 3);
}

std::uint32_t encode_digits(std::span<const std::uint8_t> digits) {
  std::uint32_t idx = 0;
  for (std::size_t i = digits.size(); i-- > 0;) idx = idx * 3 + digits[i] % 3;
  return idx;
}

std::uint32_t negate_index(std::uint32_t index, int n) {
  std::uint32_t out = 0, place = 1;
  for (int i = 0; i < n; ++i, index /= 3, place *= 3) out += ((3 - index % 3) % 3) * place;
  return out;
}

std::uint32_t add_index(std::uint32_t a, std::uint32_t b, int n) {
  std::uint32_t out = 0, place = 1;
  for (int i = 0; i < n; ++i, a /= 3, b /= 3, place *= 3) out += ((a % 3 + b % 3) % 3) * place;
  return out;
}

int dot_index(std::uint32_t a, std::uint32_t b, int n) {
  unsigned s = 0;
  for (int i = 0; i < n; ++i, a /= 3, b /= 3) s += (a % 3) * (b % 3);
  return static_cast<int>(s % 3);
}

DigitTable::DigitTable(int n) : n_(n), size_(pow3(n)) {
  if (n < 0 || n > kHardMaxDimension) throw std::invalid_argument("DigitTable: dimension out of range");
  digits_.resize(size_ * static_cast<std::size_t>(n));
  negation_.resize(size_);
  for (std::size_t x = 0; x < size_; ++x) {
    auto d = std::span<std::uint8_t>(digits_.data() + x * n, static_cast<std::size_t>(n));
    decode_index(static_cast<std::uint32_t>(x), n, d);
    negation_[x] = negate_index(static_cast<std::uint32_t>(x), n);
  }
}

int DigitTable::dot(std::uint32_t a, std::uint32_t b) const {
  auto da = digits(a), db = digits(b);
  unsigned s = 0;
  for (int i = 0; i < n_; ++i) s += static_cast<unsigned>(da[i]) * db[i];
  return static_cast<int>(s % 3);
}

std::uint32_t DigitTable::add(std::uint32_t a, std::uint32_t b) const {
  auto da = digits(a), db = digits(b);
  std::uint32_t out = 0;
  for (int i = n_ - 1; i >= 0; --i) out = out * 3 + (da[i] + db[i]) % 3;
  return out;
}

}  // namespace bentcode
