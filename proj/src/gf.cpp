#include "gf.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "error.hpp"

namespace idcode::gf {

namespace {

using Poly = std::vector<std::uint32_t>;  // low-degree-first

void strip(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2).
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  strip(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t f = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - f * b[i] % p) % p);
    }
    strip(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) noexcept {
  if (q < 2) return {0, 0};
  std::uint64_t p = 2;
  while (q % p) ++p;
  std::uint32_t k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  strip(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // All monic divisors of degree d.
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::size_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.resize(q_, 0);

  std::vector<Poly> c(q_);
  for (Elem a = 0; a < q_; ++a) c[a] = coeffs(a);

  for (Elem a = 0; a < q_; ++a) {
    Poly n(k_);
    for (std::uint32_t i = 0; i < k_; ++i) n[i] = (p_ - c[a][i]) % p_;
    neg_[a] = static_cast<std::uint16_t>(from_coeffs(n));
    for (Elem b = 0; b < q_; ++b) {
      Poly s(k_);
      for (std::uint32_t i = 0; i < k_; ++i) s[i] = (c[a][i] + c[b][i]) % p_;
      add_[a * q_ + b] = static_cast<std::uint16_t>(from_coeffs(s));

      Poly prod(2 * k_ - 1, 0);
      for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j)
          prod[i + j] = static_cast<std::uint32_t>(
              (prod[i + j] + static_cast<std::uint64_t>(c[a][i]) * c[b][j]) % p_);
      Poly r = poly_mod(prod, modulus_, p_);
      r.resize(k_, 0);
      mul_[a * q_ + b] = static_cast<std::uint16_t>(from_coeffs(r));
    }
  }
  for (Elem a = 1; a < q_; ++a)
    for (Elem b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  return inv_[a];
}

Elem FieldSpec::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

bool FieldSpec::is_square(Elem a) const {
  if (p_ == 2) fail(ErrorCode::EvenCharacteristic, "squareness test needs odd q");
  if (a == 0) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

Elem FieldSpec::conj(Elem a, std::uint32_t base_q) const {
  if (static_cast<std::uint64_t>(base_q) * base_q != q_)
    fail(ErrorCode::OrderMismatch, "conjugation needs q = base_q^2");
  return pow(a, base_q);
}

std::vector<std::uint32_t> FieldSpec::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem FieldSpec::from_coeffs(const std::vector<std::uint32_t>& c) const {
  Elem v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i] % p_;
  return v;
}

Elem FieldSpec::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::string FieldSpec::to_string(Elem a) const {
  std::ostringstream os;
  auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os.str();
}

Elem FieldSpec::parse(const std::string& s) const {
  std::vector<std::uint32_t> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size() || v < 0 || static_cast<std::uint64_t>(v) >= p_) throw 0;
      c.push_back(static_cast<std::uint32_t>(v));
    } catch (...) {
      fail(ErrorCode::Parse, "bad field element '" + s + "'");
    }
  }
  if (c.size() != k_) fail(ErrorCode::Parse, "field element needs " + std::to_string(k_) + " coefficients");
  return from_coeffs(c);
}

FieldPtr field(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1 || k > 4) fail(ErrorCode::DegreeTooLarge, "extension degree must be in [1,4]");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  if (q > 1024) fail(ErrorCode::DegreeTooLarge, "field order " + std::to_string(q) + " exceeds 1024");

  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find({p, k}); it != cache.end()) return it->second;

  // Monic degree-k candidates in lex order of (c0, c1, ..., c_{k-1}).
  std::uint64_t count = q;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly m(k + 1, 0);
    m[k] = 1;
    std::uint64_t t = idx;
    for (std::uint32_t i = k; i-- > 0;) {
      m[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    if (is_irreducible(m, p)) {
      auto spec = std::make_shared<const FieldSpec>(p, k, m);
      cache.emplace(std::make_pair(p, k), spec);
      return spec;
    }
  }
  fail(ErrorCode::NoIrreducibleFound, "no irreducible polynomial found");
}

FieldPtr field_of_order(std::uint64_t q) {
  auto [p, k] = prime_power(q);
  if (p == 0) fail(ErrorCode::BadParams, std::to_string(q) + " is not a prime power");
  return field(p, k);
}

void FieldElement::check(const FieldElement& o) const {
  if (spec_ != o.spec_) fail(ErrorCode::SpecMismatch, "elements belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return {spec_, spec_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  return {spec_, spec_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  return {spec_, spec_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check(o);
  return {spec_, spec_->mul(v_, spec_->inv(o.v_))};
}

}  // namespace idcode::gf
