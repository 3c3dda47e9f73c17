#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace idcode::gf {

/// Element index in [0, q): the polynomial-basis coefficients read as base-p
/// digits, lowest degree first. All table lookups are keyed on this index.
using Elem = std::uint32_t;

/**
 * A finite field GF(p^k) represented as GF(p)[x] / (modulus).
 *
 * Instances are immutable and shared; `field(p, k)` returns the same object
 * for the same arguments, so elements of one field can be compared by the
 * address of their spec.
 */
class FieldSpec {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Monic modulus, low-degree-first, length k + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  /// Throws DivisionByZero for a == 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// Throws EvenCharacteristic when p == 2.
  bool is_square(Elem a) const;
  /// a^base_q; requires q == base_q^2 (OrderMismatch otherwise).
  Elem conj(Elem a, std::uint32_t base_q) const;

  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<std::uint32_t>& c) const;
  /// Embeds an integer via its residue mod p.
  Elem from_int(long long v) const noexcept;

  std::string to_string(Elem a) const;
  Elem parse(const std::string& s) const;

  // Public for make_shared; use field().
  FieldSpec(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

 private:
  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::uint16_t> neg_, inv_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

bool is_prime(std::uint64_t n) noexcept;

/// Returns (p, k) if q is a prime power, else (0, 0).
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) noexcept;

/// GF(p^k) with the lexicographically smallest irreducible monic modulus
/// (coefficient vectors compared low-degree-first). 1 <= k <= 4, p^k <= 1024.
FieldPtr field(std::uint32_t p, std::uint32_t k);

/// Convenience: field of order q (BadParams if q is not a prime power).
FieldPtr field_of_order(std::uint64_t q);

/// Naive irreducibility test by trial division with all monic polynomials of
/// degree <= deg/2. Coefficients low-degree-first, leading coefficient nonzero.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Value-semantic element bound to its field. Mixing fields throws SpecMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr spec, Elem v) : spec_(std::move(spec)), v_(v) {}

  const FieldPtr& spec() const noexcept { return spec_; }
  Elem index() const noexcept { return v_; }
  std::vector<std::uint32_t> coeffs() const { return spec_->coeffs(v_); }
  bool is_zero() const noexcept { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {spec_, spec_->neg(v_)}; }
  FieldElement inv() const { return {spec_, spec_->inv(v_)}; }
  FieldElement pow(std::uint64_t e) const { return {spec_, spec_->pow(v_, e)}; }
  bool is_square() const { return spec_->is_square(v_); }
  FieldElement conj(std::uint32_t base_q) const { return {spec_, spec_->conj(v_, base_q)}; }

  bool operator==(const FieldElement& o) const noexcept {
    return spec_ == o.spec_ && v_ == o.v_;
  }

  std::string to_string() const { return spec_->to_string(v_); }

 private:
  void check(const FieldElement& o) const;

  FieldPtr spec_;
  Elem v_;
};

}  // namespace idcode::gf
