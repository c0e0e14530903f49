#pragma once

#include <optional>
#include <vector>

#include "dte/cyclotomic.hpp"

namespace dte {

// Dirichlet character modulo an odd d. values()[a] is the exponent k with
// chi(a) = zeta_M^k, or nullopt for chi(a) = 0. For d = 1 the single value
// chi(0) is 1.
class DirichletCharacter {
public:
  using Table = std::vector<std::optional<unsigned long>>;

  // Validates every invariant; InvalidCharacter names the first failure.
  static DirichletCharacter from_table(unsigned long modulus, unsigned long order, Table values);
  static DirichletCharacter principal(unsigned long modulus);
  // Degenerate table with every value zero. Not a character; used to check
  // that generating functions vanish identically.
  static DirichletCharacter all_zero(unsigned long modulus);

  unsigned long modulus() const { return modulus_; }
  unsigned long order() const { return order_; }
  const Table& values() const { return values_; }

  std::optional<unsigned long> exponent(long m) const { return values_[reduce(m)]; }
  // Value in Q(zeta_M).
  CyclotomicNumber value(long m) const;
  // Value in Q(zeta_L) with order() | L.
  CyclotomicNumber value_in(const FieldPtr& ambient, long m) const;
  ComplexValue complex_value(long m) const;

  bool is_principal() const;
  bool is_rational_valued() const { return order_ <= 2; }
  // Requires is_rational_valued().
  Rational rational_value(long m) const;

  DirichletCharacter conjugate() const;
  // Same character with the smallest value order.
  DirichletCharacter normalized() const;

  friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);
  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b);
  friend std::vector<DirichletCharacter> enumerate_characters(unsigned long modulus);

private:
  DirichletCharacter(unsigned long modulus, unsigned long order, Table values)
      : modulus_(modulus), order_(order), values_(std::move(values)) {}
  std::size_t reduce(long m) const;

  unsigned long modulus_;
  unsigned long order_;
  Table values_;
};

// chi(a) = Jacobi symbol (a | d) for odd squarefree d >= 3.
DirichletCharacter quadratic_character(unsigned long modulus);

// All phi(d) characters mod odd d <= 10^4, ordered lexicographically by
// their exponent tuples on the generators of the prime-power components.
std::vector<DirichletCharacter> enumerate_characters(unsigned long modulus);

// Exponent of (Z/dZ)^*.
unsigned long carmichael_lambda(unsigned long modulus);

} // namespace dte
