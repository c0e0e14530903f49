#include "dte/characters.hpp"

#include <string>

#include "dte/error.hpp"
#include "dte/qarith.hpp"

namespace dte {

namespace {

struct PrimePower {
  unsigned long prime;
  unsigned exponent;
  unsigned long value;
};

std::vector<PrimePower> factor(unsigned long n) {
  std::vector<PrimePower> out;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

void require_odd_modulus(unsigned long d) {
  if (d == 0 || d % 2 == 0)
    throw MathError(ErrorKind::InvalidArgument, "modulus must be odd and positive, got " + std::to_string(d));
}

unsigned long mul_mod(unsigned long a, unsigned long b, unsigned long m) {
  return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % m);
}

unsigned long multiplicative_order(unsigned long g, unsigned long m) {
  unsigned long x = g % m, k = 1;
  while (x != 1) {
    x = mul_mod(x, g, m);
    ++k;
  }
  return k;
}

// Generator of the cyclic group (Z/p^e)^*, p odd.
unsigned long primitive_root(const PrimePower& pp) {
  unsigned long g = 2;
  while (multiplicative_order(g, pp.prime) != pp.prime - 1) ++g;
  if (pp.exponent > 1 && multiplicative_order(g, pp.prime * pp.prime) != pp.prime * (pp.prime - 1)) g += pp.prime;
  return g;
}

[[noreturn]] void invalid(const std::string& why) { throw MathError(ErrorKind::InvalidCharacter, why); }

} // namespace

unsigned long carmichael_lambda(unsigned long modulus) {
  require_odd_modulus(modulus);
  unsigned long lambda = 1;
  for (const auto& pp : factor(modulus)) lambda = lcm_ul(lambda, euler_phi(pp.value));
  return lambda;
}

DirichletCharacter DirichletCharacter::from_table(unsigned long modulus, unsigned long order, Table values) {
  require_odd_modulus(modulus);
  if (order == 0) invalid("value order must be >= 1");
  if (values.size() != modulus)
    invalid("table has " + std::to_string(values.size()) + " entries, modulus is " + std::to_string(modulus));
  for (std::size_t a = 0; a < modulus; ++a) {
    const bool unit = gcd_ul(a, modulus) == 1;
    if (unit != values[a].has_value())
      invalid("residue " + std::to_string(a) + (unit ? " is a unit but maps to zero" : " is not a unit but is nonzero"));
    if (values[a] && *values[a] >= order)
      invalid("exponent at residue " + std::to_string(a) + " is not below the value order");
  }
  if (values[1 % modulus] != 0UL) invalid("chi(1) must be 1");
  const unsigned long lambda = carmichael_lambda(modulus);
  for (std::size_t a = 0; a < modulus; ++a) {
    if (!values[a]) continue;
    const unsigned long elem_order = order / gcd_ul(*values[a], order);
    if (lambda % elem_order != 0)
      invalid("value at residue " + std::to_string(a) + " has order not dividing the group exponent");
  }
  if (modulus > 1) {
    for (std::size_t a = 1; a < modulus; ++a) {
      if (!values[a]) continue;
      for (std::size_t b = 1; b < modulus; ++b) {
        if (!values[b]) continue;
        const auto ab = (a * b) % modulus;
        if (*values[ab] != (*values[a] + *values[b]) % order)
          invalid("multiplicativity fails at pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
  return DirichletCharacter(modulus, order, std::move(values));
}

DirichletCharacter DirichletCharacter::principal(unsigned long modulus) {
  require_odd_modulus(modulus);
  Table t(modulus);
  for (std::size_t a = 0; a < modulus; ++a)
    if (gcd_ul(a, modulus) == 1) t[a] = 0;
  return DirichletCharacter(modulus, 1, std::move(t));
}

DirichletCharacter DirichletCharacter::all_zero(unsigned long modulus) {
  require_odd_modulus(modulus);
  return DirichletCharacter(modulus, 1, Table(modulus));
}

std::size_t DirichletCharacter::reduce(long m) const {
  const long d = static_cast<long>(modulus_);
  return static_cast<std::size_t>(((m % d) + d) % d);
}

CyclotomicNumber DirichletCharacter::value(long m) const { return value_in(CyclotomicField::make(order_), m); }

CyclotomicNumber DirichletCharacter::value_in(const FieldPtr& ambient, long m) const {
  if (ambient->order() % order_ != 0)
    throw MathError(ErrorKind::FieldMismatch, "ambient field does not contain the character values");
  const auto e = exponent(m);
  if (!e) return CyclotomicNumber::zero(ambient);
  return CyclotomicNumber::zeta_power(ambient, static_cast<long>(*e * (ambient->order() / order_)));
}

ComplexValue DirichletCharacter::complex_value(long m) const {
  const auto e = exponent(m);
  if (!e) return {0.0, 0.0};
  return embed_complex(CyclotomicNumber::zeta_power(CyclotomicField::make(order_), static_cast<long>(*e)), 1);
}

bool DirichletCharacter::is_principal() const {
  for (const auto& v : values_)
    if (v && *v != 0) return false;
  return true;
}

Rational DirichletCharacter::rational_value(long m) const {
  if (!is_rational_valued()) throw MathError(ErrorKind::InvalidArgument, "character is not rational-valued");
  const auto e = exponent(m);
  if (!e) return Rational(0);
  return *e == 0 ? Rational(1) : Rational(-1);
}

DirichletCharacter DirichletCharacter::conjugate() const {
  Table t(values_.size());
  for (std::size_t a = 0; a < t.size(); ++a)
    if (values_[a]) t[a] = (order_ - *values_[a]) % order_;
  return DirichletCharacter(modulus_, order_, std::move(t));
}

DirichletCharacter DirichletCharacter::normalized() const {
  unsigned long g = order_;
  for (const auto& v : values_)
    if (v) g = gcd_ul(g, *v);
  Table t(values_.size());
  for (std::size_t a = 0; a < t.size(); ++a)
    if (values_[a]) t[a] = *values_[a] / g;
  return DirichletCharacter(modulus_, order_ / g, std::move(t));
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (a.modulus_ != b.modulus_) throw MathError(ErrorKind::InvalidArgument, "characters have different moduli");
  const unsigned long order = lcm_ul(a.order_, b.order_);
  DirichletCharacter::Table t(a.values_.size());
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (!a.values_[r] || !b.values_[r]) continue;
    t[r] = (*a.values_[r] * (order / a.order_) + *b.values_[r] * (order / b.order_)) % order;
  }
  return DirichletCharacter(a.modulus_, order, std::move(t)).normalized();
}

bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
  const auto na = a.normalized(), nb = b.normalized();
  return na.modulus_ == nb.modulus_ && na.order_ == nb.order_ && na.values_ == nb.values_;
}

DirichletCharacter quadratic_character(unsigned long modulus) {
  require_odd_modulus(modulus);
  if (modulus < 3) throw MathError(ErrorKind::InvalidArgument, "quadratic character needs modulus >= 3");
  for (const auto& pp : factor(modulus))
    if (pp.exponent > 1) throw MathError(ErrorKind::NotSquarefree, std::to_string(modulus) + " is not squarefree");
  DirichletCharacter::Table t(modulus);
  const Integer d(modulus);
  for (unsigned long a = 0; a < modulus; ++a) {
    const int j = mpz_jacobi(Integer(a).get_mpz_t(), d.get_mpz_t());
    if (j != 0) t[a] = j == 1 ? 0UL : 1UL;
  }
  return DirichletCharacter::from_table(modulus, 2, std::move(t));
}

std::vector<DirichletCharacter> enumerate_characters(unsigned long modulus) {
  require_odd_modulus(modulus);
  if (modulus > 10000) throw MathError(ErrorKind::InvalidArgument, "modulus above 10^4");
  if (modulus == 1) return {DirichletCharacter::principal(1)};

  const auto parts = factor(modulus);
  const unsigned long exponent = carmichael_lambda(modulus);

  // Discrete logs of every residue in each prime-power component.
  std::vector<std::vector<long>> logs;
  std::vector<unsigned long> orders;
  for (const auto& pp : parts) {
    const unsigned long g = primitive_root(pp);
    const unsigned long phi = euler_phi(pp.value);
    std::vector<long> table(pp.value, -1);
    unsigned long x = 1;
    for (unsigned long k = 0; k < phi; ++k) {
      table[x] = static_cast<long>(k);
      x = mul_mod(x, g, pp.value);
    }
    logs.push_back(std::move(table));
    orders.push_back(phi);
  }

  std::vector<DirichletCharacter> out;
  std::vector<unsigned long> tuple(parts.size(), 0);
  while (true) {
    DirichletCharacter::Table t(modulus);
    for (unsigned long a = 1; a < modulus; ++a) {
      if (gcd_ul(a, modulus) != 1) continue;
      unsigned long e = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto k = static_cast<unsigned long>(logs[i][a % parts[i].value]);
        e = (e + mul_mod(tuple[i] * (exponent / orders[i]), k, exponent)) % exponent;
      }
      t[a] = e;
    }
    out.push_back(DirichletCharacter(modulus, exponent, std::move(t)).normalized());

    std::size_t i = tuple.size();
    while (i > 0) {
      --i;
      if (++tuple[i] < orders[i]) break;
      tuple[i] = 0;
      if (i == 0) return out;
    }
  }
}

} // namespace dte
