#pragma once

#include <vector>

#include "apeuler/cyclotomic.hpp"

namespace apeuler {

// A Dirichlet character of odd modulus d. Values live in Q(zeta_e) where e is
// the exponent of the unit group (Z/d)*, shared by every character mod d.
// Internally each residue stores either "zero" or an exponent k meaning
// chi(a) = zeta_e^k, so equality and multiplication stay exact.
//
// Convention: for d = 1 the character is identically 1 (including at 0); for
// d > 1, chi(a) = 0 whenever gcd(a, d) > 1.
class DirichletCharacter {
 public:
  long modulus() const { return d_; }
  long order() const { return order_; }
  // conductor of the value field Q(zeta_e), e = exponent of (Z/d)*
  long value_field() const { return e_; }

  // chi(a) for any integer a (reduced mod d)
  Cyclotomic value(const Int& a) const;
  Cyclotomic value(long a) const;

  bool is_trivial() const { return order_ == 1; }
  bool is_unit(long a) const;

  // zeta_e exponent at residue a (0 <= a < d); -1 means chi(a) = 0
  long exponent_at(long a) const { return exps_[a]; }

  DirichletCharacter operator*(const DirichletCharacter& o) const;
  bool operator==(const DirichletCharacter& o) const;

  // smallest f | d such that chi factors through (Z/f)*
  long conductor() const;
  bool is_primitive() const { return conductor() == d_; }

  // the character mod conductor() inducing this one
  DirichletCharacter primitive() const;

  // chi(-1), always +1 or -1
  int parity() const;

  friend std::vector<DirichletCharacter> characters_mod(long d);
  friend DirichletCharacter character_from_exponents(long d, std::vector<long> exps);

 private:
  DirichletCharacter() = default;

  long d_ = 1;
  long order_ = 1;
  long e_ = 1;               // exponent of (Z/d)*; value field conductor
  std::vector<long> exps_;   // per residue: zeta_e exponent, or -1 for zero

  void recompute_order();
};

// All phi(d) characters of odd modulus d, in a fixed deterministic order with
// the trivial character first. Index into this list is the stable external
// address of a character.
std::vector<DirichletCharacter> characters_mod(long d);

long conductor_of(const DirichletCharacter& chi);

// rebuild a character from its residue exponent table (used by tests and io)
DirichletCharacter character_from_exponents(long d, std::vector<long> exps);

}  // namespace apeuler
