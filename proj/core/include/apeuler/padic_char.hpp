#pragma once

#include "apeuler/dirichlet.hpp"
#include "apeuler/padic.hpp"

namespace apeuler {

// A character with values in Z_p: each value is either 0 or a (p-1)-st root
// of unity, which is pinned down exactly by its residue mod p. The table
// stores those residues, so the character itself is precision-free; a
// PadicNumber value at any precision is recovered by Teichmueller lifting.
class PadicCharacter {
 public:
  static PadicCharacter trivial(long p);            // modulus 1, identically 1
  static PadicCharacter omega(long p);              // the Teichmueller character mod p
  static PadicCharacter omega_power(long p, long t);

  // embeds a cyclotomic-valued character whose order divides p-1, sending a
  // value of order e to the Teichmueller root of matching residue (via the
  // smallest primitive root mod p)
  static PadicCharacter from_dirichlet(const DirichletCharacter& chi, long p);

  long prime() const { return p_; }
  long modulus() const { return f_; }

  // residue mod p of the value at a; 0 encodes the character vanishing
  long residue_at(long a) const;
  bool is_unit_at(long a) const { return residue_at(a) != 0; }

  PadicNumber value(long a, const PadicContext& ctx) const;
  PadicNumber value(const Int& a, const PadicContext& ctx) const;

  PadicCharacter operator*(const PadicCharacter& o) const;  // modulus lcm
  bool operator==(const PadicCharacter& o) const;

  long conductor() const;
  PadicCharacter primitive() const;

 private:
  long p_ = 3;
  long f_ = 1;
  std::vector<long> res_;  // size f_; residue mod p, 0 = vanishing

  PadicCharacter(long p, long f, std::vector<long> res);
};

}  // namespace apeuler
