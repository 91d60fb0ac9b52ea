#pragma once

// Finite commutative chain rings with exact, table-based arithmetic.
//
// A ring is built from one of three presentation families:
//
//   galois       GR(p^m, r) = Z_{p^m}[x]/<h>,  h monic basic irreducible
//   truncated    F_{p^r}[u]/<u^e>
//   eisenstein   GR(p^m, r)[u]/<u^t - p*w(u), p^{m-1} u^s>
//
// Elements are canonical indices into a fixed enumeration (mixed-radix
// coordinates, least significant first).  All arithmetic is precomputed
// into |R| x |R| tables at construction time, and the chain-ring axioms
// (unique maximal ideal <gamma>, totally ordered ideals, Teichmüller
// structure) are verified directly on the tables; a presentation that does
// not produce a chain ring is rejected.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skewpc/errors.hpp"

namespace skewpc {

using ElemId = std::uint32_t;

enum class RingKind { Galois, Truncated, Eisenstein };

const char* ring_kind_name(RingKind k);

struct RingPresentation {
  RingKind kind = RingKind::Galois;
  std::uint32_t p = 2;  // residue characteristic (prime)
  std::uint32_t m = 1;  // exponent of the base Z_{p^m} (galois, eisenstein)
  std::uint32_t r = 1;  // residue degree
  std::uint32_t e = 1;  // nilpotency index (truncated)
  std::uint32_t t = 1;  // degree of the u-extension (eisenstein)
  std::uint32_t s = 1;  // annihilator exponent: p^{m-1} u^s = 0 (eisenstein)
  std::vector<std::uint32_t> h;  // ascending coefficients of h, degree r; defaults to x when r = 1
  std::vector<std::uint32_t> w;  // ascending coefficients of w, degree < t; defaults to 1
  std::uint64_t size_bound = 4096;

  std::uint64_t size() const;   // |R| implied by the parameters
  void validate() const;        // throws on malformed parameters
  std::string describe() const;
};

class ChainRing;
using RingPtr = std::shared_ptr<const ChainRing>;

class ChainRing {
 public:
  static RingPtr build(const RingPresentation& pres);

  // structural data
  std::uint64_t size() const { return size_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t r() const { return r_; }
  std::uint32_t e() const { return e_; }
  std::uint64_t q() const { return q_; }  // residue field size p^r
  ElemId zero() const { return 0; }
  ElemId one() const { return one_; }
  ElemId gamma() const { return gamma_; }
  const RingPresentation& presentation() const { return pres_; }

  // arithmetic (pure table lookups)
  ElemId add(ElemId a, ElemId b) const { return add_[idx(a, b)]; }
  ElemId mul(ElemId a, ElemId b) const { return mul_[idx(a, b)]; }
  ElemId neg(ElemId a) const { return neg_[a]; }
  ElemId sub(ElemId a, ElemId b) const { return add(a, neg(b)); }
  ElemId pow(ElemId a, std::uint64_t k) const;
  ElemId inv(ElemId a) const;  // throws NotAUnit
  bool is_unit(ElemId a) const { return inv_[a] != kNoInverse; }

  // chain structure
  std::uint32_t valuation(ElemId a) const { return val_[a]; }  // a = unit * gamma^v; v = e for 0
  ElemId gamma_pow(std::uint32_t i) const;                     // gamma^i for 0 <= i <= e
  bool in_maximal_ideal(ElemId a) const { return !is_unit(a); }

  // residue field via Teichmüller representatives
  ElemId residue_project(ElemId a) const { return residue_rep_[a]; }       // representative in T
  std::uint32_t residue_index(ElemId a) const { return residue_idx_[a]; }  // position in teichmuller()
  ElemId teichmuller_lift(std::uint32_t residue_index) const;
  std::pair<ElemId, ElemId> unit_decompose(ElemId a) const;  // a = xi * u, xi in T*, u in 1+gamma R

  const std::vector<ElemId>& units() const { return units_; }
  const std::vector<ElemId>& teichmuller() const { return teich_; }            // T = T* + {0}
  const std::vector<ElemId>& teichmuller_star() const { return teich_star_; }  // T*
  const std::vector<ElemId>& unit_one_plus_gamma() const { return one_plus_gamma_; }
  bool in_one_plus_gamma(ElemId a) const { return u_member_[a] != 0; }

  std::uint64_t multiplicative_order(ElemId a) const;  // throws NotAUnit
  ElemId gamma_preimage(ElemId y) const;               // some c with gamma*c = y; throws BadArgument

  // canonical coordinates
  const std::vector<std::uint32_t>& radices() const { return radices_; }
  std::vector<std::uint32_t> coords(ElemId a) const;
  ElemId from_coords(const std::vector<std::uint32_t>& digits) const;  // throws BadArgument
  ElemId from_integer(std::uint64_t c) const;                          // c * 1
  std::string to_string(ElemId a) const;

 private:
  explicit ChainRing(const RingPresentation& pres);

  static constexpr std::uint16_t kNoInverse = 0xFFFF;
  std::size_t idx(ElemId a, ElemId b) const { return std::size_t(a) * size_ + b; }
  void verify_tables() const;
  void compute_units();
  void compute_chain_structure();
  void compute_teichmuller();

  RingPresentation pres_;
  std::uint64_t size_ = 0;
  std::uint32_t p_ = 0, r_ = 0, e_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> radices_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::uint16_t> neg_, inv_;
  std::vector<std::uint16_t> gdiv_;  // preimage under multiplication by gamma
  ElemId one_ = 0, gamma_ = 0;
  std::vector<ElemId> units_, teich_, teich_star_, one_plus_gamma_, gamma_pows_;
  std::vector<std::uint8_t> u_member_;
  std::vector<ElemId> residue_rep_;
  std::vector<std::uint32_t> residue_idx_;
  std::vector<std::uint32_t> val_;
};

}  // namespace skewpc
