#pragma once

// Validated ring automorphisms of a chain ring.
//
// A map is specified by the exponent j of its action xi -> xi^j on the
// Teichmüller units together with the image of the maximal-ideal generator.
// It is closed over the whole ring through the gamma-adic Teichmüller
// expansion a = xi_0 + gamma xi_1 + ... + gamma^{e-1} xi_{e-1} and then
// verified exhaustively to be a ring automorphism.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "skewpc/chain_ring.hpp"

namespace skewpc {

struct AutomorphismSpec {
  std::optional<std::vector<std::uint32_t>> u_image;  // coordinates of sigma(gamma)
  std::optional<std::uint64_t> omega_exponent;        // sigma(xi) = xi^j on the Teichmüller set
};

class RingAutomorphism;
using SigmaPtr = std::shared_ptr<const RingAutomorphism>;

class RingAutomorphism {
 public:
  static SigmaPtr build(RingPtr ring, const AutomorphismSpec& spec);
  static SigmaPtr identity(RingPtr ring);

  const ChainRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }

  ElemId apply(ElemId a) const { return image_[a]; }
  ElemId apply_pow(ElemId a, std::uint64_t i) const { return powers_[i % mu_][a]; }
  std::uint32_t order() const { return mu_; }
  std::uint32_t residue_order() const { return residue_order_; }  // order of the induced map on F_q
  std::uint32_t teich_exponent() const { return teich_k_; }       // sigma(xi) = xi^{p^k} on T*
  bool is_identity() const { return mu_ == 1; }

  bool fixes(ElemId a) const { return image_[a] == a; }
  const std::vector<ElemId>& fixed_subring() const { return fixed_; }
  const std::vector<ElemId>& fixed_units() const { return fixed_units_; }

  // i-th sigma-norm N_i(beta) = sigma^{i-1}(beta) ... sigma(beta) * beta.
  // Memoized per (beta, i); safe to call concurrently.
  ElemId norm(ElemId beta, std::uint64_t i) const;

  bool same_map(const RingAutomorphism& other) const;

 private:
  RingAutomorphism(RingPtr ring, std::vector<ElemId> image);
  void finalize();

  RingPtr ring_;
  std::vector<ElemId> image_;
  std::vector<std::vector<ElemId>> powers_;  // powers_[i] = sigma^i, 0 <= i < mu
  std::uint32_t mu_ = 1;
  std::uint32_t residue_order_ = 1;
  std::uint32_t teich_k_ = 0;
  std::vector<ElemId> fixed_, fixed_units_;

  mutable std::mutex norm_mutex_;
  mutable std::vector<std::vector<ElemId>> norm_cache_;
};

}  // namespace skewpc
