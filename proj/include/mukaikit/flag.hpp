#pragma once

#include "mukaikit/cohomology.hpp"

#include <optional>

namespace mukaikit {

/// A quasi-Fano threefold Y together with an anticanonical K3 surface S ⊂ Y.
/// Construction does not enforce the quasi-Fano conditions; see validate_flag.
class FlagDescriptor {
 public:
  FlagDescriptor(ThreefoldRing ring, IntVector s_coords, std::optional<std::int64_t> h1_ty = {},
                 std::optional<std::int64_t> h0_n = {})
      : ring_(std::move(ring)),
        k3_(K3Restriction::from_ring(ring_, s_coords)),
        h1_ty_(h1_ty),
        h0_n_(h0_n) {
    if (h1_ty_ && *h1_ty_ < 0) throw ValidationError("h1_TY must be nonnegative");
    if (h0_n_ && *h0_n_ < 0) throw ValidationError("h0_N must be nonnegative");
  }

  const ThreefoldRing& ring() const { return ring_; }
  const IntVector& s_coords() const { return k3_.s_coords(); }
  const K3Restriction& k3() const { return k3_; }
  std::optional<std::int64_t> h1_ty() const { return h1_ty_; }
  std::optional<std::int64_t> h0_n() const { return h0_n_; }

  /// User assertion that the first-order obstruction of the pair vanishes;
  /// it has no lattice-level shadow and is only carried along.
  std::optional<bool> first_obstruction_vanishes;

 private:
  ThreefoldRing ring_;
  K3Restriction k3_;
  std::optional<std::int64_t> h1_ty_;
  std::optional<std::int64_t> h0_n_;
};

}  // namespace mukaikit
