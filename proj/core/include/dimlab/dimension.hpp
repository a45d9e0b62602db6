#pragma once

#include <cstdint>
#include <string>

#include "dimlab/binary_arith.hpp"
#include "dimlab/partition.hpp"

namespace dimlab {

/// f^lambda modulo 4 without big integers: the 2-adic valuation of f^lambda together
/// with the mod-4 sign of its odd part.
struct DimClass {
  int v2 = 0;
  OdSign od;

  /// f^lambda mod 4.
  int residue() const {
    if (v2 == 0) return od.residue();
    return v2 == 1 ? 2 : 0;
  }
  bool is_odd() const { return v2 == 0; }

  friend bool operator==(const DimClass&, const DimClass&) = default;
};

/// Exact number of standard Young tableaux. Desk-scale only.
__extension__ typedef unsigned __int128 Dimension;

inline constexpr std::int64_t kDefaultExactBound = 60;

/// n! / (product of hook lengths), reduced by prime-exponent cancellation so no
/// intermediate exceeds the result. Throws SizeError if |lambda| > bound or the
/// result does not fit 128 bits.
Dimension dim_exact(const Partition& lambda, std::int64_t bound = kDefaultExactBound);

/// Decimal rendering of a Dimension.
std::string to_string(Dimension value);

/// Residue class via the hook-product formula. In debug builds it is checked
/// against dim_class_from_beta_set.
DimClass dim_class(const Partition& lambda);

/// v2(n!) - sum v2(h), od(n!) * prod od(h) over all hooks.
DimClass dim_class_from_hooks(const Partition& lambda);

/// The same quantity from first-column hooks h_1 > ... > h_k:
/// n! * prod_{i<j} (h_i - h_j) / prod h_i!.
DimClass dim_class_from_beta_set(const Partition& lambda);

inline bool is_odd_partition(const Partition& lambda) { return dim_class(lambda).is_odd(); }

}  // namespace dimlab
