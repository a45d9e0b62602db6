#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dimlab/beta_set.hpp"
#include "dimlab/binary_arith.hpp"
#include "dimlab/partition.hpp"

namespace dimlab {

/// How a 2^R-hook was added to the core.
enum class ParentType {
  type1,  ///< an element x of H(core) bumped to x + 2^R
  type2,  ///< H(core) shifted by r, then 2^R inserted and 0 dropped
};

/// A partition lambda whose 2^R-core is `core`, obtained by adding one 2^R-hook.
struct ParentRecord {
  Partition parent;
  Partition core;
  int r_power = 0;              ///< R; the added hook has length 2^R
  ParentType type = ParentType::type1;
  std::int64_t parameter = 0;   ///< x for type1, the shift r for type2
  std::int64_t affected = 0;    ///< the beta-set element created by the addition

  std::int64_t hook() const { return std::int64_t{1} << r_power; }
  friend bool operator==(const ParentRecord&, const ParentRecord&) = default;
};

/// One record per x in H(core), in descending order of x.
/// Throws DomainError unless 1 <= R <= 62 and |core| < 2^R.
std::vector<ParentRecord> type1_parents(const Partition& core, int r_power);

/// One record per shift r in 1..2^R with 2^R not in H(core)^{+r}, ascending in r.
/// Same preconditions as type1_parents.
std::vector<ParentRecord> type2_parents(const Partition& core, int r_power);

/// type1_parents followed by type2_parents; exactly 2^R records.
std::vector<ParentRecord> all_parents(const Partition& core, int r_power);

/// #{y in H(lambda) : h - 2^R < y < h}. Throws DomainError if h is not in H(lambda).
std::int64_t n_between(const Partition& lambda, std::int64_t h, int r_power);

/// The mod-2 sign-correction exponent of a parent step, from membership tests
/// around the affected element (four indicator terms).
int eta(const ParentRecord& record);

/// The same exponent from its defining product of od ratios over H(parent).
int eta_by_definition(const ParentRecord& record);

/// Predicted od(f^parent) from od(f^core):
/// (-1)^(s(n) + s(h) + eta) * od_core, where s is leading_pair_sum, n = |parent|, h = affected.
/// Throws DomainError if |parent| <= 3 or |core| >= 2^R.
OdSign workhorse_predict(const ParentRecord& record, OdSign od_core);

/// sum over the family of od(f^lambda) / od(f^core), with every od computed from dim_class.
/// Throws DomainError if the core, or any member, has even dimension, or if a member
/// belongs to a different core.
std::int64_t signed_sum(std::span<const ParentRecord> family, const Partition& core);

/// Type-2 records whose shift lies in [lo, hi].
std::vector<ParentRecord> type2_with_shift_in(std::span<const ParentRecord> family,
                                              std::int64_t lo, std::int64_t hi);
/// Type-2 records with shift in [1, 2^(R-1)] and in [2^(R-1) + 1, 2^R].
std::vector<ParentRecord> type2_upper(std::span<const ParentRecord> family, int r_power);
std::vector<ParentRecord> type2_lower(std::span<const ParentRecord> family, int r_power);

}  // namespace dimlab
