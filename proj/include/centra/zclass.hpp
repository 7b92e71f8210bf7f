#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "centra/centralizer.hpp"
#include "centra/group.hpp"

namespace centra {

/// Elements whose centralizers are conjugate, with the data of the size
/// formula |class| = [G : N_G(C(x))]·|F′ₓ|.
struct ZClass {
  std::vector<Elem> members;
  /// Minimal member.
  Elem representative = 0;
  /// Index into CentralizerProfile::proper_centralizers, or kWholeGroup.
  std::size_t centralizer_id = kWholeGroup;
  std::size_t normalizer_index = 1;
  /// |{ y : C(y) = C(x) }|
  std::size_t fprime_size = 0;

  bool size_formula_holds() const { return members.size() == normalizer_index * fprime_size; }
};

struct ZClassPartition {
  /// Ordered by minimal member, so the central class comes first.
  std::vector<ZClass> classes;
  /// Element -> index into classes.
  std::vector<std::size_t> class_of;

  std::size_t zclass_count() const noexcept { return classes.size(); }
};

/// C(x) = g·C(y)·g⁻¹ for some g, by exhaustive search over g.
bool z_equivalent(const Group& g, Elem x, Elem y);

ZClassPartition z_partition(const Group& g, const CentralizerProfile& p);
ZClassPartition z_partition(const Group& g);

struct CountComparison {
  std::size_t zclass_count = 0;
  std::size_t cent_count = 0;
  bool all_centralizers_normal = true;

  bool counts_equal() const noexcept { return zclass_count == cent_count; }
  /// Counts agree exactly when every centralizer is normal.
  bool consistent() const noexcept { return counts_equal() == all_centralizers_normal; }
};

CountComparison zclass_count_equals_cent_count(const Group& g, const CentralizerProfile& p,
                                               const ZClassPartition& z);
CountComparison zclass_count_equals_cent_count(const Group& g);

enum class CheckStatus { Holds, HypothesisNotMet, Violation };

struct CheckResult {
  CheckStatus status = CheckStatus::HypothesisNotMet;
  std::string detail;
};

/// For an F-group with |G/Z(G)| = p^k: the count (p^k-1)/(p-1)+1 of z-classes
/// is attained iff G/Z(G) is elementary abelian and Z(x) = ⟨x, Z(G)⟩ for every
/// non-central x. Both sides are evaluated independently.
CheckResult check_max_zclass_characterization(const Group& g, const CentralizerProfile& p,
                                              const ZClassPartition& z);
CheckResult check_max_zclass_characterization(const Group& g);

/// z-class count against [G : Z(G)]: the bound must hold, and equality must
/// coincide with every |Z(x)/Z(G)| = 2.
struct UpperBoundResult {
  bool bound_holds = true;
  bool equality = false;
  bool all_quotients_two = true;

  bool holds() const noexcept { return bound_holds && equality == all_quotients_two; }
};

UpperBoundResult upper_bound_check(const CentralizerProfile& p, const ZClassPartition& z);
UpperBoundResult upper_bound_check(const Group& g);

}  // namespace centra
