#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centra/group.hpp"
#include "centra/subgroup_set.hpp"

namespace centra {

/// owner_map value for central elements, whose centralizer is G itself.
inline constexpr std::size_t kWholeGroup = std::numeric_limits<std::size_t>::max();

/// { g : g·x = x·g }
SubgroupSet centralizer(const Group& g, Elem x);

/// The family Cent(G) and everything derived from it.
struct CentralizerProfile {
  std::size_t order = 0;
  SubgroupSet center;
  /// Distinct C(x) for non-central x, ordered by their minimal non-central owner.
  std::vector<SubgroupSet> proper_centralizers;
  /// Minimal non-central x with C(x) = proper_centralizers[i].
  std::vector<Elem> owners;
  /// Element -> index into proper_centralizers, or kWholeGroup for central elements.
  std::vector<std::size_t> owner_map;
  /// Z(x): the center of proper_centralizers[i] as a group in its own right.
  std::vector<SubgroupSet> centers;
  /// |Cent(G)|, counting G itself.
  std::size_t cent_count = 1;
  /// Elements in the longest inclusion chain of proper centralizers (0 when abelian).
  std::size_t rank = 0;
  /// Non-abelian members of Cent(G), G included.
  std::size_t nacent_count = 0;

  bool abelian() const noexcept { return proper_centralizers.empty(); }
  std::size_t center_index() const noexcept { return order / center.size(); }
  /// |Z(x)/Z(G)| for proper centralizer i.
  std::size_t center_quotient_size(std::size_t i) const { return centers[i].size() / center.size(); }
  /// [G : C(x)] for proper centralizer i.
  std::size_t index(std::size_t i) const { return order / proper_centralizers[i].size(); }
  bool centralizer_is_abelian(std::size_t i) const { return centers[i] == proper_centralizers[i]; }
};

CentralizerProfile profile(const Group& g);

/// Pair (x, y) of non-central elements with C(x) < C(y), when one exists.
struct FGroupResult {
  bool holds = true;
  std::optional<std::pair<Elem, Elem>> witness;
};

FGroupResult is_F_group(const CentralizerProfile& p);
FGroupResult is_F_group(const Group& g);

struct StrictPartitionResult {
  bool strict = true;
  /// A non-central element lying in two distinct members of {Z(x)}.
  std::optional<Elem> doubly_covered;
};

/// Whether {Z(x) : x ∉ Z(G)} is a strict Z(G)-partition. Throws AbelianInput.
StrictPartitionResult is_strict_center_partition(const CentralizerProfile& p);
StrictPartitionResult is_strict_center_partition(const Group& g);

/// Length of the inclusion poset of proper centralizers. Throws AbelianInput.
std::size_t poset_rank(const CentralizerProfile& p);

/// Indices [G : C(x)] over the proper centralizers, ascending and distinct.
struct ConjugateType {
  std::vector<std::size_t> indices;

  bool uniform() const noexcept { return indices.size() == 1; }
  /// The common index n of conjugate type (n,1); requires uniform().
  std::size_t index() const { return indices.at(0); }
  /// "(n,1)" or "mixed:a,b,..."
  std::string to_string() const;
};

/// Throws AbelianInput.
ConjugateType conjugate_type(const CentralizerProfile& p);
ConjugateType conjugate_type(const Group& g);

/// All proper centralizers abelian. Throws AbelianInput.
bool is_CA_group(const CentralizerProfile& p);
bool is_CA_group(const Group& g);
/// All proper centralizers of one order. Throws AbelianInput.
bool is_I_group(const CentralizerProfile& p);
bool is_I_group(const Group& g);

/// Outcome of evaluating one of the centralizer counting formulas. When the
/// hypotheses fail, `applicable` is false and `unmet` names the failed one.
struct FormulaResult {
  bool applicable = false;
  std::string unmet;
  std::int64_t value = 0;
  /// False when the closed form does not evaluate to an integer.
  bool integral = true;
  std::uint64_t p = 0;
  unsigned k = 0;
  unsigned m = 0;
  std::size_t v = 0;
};

/// (p^k - 1)/(p^m - 1) + 1 for an F-group with |G/Z(G)| = p^k and every
/// |Z(x)/Z(G)| = p^m.
FormulaResult count_by_formula_f1(const CentralizerProfile& p);
FormulaResult count_by_formula_f1(const Group& g);

/// p^{k-1} + ... + p + 2 - v·p for an F-group with |G/Z(G)| = p^k and every
/// |Z(x)/Z(G)| <= p², where v counts the centralizers with |Z(x)/Z(G)| = p².
FormulaResult count_by_formula_pp1(const CentralizerProfile& p);
FormulaResult count_by_formula_pp1(const Group& g);

}  // namespace centra
