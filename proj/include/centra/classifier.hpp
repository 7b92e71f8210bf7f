#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "centra/centralizer.hpp"
#include "centra/group.hpp"
#include "centra/zclass.hpp"

namespace centra {

/// p when |G| = p^k with k >= 1.
std::optional<std::uint64_t> p_group_prime(const Group& g);

/// The predicates below that are defined only for p-groups throw NotPGroup
/// on anything else, the trivial group included.

/// Z(G) = G′ and Z(G) is elementary abelian.
bool is_special_p(const Group& g);
/// Special with |G′| = |Z(G)| = p.
bool is_extraspecial(const Group& g);

/// Subgroups of index p in an abelian p-subgroup H of G, in a fixed order.
std::vector<SubgroupSet> index_p_subgroups(const Group& g, const SubgroupSet& h);

/// G/N is extraspecial for every maximal subgroup N of Z(G). Throws NotPGroup
/// or AbelianInput.
bool is_semi_extraspecial(const Group& g);
/// Semi-extraspecial with |G′|² = [G : G′]. False for abelian G.
bool is_ultraspecial(const Group& g);

/// Every x outside H is conjugate to every element of xH. Throws NotNormal.
bool is_camina_pair(const Group& g, const SubgroupSet& h);
/// (G, G′) is a Camina pair and G is non-abelian.
bool is_camina_group(const Group& g);

/// Non-abelian with every proper subgroup abelian, i.e. every non-commuting
/// pair generates G.
bool is_minimal_nonabelian(const Group& g);

/// Every proper centralizer is a maximal subgroup. Throws AbelianInput.
bool all_centralizers_maximal(const Group& g, const CentralizerProfile& p);
bool all_centralizers_maximal(const Group& g);

struct ClassificationReport {
  bool abelian = false;
  bool nilpotent = false;
  std::optional<unsigned> nilpotency_class;
  bool F_group = false;
  bool CA_group = false;
  bool I_group = false;
  /// p-group predicates; false for groups that are not p-groups.
  bool special_p = false;
  bool extraspecial = false;
  bool semi_extraspecial = false;
  bool ultraspecial = false;
  bool camina_group = false;
  bool minimal_nonabelian = false;
  bool all_centralizers_maximal = false;

  /// Empty for abelian G.
  std::optional<ConjugateType> conjugate_type;
  /// |G/Z(G)| = p^k when that is a prime power.
  std::optional<std::uint64_t> p;
  std::optional<unsigned> k;
  /// Common exponent m of |Z(x)/Z(G)| = p^m when uniform.
  std::optional<unsigned> m;
  /// Proper centralizers with |Z(x)/Z(G)| = p².
  std::size_t v = 0;
  std::size_t nacent_count = 0;
  std::size_t cent_count = 1;
  std::size_t zclass_count = 1;

  /// Broken implications, empty for a consistent report.
  std::vector<std::string> chain_violations;
};

ClassificationReport classify(const Group& g, const CentralizerProfile& p, const ZClassPartition& z);
ClassificationReport classify(const Group& g);

}  // namespace centra
