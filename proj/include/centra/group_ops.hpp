#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "centra/group.hpp"
#include "centra/subgroup_set.hpp"

namespace centra {

/// { z : z·g = g·z for all g }
SubgroupSet center(const Group& g);

/// Subgroup generated by all commutators [a,b] = a⁻¹b⁻¹ab.
SubgroupSet commutator_subgroup(const Group& g);

/// Smallest subgroup containing `seeds`; {0} for no seeds.
SubgroupSet generated_subgroup(const Group& g, std::span<const Elem> seeds);
SubgroupSet generated_subgroup(const Group& g, std::initializer_list<Elem> seeds);

bool is_subgroup(const Group& g, const SubgroupSet& s);
bool is_abelian_subgroup(const Group& g, const SubgroupSet& h);

/// g·H·g⁻¹ for every member of H.
SubgroupSet conjugate_set(const Group& g, Elem by, const SubgroupSet& h);

/// { g : g·H·g⁻¹ = H }
SubgroupSet normalizer(const Group& g, const SubgroupSet& h);
bool is_normal(const Group& g, const SubgroupSet& h);

/// True iff ⟨H, x⟩ = G for every x outside H. Throws NotProper for H = G.
bool is_maximal_subgroup(const Group& g, const SubgroupSet& h);

struct QuotientMap {
  Group group;
  /// Element of G -> coset index in `group`.
  std::vector<Elem> coset_of;
  /// Coset index -> its minimal member in G.
  std::vector<Elem> representative;
};

/// G/N with cosets labelled in ascending order of their minimal member, so the
/// identity coset is 0. Throws NotNormal when N is not a normal subgroup.
QuotientMap quotient_map(const Group& g, const SubgroupSet& n, std::string name = {});
Group quotient(const Group& g, const SubgroupSet& n, std::string name = {});

/// Length of the upper central series; nullopt when it stalls below G.
/// The trivial group has class 0 and a non-trivial abelian group class 1.
std::optional<unsigned> nilpotency_class(const Group& g);

std::size_t element_order(const Group& g, Elem x);
std::size_t exponent(const Group& g);

SubgroupSet conjugacy_class(const Group& g, Elem x);
/// Classes ordered by minimal member; members ascending.
std::vector<std::vector<Elem>> conjugacy_classes(const Group& g);

/// p when G is elementary abelian of order p^k (k >= 1).
std::optional<std::uint64_t> elementary_abelian_prime(const Group& g);
/// Same test for a subgroup of G.
std::optional<std::uint64_t> elementary_abelian_prime(const Group& g, const SubgroupSet& h);

/// Order of the unique Sylow p-subgroup of G when it is normal, for the prime p
/// whose Sylow subgroup is normal and whose complement has prime order.
/// Used for groups of order p^a·q; nullopt for anything else.
std::optional<std::uint64_t> normal_sylow_order(const Group& g);

}  // namespace centra
