#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centra/constructors.hpp"
#include "centra/group.hpp"

namespace centra {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Multiset of (|aZ|, |bZ|, |[a,b]|) over all pairs of cosets of Z(G), with
/// multiplicities. Equal for isoclinic groups.
using CommutatorSignature = std::map<std::array<std::size_t, 3>, std::size_t>;

CommutatorSignature commutator_map_signature(const Group& g);

/// phi acts on the coset indices of quotient_map(G, Z(G)); theta maps the
/// members of G′ to members of H′.
struct IsoclinismWitness {
  std::vector<Elem> phi;
  std::vector<std::pair<Elem, Elem>> theta;
};

struct IsoclinismResult {
  std::optional<IsoclinismWitness> witness;
  /// Why the groups are not isoclinic; empty when a witness was found.
  std::string reason;
  std::uint64_t nodes = 0;

  bool isoclinic() const noexcept { return witness.has_value(); }
};

/// Exhaustive search over generator images of G/Z(G). Throws
/// SearchBudgetExceeded after `budget` search nodes.
IsoclinismResult are_isoclinic(const Group& g, const Group& h, std::uint64_t budget = kDefaultSearchBudget);

/// Checks phi and theta are isomorphisms and that the commutator square
/// commutes on every pair of cosets. Independent of the search.
bool verify_witness(const Group& g, const Group& h, const IsoclinismWitness& w);

struct ExtraspecialMatch {
  bool matches = false;
  std::uint64_t p = 0;
  unsigned a = 0;
  /// The first variant found isoclinic (both are tried).
  std::optional<Variant> variant;
  std::string reason;
};

/// Compares G with the extraspecial groups of order p^(2a+1), where
/// |G/Z(G)| = p^(2a).
ExtraspecialMatch isoclinic_to_extraspecial(const Group& g, std::uint64_t budget = kDefaultSearchBudget);

/// Repeatedly factors out central subgroups of prime order meeting G′
/// trivially. The result is isoclinic to G.
Group stem_reduction(const Group& g);

}  // namespace centra
