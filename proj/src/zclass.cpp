#include "centra/zclass.hpp"

#include <numeric>

#include "centra/arith.hpp"
#include "centra/group_ops.hpp"

namespace centra {

bool z_equivalent(const Group& g, Elem x, Elem y) {
  const SubgroupSet cx = centralizer(g, x);
  const SubgroupSet cy = centralizer(g, y);
  if (cx.size() != cy.size()) return false;
  for (Elem h = 0; h < g.order(); ++h)
    if (conjugate_set(g, h, cy) == cx) return true;
  return false;
}

namespace {

std::size_t find(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

ZClassPartition z_partition(const Group& g, const CentralizerProfile& p) {
  const std::size_t n = g.order();
  const std::size_t m = p.proper_centralizers.size();

  // g·C(x)·g⁻¹ = C(g·x·g⁻¹), so conjugating the owner is enough
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < m; ++i)
    for (Elem h = 0; h < n; ++h) {
      const std::size_t a = find(parent, i), b = find(parent, p.owner_map[g.conj(h, p.owners[i])]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  std::vector<std::size_t> fprime(m, 0);
  for (Elem x = 0; x < n; ++x)
    if (p.owner_map[x] != kWholeGroup) ++fprime[p.owner_map[x]];

  ZClassPartition z;
  z.class_of.assign(n, 0);
  // element 0 is central, so the central class is created first
  std::size_t central_slot = kWholeGroup;
  std::vector<std::size_t> class_of_root(m, kWholeGroup);
  for (Elem x = 0; x < n; ++x) {
    const std::size_t id = p.owner_map[x];
    std::size_t& slot = id == kWholeGroup ? central_slot : class_of_root[find(parent, id)];
    if (slot == kWholeGroup) {
      slot = z.classes.size();
      ZClass c;
      c.representative = x;
      c.centralizer_id = id;
      if (id == kWholeGroup) {
        c.fprime_size = p.center.size();
      } else {
        c.fprime_size = fprime[id];
        c.normalizer_index = n / normalizer(g, p.proper_centralizers[id]).size();
      }
      z.classes.push_back(std::move(c));
    }
    z.classes[slot].members.push_back(x);
    z.class_of[x] = slot;
  }
  return z;
}

ZClassPartition z_partition(const Group& g) { return z_partition(g, profile(g)); }

CountComparison zclass_count_equals_cent_count(const Group& g, const CentralizerProfile& p,
                                               const ZClassPartition& z) {
  CountComparison c;
  c.zclass_count = z.zclass_count();
  c.cent_count = p.cent_count;
  for (const auto& h : p.proper_centralizers)
    if (!is_normal(g, h)) {
      c.all_centralizers_normal = false;
      break;
    }
  return c;
}

CountComparison zclass_count_equals_cent_count(const Group& g) {
  const auto p = profile(g);
  return zclass_count_equals_cent_count(g, p, z_partition(g, p));
}

CheckResult check_max_zclass_characterization(const Group& g, const CentralizerProfile& p,
                                              const ZClassPartition& z) {
  CheckResult r;
  if (!is_F_group(p).holds) {
    r.detail = "G is not an F-group";
    return r;
  }
  const auto pk = as_prime_power(p.center_index());
  if (!pk) {
    r.detail = "|G/Z(G)| = " + std::to_string(p.center_index()) + " is not a prime power";
    return r;
  }
  const std::uint64_t target = (ipow(pk->p, pk->k) - 1) / (pk->p - 1) + 1;
  const bool lhs = z.zclass_count() == target;

  const bool elementary = elementary_abelian_prime(quotient(g, p.center)) == pk->p;
  bool generated = true;
  const auto zs = p.center.members();
  for (Elem x = 0; x < g.order() && generated; ++x) {
    if (p.owner_map[x] == kWholeGroup) continue;
    std::vector<Elem> seeds = zs;
    seeds.push_back(x);
    generated = generated_subgroup(g, seeds) == p.centers[p.owner_map[x]];
  }
  const bool rhs = elementary && generated;

  r.status = lhs == rhs ? CheckStatus::Holds : CheckStatus::Violation;
  r.detail = "zclass=" + std::to_string(z.zclass_count()) + " target=" + std::to_string(target) +
             " elementary=" + (elementary ? "1" : "0") + " Z(x)=<x,Z>:" + (generated ? "1" : "0");
  return r;
}

CheckResult check_max_zclass_characterization(const Group& g) {
  const auto p = profile(g);
  return check_max_zclass_characterization(g, p, z_partition(g, p));
}

UpperBoundResult upper_bound_check(const CentralizerProfile& p, const ZClassPartition& z) {
  UpperBoundResult r;
  r.bound_holds = z.zclass_count() <= p.center_index();
  r.equality = z.zclass_count() == p.center_index();
  for (std::size_t i = 0; i < p.centers.size(); ++i)
    if (p.center_quotient_size(i) != 2) r.all_quotients_two = false;
  return r;
}

UpperBoundResult upper_bound_check(const Group& g) {
  const auto p = profile(g);
  return upper_bound_check(p, z_partition(g, p));
}

}  // namespace centra
