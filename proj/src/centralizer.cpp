#include "centra/centralizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "centra/arith.hpp"
#include "centra/errors.hpp"
#include "centra/group_ops.hpp"

namespace centra {

SubgroupSet centralizer(const Group& g, Elem x) {
  const std::size_t n = g.order();
  std::vector<kernels::Word> w(kernels::words_for(n));
  // row(x)[h] = x·h and column(x)[h] = h·x
  kernels::active().equal_mask(g.row(x).data(), g.column(x).data(), n, w.data());
  return SubgroupSet(n, std::move(w));
}

CentralizerProfile profile(const Group& g) {
  const std::size_t n = g.order();
  const auto& k = kernels::active();
  CentralizerProfile p;
  p.order = n;
  p.center = center(g);
  p.owner_map.assign(n, kWholeGroup);
  if (p.center.full()) return p;

  // the membership words are the canonical key
  std::map<std::vector<kernels::Word>, std::size_t> ids;
  std::vector<kernels::Word> scratch(kernels::words_for(n));
  for (Elem x = 0; x < n; ++x) {
    if (p.center.contains(x)) continue;
    k.equal_mask(g.row(x).data(), g.column(x).data(), n, scratch.data());
    auto [it, inserted] = ids.try_emplace(scratch, p.proper_centralizers.size());
    if (inserted) {
      p.proper_centralizers.emplace_back(n, scratch);
      p.owners.push_back(x);
    }
    p.owner_map[x] = it->second;
  }

  const std::size_t m = p.proper_centralizers.size();
  p.cent_count = m + 1;

  // c ∈ Z(C) iff C ⊆ C(c)
  p.centers.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const SubgroupSet& c = p.proper_centralizers[i];
    SetBuilder b(n);
    for (Elem y : c.members()) {
      const std::size_t id = p.owner_map[y];
      if (id == kWholeGroup || c.subset_of(p.proper_centralizers[id])) b.insert(y);
    }
    p.centers.push_back(std::move(b).build());
  }

  std::vector<std::size_t> by_size(m);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
    return p.proper_centralizers[a].size() < p.proper_centralizers[b].size();
  });
  std::vector<std::size_t> chain(m, 1);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < a; ++b) {
      const std::size_t i = by_size[a], j = by_size[b];
      if (p.proper_centralizers[j].strict_subset_of(p.proper_centralizers[i])) chain[i] = std::max(chain[i], chain[j] + 1);
    }
  p.rank = *std::max_element(chain.begin(), chain.end());

  p.nacent_count = 1;
  for (std::size_t i = 0; i < m; ++i)
    if (!p.centralizer_is_abelian(i)) ++p.nacent_count;
  return p;
}

FGroupResult is_F_group(const CentralizerProfile& p) {
  const std::size_t m = p.proper_centralizers.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && p.proper_centralizers[i].strict_subset_of(p.proper_centralizers[j]))
        return {false, std::make_pair(p.owners[i], p.owners[j])};
  return {};
}

FGroupResult is_F_group(const Group& g) { return is_F_group(profile(g)); }

StrictPartitionResult is_strict_center_partition(const CentralizerProfile& p) {
  if (p.abelian()) throw AbelianInput();
  std::vector<const SubgroupSet*> family;
  for (const auto& z : p.centers)
    if (std::none_of(family.begin(), family.end(), [&](const SubgroupSet* f) { return *f == z; }))
      family.push_back(&z);
  std::vector<unsigned> cover(p.order, 0);
  for (const SubgroupSet* z : family)
    for (Elem y : z->difference(p.center).members()) ++cover[y];
  for (Elem y = 0; y < p.order; ++y)
    if (!p.center.contains(y) && cover[y] != 1) return {false, y};
  return {};
}

StrictPartitionResult is_strict_center_partition(const Group& g) { return is_strict_center_partition(profile(g)); }

std::size_t poset_rank(const CentralizerProfile& p) {
  if (p.abelian()) throw AbelianInput();
  return p.rank;
}

std::string ConjugateType::to_string() const {
  if (indices.empty()) return "none";
  if (uniform()) return "(" + std::to_string(index()) + ",1)";
  std::string s = "mixed:";
  for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
  return s;
}

ConjugateType conjugate_type(const CentralizerProfile& p) {
  if (p.abelian()) throw AbelianInput();
  ConjugateType t;
  for (std::size_t i = 0; i < p.proper_centralizers.size(); ++i) t.indices.push_back(p.index(i));
  std::sort(t.indices.begin(), t.indices.end());
  t.indices.erase(std::unique(t.indices.begin(), t.indices.end()), t.indices.end());
  return t;
}

ConjugateType conjugate_type(const Group& g) { return conjugate_type(profile(g)); }

bool is_CA_group(const CentralizerProfile& p) {
  if (p.abelian()) throw AbelianInput();
  for (std::size_t i = 0; i < p.proper_centralizers.size(); ++i)
    if (!p.centralizer_is_abelian(i)) return false;
  return true;
}

bool is_CA_group(const Group& g) { return is_CA_group(profile(g)); }

bool is_I_group(const CentralizerProfile& p) {
  if (p.abelian()) throw AbelianInput();
  for (const auto& c : p.proper_centralizers)
    if (c.size() != p.proper_centralizers.front().size()) return false;
  return true;
}

bool is_I_group(const Group& g) { return is_I_group(profile(g)); }

namespace {

// Shared gate of both formulas: non-abelian F-group with |G/Z(G)| = p^k.
bool gate(const CentralizerProfile& prof, FormulaResult& r) {
  if (prof.abelian()) {
    r.unmet = "G is abelian";
    return false;
  }
  if (!is_F_group(prof).holds) {
    r.unmet = "G is not an F-group";
    return false;
  }
  const auto pk = as_prime_power(prof.center_index());
  if (!pk) {
    r.unmet = "|G/Z(G)| = " + std::to_string(prof.center_index()) + " is not a prime power";
    return false;
  }
  r.p = pk->p;
  r.k = pk->k;
  return true;
}

}  // namespace

FormulaResult count_by_formula_f1(const CentralizerProfile& prof) {
  FormulaResult r;
  if (!gate(prof, r)) return r;
  const std::size_t s = prof.center_quotient_size(0);
  for (std::size_t i = 0; i < prof.centers.size(); ++i)
    if (prof.center_quotient_size(i) != s) {
      r.unmet = "|Z(x)/Z(G)| is not uniform";
      return r;
    }
  const auto pm = as_prime_power(s);
  if (!pm || pm->p != r.p) {
    r.unmet = "|Z(x)/Z(G)| = " + std::to_string(s) + " is not a power of p";
    return r;
  }
  r.m = pm->k;
  r.applicable = true;
  const std::uint64_t num = ipow(r.p, r.k) - 1, den = ipow(r.p, r.m) - 1;
  r.integral = num % den == 0;
  r.value = static_cast<std::int64_t>(num / den) + 1;
  return r;
}

FormulaResult count_by_formula_f1(const Group& g) { return count_by_formula_f1(profile(g)); }

FormulaResult count_by_formula_pp1(const CentralizerProfile& prof) {
  FormulaResult r;
  if (!gate(prof, r)) return r;
  const std::size_t p2 = r.p * r.p;
  for (std::size_t i = 0; i < prof.centers.size(); ++i) {
    const std::size_t s = prof.center_quotient_size(i);
    if (s > p2) {
      r.unmet = "|Z(x)/Z(G)| = " + std::to_string(s) + " exceeds p^2";
      return r;
    }
    if (s == p2) ++r.v;
  }
  r.applicable = true;
  std::int64_t sum = 2;
  for (unsigned i = 1; i < r.k; ++i) sum += static_cast<std::int64_t>(ipow(r.p, i));
  r.value = sum - static_cast<std::int64_t>(r.v * r.p);
  return r;
}

FormulaResult count_by_formula_pp1(const Group& g) { return count_by_formula_pp1(profile(g)); }

}  // namespace centra
