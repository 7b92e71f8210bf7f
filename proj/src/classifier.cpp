#include "centra/classifier.hpp"

#include "centra/arith.hpp"
#include "centra/errors.hpp"
#include "centra/group_ops.hpp"

namespace centra {

std::optional<std::uint64_t> p_group_prime(const Group& g) {
  const auto pk = as_prime_power(g.order());
  if (!pk) return std::nullopt;
  return pk->p;
}

namespace {

std::uint64_t require_p_group(const Group& g) {
  const auto p = p_group_prime(g);
  if (!p) throw NotPGroup(g.order());
  return *p;
}

}  // namespace

bool is_special_p(const Group& g) {
  const std::uint64_t p = require_p_group(g);
  const SubgroupSet z = center(g);
  return z == commutator_subgroup(g) && elementary_abelian_prime(g, z) == p;
}

bool is_extraspecial(const Group& g) {
  const std::uint64_t p = require_p_group(g);
  return is_special_p(g) && center(g).size() == p;
}

std::vector<SubgroupSet> index_p_subgroups(const Group& g, const SubgroupSet& h) {
  const auto pk = as_prime_power(h.size());
  if (!pk) return {};
  const std::uint64_t p = pk->p;

  // Frattini subgroup of the abelian group H is H^p
  SetBuilder frattini(g.order());
  for (Elem x : h.members()) frattini.insert(g.power(x, p));
  const SubgroupSet phi = std::move(frattini).build();
  const auto phi_members = phi.members();

  std::vector<Elem> basis;
  SubgroupSet span = phi;
  for (Elem x : h.members()) {
    if (span.contains(x)) continue;
    basis.push_back(x);
    std::vector<Elem> seeds = phi_members;
    seeds.insert(seeds.end(), basis.begin(), basis.end());
    span = generated_subgroup(g, seeds);
  }
  const std::size_t d = basis.size();

  // coordinates of each member of H over the basis of H/H^p
  std::vector<std::vector<unsigned>> coords(g.order());
  std::vector<unsigned> e(d, 0);
  for (;;) {
    Elem prod = 0;
    for (std::size_t i = 0; i < d; ++i) prod = g.mul(prod, g.power(basis[i], e[i]));
    for (Elem w : phi_members) coords[g.mul(prod, w)] = e;
    std::size_t i = 0;
    while (i < d && ++e[i] == p) e[i++] = 0;
    if (i == d) break;
  }

  std::vector<SubgroupSet> out;
  std::vector<unsigned> f(d, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < d && ++f[i] == p) f[i++] = 0;
    if (i == d) break;
    // one functional per hyperplane: the last non-zero coefficient is 1
    std::size_t last = d;
    while (last > 0 && f[last - 1] == 0) --last;
    if (f[last - 1] != 1) continue;
    SetBuilder b(g.order());
    for (Elem x : h.members()) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < d; ++j) s += std::uint64_t(f[j]) * coords[x][j];
      if (s % p == 0) b.insert(x);
    }
    out.push_back(std::move(b).build());
  }
  return out;
}

bool is_semi_extraspecial(const Group& g) {
  require_p_group(g);
  if (g.is_abelian()) throw AbelianInput();
  const SubgroupSet z = center(g);
  for (const SubgroupSet& n : index_p_subgroups(g, z))
    if (!is_extraspecial(quotient(g, n))) return false;
  return true;
}

bool is_ultraspecial(const Group& g) {
  require_p_group(g);
  if (g.is_abelian()) return false;
  const std::size_t d = commutator_subgroup(g).size();
  return d * d == g.order() / d && is_semi_extraspecial(g);
}

bool is_camina_pair(const Group& g, const SubgroupSet& h) {
  if (!is_normal(g, h)) throw NotNormal("H");
  const auto hm = h.members();
  for (Elem x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    const SubgroupSet cls = conjugacy_class(g, x);
    for (Elem z : hm)
      if (!cls.contains(g.mul(x, z))) return false;
  }
  return true;
}

bool is_camina_group(const Group& g) {
  if (g.is_abelian()) return false;
  return is_camina_pair(g, commutator_subgroup(g));
}

bool is_minimal_nonabelian(const Group& g) {
  if (g.is_abelian()) return false;
  const auto p = profile(g);
  // proper centralizers are proper subgroups
  if (!is_CA_group(p)) return false;
  for (Elem x = 0; x < g.order(); ++x) {
    if (p.owner_map[x] == kWholeGroup) continue;
    const SubgroupSet& cx = p.proper_centralizers[p.owner_map[x]];
    for (Elem y = x + 1; y < g.order(); ++y)
      if (!cx.contains(y) && !generated_subgroup(g, {x, y}).full()) return false;
  }
  return true;
}

bool all_centralizers_maximal(const Group& g, const CentralizerProfile& p) {
  if (p.abelian()) throw AbelianInput();
  for (const auto& c : p.proper_centralizers)
    if (!is_maximal_subgroup(g, c)) return false;
  return true;
}

bool all_centralizers_maximal(const Group& g) { return all_centralizers_maximal(g, profile(g)); }

ClassificationReport classify(const Group& g, const CentralizerProfile& prof, const ZClassPartition& z) {
  ClassificationReport r;
  r.abelian = g.is_abelian();
  r.nilpotency_class = nilpotency_class(g);
  r.nilpotent = r.nilpotency_class.has_value();
  r.cent_count = prof.cent_count;
  r.zclass_count = z.zclass_count();
  r.nacent_count = prof.nacent_count;

  if (const auto pk = as_prime_power(prof.center_index())) {
    r.p = pk->p;
    r.k = pk->k;
  }
  if (!r.abelian) {
    r.F_group = is_F_group(prof).holds;
    r.CA_group = is_CA_group(prof);
    r.I_group = is_I_group(prof);
    r.conjugate_type = conjugate_type(prof);
    r.minimal_nonabelian = is_minimal_nonabelian(g);
    r.all_centralizers_maximal = all_centralizers_maximal(g, prof);
    r.camina_group = is_camina_group(g);
    if (r.p) {
      const std::uint64_t p2 = *r.p * *r.p;
      const std::size_t s = prof.center_quotient_size(0);
      bool uniform = true;
      for (std::size_t i = 0; i < prof.centers.size(); ++i) {
        if (prof.center_quotient_size(i) != s) uniform = false;
        if (prof.center_quotient_size(i) == p2) ++r.v;
      }
      const auto pm = as_prime_power(s);
      if (uniform && pm && pm->p == *r.p) r.m = pm->k;
    }
  }

  if (p_group_prime(g)) {
    r.special_p = is_special_p(g);
    r.extraspecial = is_extraspecial(g);
    if (!r.abelian) {
      r.semi_extraspecial = is_semi_extraspecial(g);
      r.ultraspecial = is_ultraspecial(g);
    }
  }

  auto need = [&](bool ok, const char* what) {
    if (!ok) r.chain_violations.emplace_back(what);
  };
  need(!r.ultraspecial || r.semi_extraspecial, "ultraspecial without semi_extraspecial");
  need(!r.semi_extraspecial || r.special_p, "semi_extraspecial without special_p");
  need(!r.extraspecial || r.special_p, "extraspecial without special_p");
  if (p_group_prime(g)) {
    const bool camina_class2 = r.camina_group && r.nilpotency_class == 2u;
    need(camina_class2 == r.semi_extraspecial, "camina class 2 disagrees with semi_extraspecial");
  }
  return r;
}

ClassificationReport classify(const Group& g) {
  const auto p = profile(g);
  return classify(g, p, z_partition(g, p));
}

}  // namespace centra
