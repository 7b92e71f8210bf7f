#include "centra/isoclinism.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "centra/arith.hpp"
#include "centra/errors.hpp"
#include "centra/group_ops.hpp"

namespace centra {

namespace {

constexpr Elem kUnset = std::numeric_limits<Elem>::max();

/// Everything the search needs about one side.
struct Side {
  const Group* g = nullptr;
  QuotientMap qm;
  std::size_t q = 0;
  /// [rep a, rep b] as an element of G, row-major over coset pairs.
  std::vector<Elem> comm;
  SubgroupSet derived;
  std::vector<std::size_t> coset_order;
  /// Per coset: its order, then the order histogram of [a, b] over all b.
  std::vector<std::vector<std::size_t>> fingerprint;

  explicit Side(const Group& grp) : g(&grp), qm(quotient_map(grp, center(grp))) {
    q = qm.group.order();
    derived = commutator_subgroup(grp);
    comm.resize(q * q);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) comm[a * q + b] = grp.commutator(qm.representative[a], qm.representative[b]);
    coset_order.resize(q);
    for (Elem a = 0; a < q; ++a) coset_order[a] = element_order(qm.group, a);
    std::vector<std::size_t> elem_order(grp.order(), 0);
    fingerprint.resize(q);
    for (Elem a = 0; a < q; ++a) {
      std::map<std::size_t, std::size_t> hist;
      for (Elem b = 0; b < q; ++b) {
        const Elem c = comm[a * q + b];
        if (elem_order[c] == 0) elem_order[c] = element_order(grp, c);
        ++hist[elem_order[c]];
      }
      auto& fp = fingerprint[a];
      fp.push_back(coset_order[a]);
      for (const auto& [o, count] : hist) {
        fp.push_back(o);
        fp.push_back(count);
      }
    }
  }

  Elem c(Elem a, Elem b) const { return comm[a * q + b]; }
};

class Search {
 public:
  Search(const Side& gs, const Side& hs, std::uint64_t budget) : G(gs), H(hs), budget_(budget) {
    phi_.assign(G.q, kUnset);
    phi_used_.assign(H.q, kUnset);
    theta_.assign(G.g->order(), kUnset);
    theta_used_.assign(H.g->order(), kUnset);
    choose_generators();
  }

  std::optional<IsoclinismWitness> run() {
    // identity coset and identity commutator
    assign_phi(0, 0);
    assign_theta(0, 0);
    mapped_.push_back(0);
    if (descend(0)) return witness();
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  enum class Slot { Phi, Theta };
  struct Undo {
    Slot slot;
    Elem from;
  };

  void choose_generators() {
    // rare fingerprints first: they admit the fewest images
    std::map<std::vector<std::size_t>, std::size_t> freq;
    for (const auto& fp : G.fingerprint) ++freq[fp];
    std::vector<Elem> order(G.q);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Elem a, Elem b) { return freq[G.fingerprint[a]] < freq[G.fingerprint[b]]; });
    SubgroupSet span = SubgroupSet::of(G.q, std::vector<Elem>{0});
    for (Elem a : order) {
      if (span.contains(a)) continue;
      gens_.push_back(a);
      span = generated_subgroup(G.qm.group, gens_);
    }
    for (Elem a : gens_) {
      std::vector<Elem> c;
      for (Elem b = 0; b < H.q; ++b)
        if (H.fingerprint[b] == G.fingerprint[a]) c.push_back(b);
      candidates_.push_back(std::move(c));
    }
  }

  void assign_phi(Elem a, Elem b) {
    phi_[a] = b;
    phi_used_[b] = a;
    log_.push_back({Slot::Phi, a});
  }

  void assign_theta(Elem c, Elem d) {
    theta_[c] = d;
    theta_used_[d] = c;
    log_.push_back({Slot::Theta, c});
  }

  void rollback(std::size_t mark, std::size_t mapped_mark) {
    while (log_.size() > mark) {
      const Undo u = log_.back();
      log_.pop_back();
      if (u.slot == Slot::Phi) {
        phi_used_[phi_[u.from]] = kUnset;
        phi_[u.from] = kUnset;
      } else {
        theta_used_[theta_[u.from]] = kUnset;
        theta_[u.from] = kUnset;
      }
    }
    mapped_.resize(mapped_mark);
  }

  bool set_phi(Elem a, Elem b) {
    if (phi_[a] != kUnset) return phi_[a] == b;
    if (phi_used_[b] != kUnset) return false;
    if (G.fingerprint[a] != H.fingerprint[b]) return false;
    assign_phi(a, b);
    mapped_.push_back(a);
    return true;
  }

  bool set_theta(Elem c, Elem d) {
    if (theta_[c] != kUnset) return theta_[c] == d;
    if (theta_used_[d] != kUnset) return false;
    assign_theta(c, d);
    return true;
  }

  /// Extends phi from ⟨g_0..g_{i-1}⟩ to ⟨g_0..g_i⟩ with g_i -> img, checking
  /// Cayley-graph edges and the commutator square on new elements.
  bool extend(std::size_t i, Elem img) {
    const std::size_t first_new = mapped_.size();
    if (!set_phi(gens_[i], img)) return false;
    for (std::size_t at = 0; at < mapped_.size(); ++at) {
      const Elem x = mapped_[at];
      for (std::size_t j = 0; j <= i; ++j)
        if (!set_phi(G.qm.group.mul(x, gens_[j]), H.qm.group.mul(phi_[x], phi_[gens_[j]]))) return false;
    }
    for (std::size_t at = first_new; at < mapped_.size(); ++at) {
      const Elem x = mapped_[at];
      for (const Elem y : mapped_) {
        if (!set_theta(G.c(x, y), H.c(phi_[x], phi_[y]))) return false;
        if (!set_theta(G.c(y, x), H.c(phi_[y], phi_[x]))) return false;
      }
    }
    return true;
  }

  /// theta is known on all commutator values; it must extend to an
  /// isomorphism G′ -> H′.
  bool close_theta() {
    std::vector<Elem> keys;
    for (Elem c : G.derived.members())
      if (theta_[c] != kUnset) keys.push_back(c);
    std::vector<Elem> queue{0};
    std::vector<bool> seen(G.g->order(), false);
    seen[0] = true;
    for (std::size_t at = 0; at < queue.size(); ++at) {
      const Elem x = queue[at];
      for (Elem t : keys) {
        const Elem y = G.g->mul(x, t);
        if (!set_theta(y, H.g->mul(theta_[x], theta_[t]))) return false;
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    return queue.size() == G.derived.size();
  }

  bool descend(std::size_t i) {
    if (i == gens_.size()) {
      const std::size_t mark = log_.size(), mapped_mark = mapped_.size();
      if (close_theta()) return true;
      rollback(mark, mapped_mark);
      return false;
    }
    for (Elem img : candidates_[i]) {
      if (++nodes_ > budget_) throw SearchBudgetExceeded(budget_);
      if (phi_used_[img] != kUnset) continue;
      const std::size_t mark = log_.size(), mapped_mark = mapped_.size();
      if (extend(i, img) && descend(i + 1)) return true;
      rollback(mark, mapped_mark);
    }
    return false;
  }

  IsoclinismWitness witness() const {
    IsoclinismWitness w;
    w.phi = phi_;
    for (Elem c : G.derived.members()) w.theta.emplace_back(c, theta_[c]);
    return w;
  }

  const Side& G;
  const Side& H;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<Elem> phi_, phi_used_, theta_, theta_used_;
  std::vector<Elem> mapped_;
  std::vector<Undo> log_;
};

CommutatorSignature signature_of(const Side& s) {
  CommutatorSignature sig;
  std::vector<std::size_t> elem_order(s.g->order(), 0);
  for (Elem a = 0; a < s.q; ++a)
    for (Elem b = 0; b < s.q; ++b) {
      const Elem c = s.c(a, b);
      if (elem_order[c] == 0) elem_order[c] = element_order(*s.g, c);
      ++sig[{s.coset_order[a], s.coset_order[b], elem_order[c]}];
    }
  return sig;
}

}  // namespace

CommutatorSignature commutator_map_signature(const Group& g) { return signature_of(Side(g)); }

IsoclinismResult are_isoclinic(const Group& g, const Group& h, std::uint64_t budget) {
  IsoclinismResult r;
  const Side gs(g), hs(h);
  if (gs.q != hs.q) {
    r.reason = "central quotient orders differ (" + std::to_string(gs.q) + " vs " + std::to_string(hs.q) + ")";
    return r;
  }
  if (gs.derived.size() != hs.derived.size()) {
    r.reason = "commutator subgroup orders differ (" + std::to_string(gs.derived.size()) + " vs " +
               std::to_string(hs.derived.size()) + ")";
    return r;
  }
  if (signature_of(gs) != signature_of(hs)) {
    r.reason = "commutator map signatures differ";
    return r;
  }
  Search s(gs, hs, budget);
  r.witness = s.run();
  r.nodes = s.nodes();
  if (!r.witness) {
    r.reason = "no compatible isomorphism pair exists";
  } else if (!verify_witness(g, h, *r.witness)) {
    throw std::logic_error("isoclinism search produced an invalid witness");
  }
  return r;
}

bool verify_witness(const Group& g, const Group& h, const IsoclinismWitness& w) {
  const QuotientMap qg = quotient_map(g, center(g));
  const QuotientMap qh = quotient_map(h, center(h));
  const std::size_t q = qg.group.order();
  if (qh.group.order() != q || w.phi.size() != q) return false;

  std::vector<bool> hit(q, false);
  for (Elem a = 0; a < q; ++a) {
    if (w.phi[a] >= q || hit[w.phi[a]]) return false;
    hit[w.phi[a]] = true;
  }
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      if (w.phi[qg.group.mul(a, b)] != qh.group.mul(w.phi[a], w.phi[b])) return false;

  const SubgroupSet dg = commutator_subgroup(g), dh = commutator_subgroup(h);
  if (dg.size() != dh.size() || w.theta.size() != dg.size()) return false;
  std::vector<Elem> theta(g.order(), kUnset);
  std::vector<bool> used(h.order(), false);
  for (const auto& [c, d] : w.theta) {
    if (!dg.contains(c) || !dh.contains(d) || theta[c] != kUnset || used[d]) return false;
    theta[c] = d;
    used[d] = true;
  }
  for (const auto& [c1, d1] : w.theta)
    for (const auto& [c2, d2] : w.theta)
      if (theta[g.mul(c1, c2)] != h.mul(d1, d2)) return false;

  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b) {
      const Elem lhs = theta[g.commutator(qg.representative[a], qg.representative[b])];
      const Elem rhs = h.commutator(qh.representative[w.phi[a]], qh.representative[w.phi[b]]);
      if (lhs != rhs) return false;
    }
  return true;
}

ExtraspecialMatch isoclinic_to_extraspecial(const Group& g, std::uint64_t budget) {
  ExtraspecialMatch m;
  const std::size_t index = g.order() / center(g).size();
  const auto pk = as_prime_power(index);
  if (!pk || pk->k % 2 != 0) {
    m.reason = "|G/Z(G)| = " + std::to_string(index) + " is not an even power of a prime";
    return m;
  }
  m.p = pk->p;
  m.a = pk->k / 2;
  const std::uint64_t order = index * pk->p;
  if (order > default_order_cap()) {
    m.reason = "extraspecial group of order " + std::to_string(order) + " exceeds the order cap";
    return m;
  }
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    const Group e = construct_extraspecial(static_cast<unsigned>(m.p), m.a, v);
    const auto r = are_isoclinic(g, e, budget);
    if (r.isoclinic()) {
      m.matches = true;
      m.variant = v;
      return m;
    }
    m.reason = r.reason;
  }
  return m;
}

Group stem_reduction(const Group& g) {
  Group h = g;
  for (;;) {
    const SubgroupSet z = center(h);
    const SubgroupSet d = commutator_subgroup(h);
    std::optional<Elem> pick;
    for (Elem x : z.members())
      if (x != 0 && !d.contains(x) && is_prime(element_order(h, x))) {
        pick = x;
        break;
      }
    if (!pick) return h.renamed("stem(" + g.name() + ")");
    h = quotient(h, generated_subgroup(h, {*pick}));
  }
}

}  // namespace centra
