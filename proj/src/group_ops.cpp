#include "centra/group_ops.hpp"

#include <stdexcept>

#include "centra/arith.hpp"
#include "centra/errors.hpp"

namespace centra {

SubgroupSet center(const Group& g) {
  const auto& k = kernels::active();
  const std::size_t n = g.order();
  SetBuilder b(n);
  for (Elem z = 0; z < n; ++z)
    if (k.rows_equal(g.row(z).data(), g.column(z).data(), n)) b.insert(z);
  return std::move(b).build();
}

SubgroupSet generated_subgroup(const Group& g, std::span<const Elem> seeds) {
  const std::size_t n = g.order();
  SetBuilder in(n);
  in.insert(0);
  std::vector<Elem> elems{0};
  std::vector<Elem> gens;
  for (Elem s : seeds) {
    if (s >= n) throw std::out_of_range("generated_subgroup: seed outside the group");
    if (in.contains(s)) continue;
    gens.push_back(s);
    // finite group: closing under right multiplication by the generators suffices
    for (std::size_t q = 0; q < elems.size(); ++q)
      for (Elem x : gens) {
        const Elem t = g.mul(elems[q], x);
        if (!in.contains(t)) {
          in.insert(t);
          elems.push_back(t);
        }
      }
  }
  if (n % elems.size() != 0) throw std::logic_error("generated_subgroup: subgroup order does not divide |G|");
  return std::move(in).build();
}

SubgroupSet generated_subgroup(const Group& g, std::initializer_list<Elem> seeds) {
  return generated_subgroup(g, std::span<const Elem>(seeds.begin(), seeds.size()));
}

SubgroupSet commutator_subgroup(const Group& g) {
  const std::size_t n = g.order();
  SetBuilder seen(n);
  std::vector<Elem> comms;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      const Elem c = g.commutator(a, b);
      if (!seen.contains(c)) {
        seen.insert(c);
        comms.push_back(c);
      }
    }
  return generated_subgroup(g, comms);
}

bool is_subgroup(const Group& g, const SubgroupSet& s) {
  if (s.universe() != g.order() || !s.contains(0)) return false;
  const auto m = s.members();
  for (Elem a : m) {
    if (!s.contains(g.inv(a))) return false;
    for (Elem b : m)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

bool is_abelian_subgroup(const Group& g, const SubgroupSet& h) {
  const auto m = h.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (g.mul(m[i], m[j]) != g.mul(m[j], m[i])) return false;
  return true;
}

SubgroupSet conjugate_set(const Group& g, Elem by, const SubgroupSet& h) {
  SetBuilder b(g.order());
  for (Elem x : h.members()) b.insert(g.conj(by, x));
  return std::move(b).build();
}

SubgroupSet normalizer(const Group& g, const SubgroupSet& h) {
  const std::size_t n = g.order();
  const auto m = h.members();
  SetBuilder b(n);
  for (Elem x = 0; x < n; ++x) {
    bool keeps = true;
    for (Elem y : m)
      if (!h.contains(g.conj(x, y))) {
        keeps = false;
        break;
      }
    if (keeps) b.insert(x);
  }
  return std::move(b).build();
}

bool is_normal(const Group& g, const SubgroupSet& h) {
  const auto m = h.members();
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y : m)
      if (!h.contains(g.conj(x, y))) return false;
  return true;
}

bool is_maximal_subgroup(const Group& g, const SubgroupSet& h) {
  if (h.full()) throw NotProper();
  const std::size_t n = g.order();
  std::vector<Elem> seeds = h.members();
  seeds.push_back(0);
  SetBuilder covered(n);
  for (Elem x = 0; x < n; ++x) {
    if (h.contains(x) || covered.contains(x)) continue;
    // ⟨H, x⟩ depends only on the coset Hx
    for (Elem y : h.members()) covered.insert(g.mul(y, x));
    seeds.back() = x;
    if (!generated_subgroup(g, seeds).full()) return false;
  }
  return true;
}

QuotientMap quotient_map(const Group& g, const SubgroupSet& n, std::string name) {
  if (!is_subgroup(g, n)) throw NotNormal("argument is not a subgroup");
  if (!is_normal(g, n)) throw NotNormal("gN differs from Ng for some g");
  const std::size_t order = g.order();
  constexpr Elem kUnset = ~Elem(0);
  std::vector<Elem> coset_of(order, kUnset);
  std::vector<Elem> rep;
  const auto members = n.members();
  for (Elem x = 0; x < order; ++x) {
    if (coset_of[x] != kUnset) continue;
    const auto id = static_cast<Elem>(rep.size());
    rep.push_back(x);
    for (Elem y : members) coset_of[g.mul(x, y)] = id;
  }
  const std::size_t q = rep.size();
  std::vector<Elem> flat(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) flat[a * q + b] = coset_of[g.mul(rep[a], rep[b])];
  if (name.empty()) name = (g.name().empty() ? std::string("G") : g.name()) + "/N";
  return QuotientMap{Group::from_flat(q, std::move(flat), std::move(name), order), std::move(coset_of),
                     std::move(rep)};
}

Group quotient(const Group& g, const SubgroupSet& n, std::string name) {
  return quotient_map(g, n, std::move(name)).group;
}

std::optional<unsigned> nilpotency_class(const Group& g) {
  const std::size_t n = g.order();
  SubgroupSet current = SubgroupSet::of(n, std::vector<Elem>{0});
  unsigned c = 0;
  while (!current.full()) {
    SetBuilder next(n);
    for (Elem x = 0; x < n; ++x) {
      bool ok = true;
      for (Elem y = 0; y < n && ok; ++y) ok = current.contains(g.commutator(x, y));
      if (ok) next.insert(x);
    }
    SubgroupSet s = std::move(next).build();
    if (s == current) return std::nullopt;
    current = std::move(s);
    ++c;
  }
  return c;
}

std::size_t element_order(const Group& g, Elem x) {
  std::size_t k = 1;
  for (Elem y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

std::size_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (Elem x = 0; x < g.order(); ++x) e = lcm(e, element_order(g, x));
  return static_cast<std::size_t>(e);
}

SubgroupSet conjugacy_class(const Group& g, Elem x) {
  SetBuilder b(g.order());
  for (Elem y = 0; y < g.order(); ++y) b.insert(g.conj(y, x));
  return std::move(b).build();
}

std::vector<std::vector<Elem>> conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  std::vector<char> done(n, 0);
  std::vector<std::vector<Elem>> out;
  for (Elem x = 0; x < n; ++x) {
    if (done[x]) continue;
    auto cls = conjugacy_class(g, x).members();
    for (Elem y : cls) done[y] = 1;
    out.push_back(std::move(cls));
  }
  return out;
}

std::optional<std::uint64_t> elementary_abelian_prime(const Group& g, const SubgroupSet& h) {
  const auto pp = as_prime_power(h.size());
  if (!pp || !is_abelian_subgroup(g, h)) return std::nullopt;
  for (Elem x : h.members())
    if (x != 0 && element_order(g, x) != pp->p) return std::nullopt;
  return pp->p;
}

std::optional<std::uint64_t> elementary_abelian_prime(const Group& g) {
  return elementary_abelian_prime(g, SubgroupSet::all(g.order()));
}

std::optional<std::uint64_t> normal_sylow_order(const Group& g) {
  const auto primes = prime_divisors(g.order());
  if (primes.size() != 2) return std::nullopt;
  for (std::size_t i = 0; i < 2; ++i) {
    const std::uint64_t p = primes[i];
    const std::uint64_t q = primes[1 - i];
    const std::uint64_t pa = p_part(g.order(), p);
    if (g.order() / pa != q) continue;
    // the Sylow p-subgroup is normal iff it is the set of all p-elements
    std::uint64_t p_elements = 0;
    for (Elem x = 0; x < g.order(); ++x)
      if (pa % element_order(g, x) == 0) ++p_elements;
    if (p_elements == pa) return pa;
  }
  return std::nullopt;
}

}  // namespace centra
