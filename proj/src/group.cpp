#include "centra/group.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "centra/errors.hpp"

namespace centra {

namespace {
std::atomic<std::size_t> order_cap_override{0};
}

void set_order_cap(std::size_t cap) { order_cap_override.store(cap); }

std::size_t default_order_cap() {
  if (const std::size_t cap = order_cap_override.load()) return cap;
  if (const char* env = std::getenv("CENTRA_ORDER_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultOrderCap;
}

namespace {

std::string at(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Light's test: if (x·a)·y = x·(a·y) holds for every a in a set whose
// left-normed products reach every element, the operation is associative.
void check_associative(std::size_t n, const std::vector<Elem>& mul) {
  auto m = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(mul[a * n + b]); };

  std::vector<std::size_t> gens;
  std::vector<char> reached(n, 0);
  std::vector<std::size_t> frontier{0};
  reached[0] = 1;
  std::size_t reached_count = 1;
  auto close = [&] {
    // right multiplication by the generators, breadth first
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < n; ++i)
      if (reached[i]) all.push_back(i);
    for (std::size_t q = 0; q < all.size(); ++q)
      for (std::size_t g : gens) {
        const std::size_t t = m(all[q], g);
        if (!reached[t]) {
          reached[t] = 1;
          ++reached_count;
          all.push_back(t);
        }
      }
  };
  for (std::size_t i = 1; i < n && reached_count < n; ++i) {
    if (reached[i]) continue;
    gens.push_back(i);
    close();
  }

  for (std::size_t a : gens)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t xa = m(x, a);
      for (std::size_t y = 0; y < n; ++y)
        if (m(xa, y) != m(x, m(a, y)))
          throw NotAGroup("associativity fails for " + std::to_string(x) + "·" + std::to_string(a) + "·" +
                          std::to_string(y));
    }
}

}  // namespace

Group Group::from_table(const std::vector<std::vector<Elem>>& rows, std::string name, std::size_t order_cap) {
  const std::size_t n = rows.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw NotAGroup("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(n));
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return from_flat(n, std::move(flat), std::move(name), order_cap);
}

Group Group::from_flat(std::size_t n, std::vector<Elem> flat, std::string name, std::size_t order_cap) {
  if (n == 0) throw NotAGroup("empty table");
  if (n > order_cap) throw OrderCapExceeded(order_cap);
  if (flat.size() != n * n) throw NotAGroup("table is not square");
  for (std::size_t k = 0; k < flat.size(); ++k)
    if (flat[k] >= n) throw NotAGroup("entry at " + at(k / n, k % n) + " is out of range");

  for (std::size_t j = 0; j < n; ++j) {
    if (flat[j] != j) throw NotAGroup("index 0 is not a left identity");
    if (flat[j * n] != j) throw NotAGroup("index 0 is not a right identity");
  }

  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[flat[i * n + j]]) throw NotAGroup("row " + std::to_string(i) + " repeats an entry");
      seen[flat[i * n + j]] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[flat[j * n + i]]) throw NotAGroup("column " + std::to_string(i) + " repeats an entry");
      seen[flat[j * n + i]] = 1;
    }
  }

  auto t = std::make_shared<Tables>();
  t->n = n;
  t->inv.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    while (flat[i * n + j] != 0) ++j;
    if (flat[j * n + i] != 0)
      throw NotAGroup("element " + std::to_string(i) + " has no two-sided inverse");
    t->inv[i] = static_cast<Elem>(j);
  }

  check_associative(n, flat);

  t->mul_t.resize(n * n);
  bool abelian = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t->mul_t[j * n + i] = flat[i * n + j];
      if (flat[i * n + j] != flat[j * n + i]) abelian = false;
    }
  t->mul = std::move(flat);
  t->abelian = abelian;
  return Group(std::move(t), std::move(name));
}

Group Group::renamed(std::string name) const {
  return Group(t_, std::move(name));
}

Elem Group::power(Elem a, std::size_t k) const noexcept {
  Elem r = 0;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::vector<std::vector<Elem>> Group::table() const {
  std::vector<std::vector<Elem>> rows(order());
  for (std::size_t i = 0; i < order(); ++i) {
    auto r = row(static_cast<Elem>(i));
    rows[i].assign(r.begin(), r.end());
  }
  return rows;
}

}  // namespace centra
