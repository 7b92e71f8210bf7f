#include "centra/constructors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <vector>

#include "centra/arith.hpp"
#include "centra/errors.hpp"
#include "centra/group_ops.hpp"

namespace centra {

namespace {

void check_cap(std::uint64_t order, std::size_t cap) {
  if (order > cap) throw OutOfRange("order " + std::to_string(order) + " exceeds the cap of " + std::to_string(cap));
}

Group from_rule(std::size_t n, std::string name, auto&& product) {
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Elem>(product(a, b));
  return Group::from_flat(n, std::move(flat), std::move(name), std::max(n, default_order_cap()));
}

// C_{p²} ⋊ C_p with y·x·y⁻¹ = x^{1+p}; x^i y^j has index i·p + j.
Group modular_extraspecial(unsigned p) {
  const std::size_t pp = std::size_t(p) * p;
  return from_rule(pp * p, "M(" + std::to_string(p) + "^3)", [&](std::size_t u, std::size_t v) {
    const std::size_t i = u / p, j = u % p, k = v / p, l = v % p;
    // y^j x^k = x^{k(1+p)^j} y^j
    std::size_t twist = 1;
    for (std::size_t t = 0; t < j; ++t) twist = twist * (1 + p) % pp;
    return ((i + k * twist) % pp) * p + (j + l) % p;
  });
}

Elem min_nonidentity(const SubgroupSet& s) {
  for (Elem e : s.members())
    if (e != 0) return e;
  throw OutOfRange("central product needs non-trivial centers");
}

}  // namespace

Group construct_cyclic(std::size_t n) {
  if (n == 0) throw OutOfRange("cyclic order must be positive");
  check_cap(n, default_order_cap());
  return from_rule(n, "C" + std::to_string(n), [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

namespace {

Group direct_product_unchecked(const Group& a, const Group& b) {
  const std::size_t na = a.order(), nb = b.order();
  return from_rule(na * nb, a.name() + "x" + b.name(), [&](std::size_t u, std::size_t v) {
    return std::size_t(a.mul(Elem(u / nb), Elem(v / nb))) * nb + b.mul(Elem(u % nb), Elem(v % nb));
  });
}

}  // namespace

Group construct_direct_product(const Group& a, const Group& b) {
  check_cap(std::uint64_t(a.order()) * b.order(), default_order_cap());
  return direct_product_unchecked(a, b);
}

Group construct_dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0) throw OutOfRange("dihedral order must be even and >= 2");
  check_cap(order, default_order_cap());
  const std::size_t m = order / 2;
  return from_rule(order, "D" + std::to_string(order), [m](std::size_t u, std::size_t v) -> std::size_t {
    const bool su = u >= m, sv = v >= m;
    const std::size_t i = u % m, j = v % m;
    if (!su && !sv) return (i + j) % m;               // r^i r^j
    if (!su && sv) return m + (j + m - i) % m;        // r^i s r^j = s r^{j-i}
    if (su && !sv) return m + (i + j) % m;            // s r^i r^j
    return (j + m - i) % m;                           // s r^i s r^j = r^{j-i}
  });
}

Group construct_quaternion8() {
  // unit u in {1,i,j,k} with sign: index = 2·unit + (negative ? 1 : 0)
  static constexpr int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return from_rule(8, "Q8", [](std::size_t u, std::size_t v) {
    const std::size_t a = u / 2, b = v / 2;
    const std::size_t sign = (u % 2) ^ (v % 2) ^ std::size_t(sign_mul[a][b]);
    return std::size_t(unit_mul[a][b]) * 2 + sign;
  });
}

namespace {

Group from_permutations(const std::vector<std::vector<unsigned>>& perms, std::string name) {
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
  const std::size_t k = perms.empty() ? 0 : perms[0].size();
  return from_rule(perms.size(), std::move(name), [&](std::size_t a, std::size_t b) {
    std::vector<unsigned> c(k);
    for (std::size_t x = 0; x < k; ++x) c[x] = perms[b][perms[a][x]];
    return index.at(c);
  });
}

std::vector<std::vector<unsigned>> all_permutations(unsigned k) {
  std::vector<unsigned> p(k);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<unsigned>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_even(const std::vector<unsigned>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

}  // namespace

Group construct_symmetric(unsigned k) {
  if (k < 1 || k > 5) throw OutOfRange("symmetric degree must be in 1..5");
  return from_permutations(all_permutations(k), "S" + std::to_string(k));
}

Group construct_alternating4() {
  auto perms = all_permutations(4);
  std::erase_if(perms, [](const auto& p) { return !is_even(p); });
  return from_permutations(perms, "A4");
}

Group construct_heisenberg(unsigned p) {
  if (!is_prime(p)) throw NotPrime(p);
  if (p == 2) throw OutOfRange("Heisenberg constructor needs an odd prime");
  check_cap(ipow(p, 3), default_order_cap());
  const std::size_t pp = std::size_t(p) * p;
  return from_rule(pp * p, "Heis(" + std::to_string(p) + ")", [p, pp](std::size_t u, std::size_t v) {
    const std::size_t a = u / pp, b = u / p % p, c = u % p;
    const std::size_t a2 = v / pp, b2 = v / p % p, c2 = v % p;
    return (a + a2) % p * pp + (b + b2) % p * p + (c + c2 + a * b2) % p;
  });
}

Group central_product(const Group& a, const Group& b) {
  const SubgroupSet za = center(a), zb = center(b);
  if (za.size() != zb.size() || !is_prime(za.size()))
    throw OutOfRange("central product needs centers of equal prime order");
  const Group d = direct_product_unchecked(a, b);
  const Elem z = min_nonidentity(za), w = min_nonidentity(zb);
  const std::size_t nb = b.order();
  // anti-diagonal {(z^k, w^{-k})}
  std::vector<Elem> members;
  Elem zk = 0, wk = 0;
  for (std::size_t k = 0; k < za.size(); ++k) {
    members.push_back(static_cast<Elem>(std::size_t(zk) * nb + b.inv(wk)));
    zk = a.mul(zk, z);
    wk = b.mul(wk, w);
  }
  return quotient(d, SubgroupSet::of(d.order(), members), a.name() + "o" + b.name());
}

Group construct_extraspecial(unsigned p, unsigned a, Variant variant, std::size_t order_cap) {
  if (!is_prime(p)) throw NotPrime(p);
  if (a < 1) throw OutOfRange("extraspecial parameter a must be >= 1");
  if (2 * a + 1 > 63 || ipow(p, 2 * a + 1) > order_cap)
    throw OutOfRange("order " + std::to_string(p) + "^" + std::to_string(2 * a + 1) + " exceeds the cap of " +
                     std::to_string(order_cap));
  const Group plus_factor = p == 2 ? construct_dihedral(8) : construct_heisenberg(p);
  const Group minus_factor = p == 2 ? construct_quaternion8() : modular_extraspecial(p);
  Group g = variant == Variant::Plus ? plus_factor : minus_factor;
  for (unsigned i = 1; i < a; ++i) g = central_product(plus_factor, g);
  const std::string name = "E(" + std::to_string(p) + "^" + std::to_string(2 * a + 1) +
                           (variant == Variant::Plus ? ",+)" : ",-)");
  return g.renamed(name);
}

namespace {

unsigned parse_number(std::string_view s, std::string_view what) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError(0, "bad value for " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

// "p=3,a=1,variant=+" -> ordered key/value pairs
std::vector<std::pair<std::string, std::string>> parse_params(std::string_view s) {
  std::vector<std::pair<std::string, std::string>> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const std::string_view item = s.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError(0, "expected key=value, got '" + std::string(item) + "'");
    out.emplace_back(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string_view expect_param(const std::vector<std::pair<std::string, std::string>>& params,
                              std::string_view key) {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  throw ParseError(0, "missing parameter '" + std::string(key) + "'");
}

void expect_keys(const std::vector<std::pair<std::string, std::string>>& params,
                 std::initializer_list<std::string_view> keys) {
  if (params.size() != keys.size()) throw ParseError(0, "wrong number of parameters");
  for (const auto& [k, v] : params)
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw ParseError(0, "unknown parameter '" + k + "'");
}

}  // namespace

Group construct_from_spec(std::string_view spec, std::size_t order_cap) {
  const auto colon = spec.find(':');
  const std::string_view family = spec.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view() : spec.substr(colon + 1);

  if (family == "product") {
    const auto star = rest.find('*');
    if (star == std::string_view::npos) throw ParseError(0, "product needs <specA>*<specB>");
    const Group a = construct_from_spec(rest.substr(0, star), order_cap);
    const Group b = construct_from_spec(rest.substr(star + 1), order_cap);
    check_cap(std::uint64_t(a.order()) * b.order(), order_cap);
    return construct_direct_product(a, b);
  }
  if (family == "quaternion8" || family == "alternating4") {
    if (colon != std::string_view::npos) throw ParseError(0, std::string(family) + " takes no parameters");
    check_cap(family == "quaternion8" ? 8 : 12, order_cap);
    return family == "quaternion8" ? construct_quaternion8() : construct_alternating4();
  }
  const auto params = parse_params(rest);
  if (family == "cyclic" || family == "dihedral") {
    expect_keys(params, {"n"});
    const unsigned n = parse_number(expect_param(params, "n"), "n");
    check_cap(n, order_cap);
    return family == "cyclic" ? construct_cyclic(n) : construct_dihedral(n);
  }
  if (family == "symmetric") {
    expect_keys(params, {"k"});
    const unsigned k = parse_number(expect_param(params, "k"), "k");
    static constexpr std::uint64_t factorial[] = {1, 1, 2, 6, 24, 120};
    if (k >= 1 && k <= 5) check_cap(factorial[k], order_cap);
    return construct_symmetric(k);
  }
  if (family == "heisenberg") {
    expect_keys(params, {"p"});
    const unsigned p = parse_number(expect_param(params, "p"), "p");
    if (is_prime(p) && p > 2) check_cap(ipow(p, 3), order_cap);
    return construct_heisenberg(p);
  }
  if (family == "extraspecial") {
    expect_keys(params, {"p", "a", "variant"});
    const unsigned p = parse_number(expect_param(params, "p"), "p");
    const unsigned a = parse_number(expect_param(params, "a"), "a");
    const std::string_view v = expect_param(params, "variant");
    if (v != "+" && v != "-") throw ParseError(0, "variant must be + or -");
    return construct_extraspecial(p, a, v == "+" ? Variant::Plus : Variant::Minus, order_cap);
  }
  throw ParseError(0, "unknown group family '" + std::string(family) + "'");
}

}  // namespace centra
