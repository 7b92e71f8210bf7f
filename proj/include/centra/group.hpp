#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "centra/subgroup_set.hpp"

namespace centra {

inline constexpr std::size_t kDefaultOrderCap = 2048;

/// The order cap in effect: the value passed to set_order_cap, else
/// `CENTRA_ORDER_CAP` from the environment when it holds a positive integer,
/// else kDefaultOrderCap.
std::size_t default_order_cap();

/// Process-wide override of the order cap; 0 clears it.
void set_order_cap(std::size_t cap);

/// Finite group stored as a dense multiplication table. Element 0 is the
/// identity. Copies share the (immutable) tables.
class Group {
 public:
  /// Validates the table (shape, identity at 0, Latin square, two-sided
  /// inverses, associativity) and derives the inverse table.
  /// Throws NotAGroup, or OrderCapExceeded when n > order_cap.
  static Group from_table(const std::vector<std::vector<Elem>>& rows, std::string name = {},
                          std::size_t order_cap = default_order_cap());

  /// Same as from_table for a row-major n*n table.
  static Group from_flat(std::size_t n, std::vector<Elem> flat, std::string name = {},
                         std::size_t order_cap = default_order_cap());

  std::size_t order() const noexcept { return t_->n; }
  const std::string& name() const noexcept { return name_; }
  Group renamed(std::string name) const;

  Elem mul(Elem a, Elem b) const noexcept { return t_->mul[std::size_t(a) * t_->n + b]; }
  Elem inv(Elem a) const noexcept { return t_->inv[a]; }
  /// g·x·g⁻¹
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv(g)); }
  /// [a,b] = a⁻¹b⁻¹ab
  Elem commutator(Elem a, Elem b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem power(Elem a, std::size_t k) const noexcept;

  /// Products a·g for g = 0..n-1.
  std::span<const Elem> row(Elem a) const noexcept { return {t_->mul.data() + std::size_t(a) * t_->n, t_->n}; }
  /// Products g·a for g = 0..n-1.
  std::span<const Elem> column(Elem a) const noexcept {
    return {t_->mul_t.data() + std::size_t(a) * t_->n, t_->n};
  }

  bool is_abelian() const noexcept { return t_->abelian; }

  std::vector<std::vector<Elem>> table() const;

  friend bool operator==(const Group& a, const Group& b) { return a.t_->mul == b.t_->mul; }

 private:
  struct Tables {
    std::size_t n = 0;
    std::vector<Elem> mul;
    std::vector<Elem> mul_t;
    std::vector<Elem> inv;
    bool abelian = false;
  };

  Group(std::shared_ptr<const Tables> t, std::string name) : t_(std::move(t)), name_(std::move(name)) {}

  std::shared_ptr<const Tables> t_;
  std::string name_;
};

}  // namespace centra
