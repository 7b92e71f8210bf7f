#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "centra/kernels.hpp"

namespace centra {

using Elem = std::uint32_t;

/// Immutable bit-vector of element indices within a parent group of order
/// `universe()`. Used for centralizers, centers, commutator subgroups and
/// arbitrary element sets alike; `is_subgroup` in group_ops decides closure.
class SubgroupSet {
 public:
  using Word = kernels::Word;

  SubgroupSet() = default;
  /// Bits past `universe` must be zero.
  SubgroupSet(std::size_t universe, std::vector<Word> words);

  static SubgroupSet none(std::size_t universe);
  static SubgroupSet all(std::size_t universe);
  static SubgroupSet of(std::size_t universe, std::span<const Elem> members);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool full() const noexcept { return size_ == universe_; }

  bool contains(Elem e) const noexcept {
    return e < universe_ && ((words_[e / kernels::kWordBits] >> (e % kernels::kWordBits)) & 1u) != 0;
  }

  std::span<const Word> words() const noexcept { return words_; }
  std::vector<Elem> members() const;
  /// Smallest member; universe() when empty.
  Elem min_member() const noexcept;

  bool subset_of(const SubgroupSet& other) const;
  bool strict_subset_of(const SubgroupSet& other) const { return size_ < other.size_ && subset_of(other); }
  bool intersects(const SubgroupSet& other) const;

  SubgroupSet intersection(const SubgroupSet& other) const;
  SubgroupSet union_with(const SubgroupSet& other) const;
  SubgroupSet difference(const SubgroupSet& other) const;

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.universe_ == b.universe_ && a.size_ == b.size_ && a.words_ == b.words_;
  }

  /// "{0,2,5}"
  std::string to_string() const;

 private:
  std::size_t universe_ = 0;
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Mutable companion used while a set is being assembled.
class SetBuilder {
 public:
  explicit SetBuilder(std::size_t universe)
      : universe_(universe), words_(kernels::words_for(universe), 0) {}

  void insert(Elem e) { words_[e / kernels::kWordBits] |= kernels::Word(1) << (e % kernels::kWordBits); }
  bool contains(Elem e) const {
    return ((words_[e / kernels::kWordBits] >> (e % kernels::kWordBits)) & 1u) != 0;
  }
  SubgroupSet build() && { return SubgroupSet(universe_, std::move(words_)); }

 private:
  std::size_t universe_;
  std::vector<kernels::Word> words_;
};

}  // namespace centra
