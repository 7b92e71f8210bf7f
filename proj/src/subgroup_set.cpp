#include "centra/subgroup_set.hpp"

#include <bit>
#include <stdexcept>

namespace centra {

using kernels::kWordBits;

SubgroupSet::SubgroupSet(std::size_t universe, std::vector<Word> words)
    : universe_(universe), words_(std::move(words)) {
  if (words_.size() != kernels::words_for(universe_))
    throw std::invalid_argument("SubgroupSet: word count does not match universe");
  if (universe_ % kWordBits != 0 && !words_.empty() && (words_.back() >> (universe_ % kWordBits)) != 0)
    throw std::invalid_argument("SubgroupSet: bits set past the universe");
  size_ = kernels::active().popcount(words_.data(), words_.size());
}

SubgroupSet SubgroupSet::none(std::size_t universe) {
  return SubgroupSet(universe, std::vector<Word>(kernels::words_for(universe), 0));
}

SubgroupSet SubgroupSet::all(std::size_t universe) {
  std::vector<Word> w(kernels::words_for(universe), ~Word(0));
  if (universe % kWordBits != 0) w.back() = (Word(1) << (universe % kWordBits)) - 1;
  return SubgroupSet(universe, std::move(w));
}

SubgroupSet SubgroupSet::of(std::size_t universe, std::span<const Elem> members) {
  SetBuilder b(universe);
  for (Elem e : members) {
    if (e >= universe) throw std::out_of_range("SubgroupSet::of: element outside universe");
    b.insert(e);
  }
  return std::move(b).build();
}

std::vector<Elem> SubgroupSet::members() const {
  std::vector<Elem> out;
  out.reserve(size_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<Elem>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

Elem SubgroupSet::min_member() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return static_cast<Elem>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w])));
  return static_cast<Elem>(universe_);
}

bool SubgroupSet::subset_of(const SubgroupSet& other) const {
  if (size_ > other.size_) return false;
  return kernels::active().is_subset(words_.data(), other.words_.data(), words_.size());
}

bool SubgroupSet::intersects(const SubgroupSet& other) const {
  return kernels::active().intersects(words_.data(), other.words_.data(), words_.size());
}

SubgroupSet SubgroupSet::intersection(const SubgroupSet& other) const {
  std::vector<Word> out(words_.size());
  kernels::active().bit_and(words_.data(), other.words_.data(), out.data(), out.size());
  return SubgroupSet(universe_, std::move(out));
}

SubgroupSet SubgroupSet::union_with(const SubgroupSet& other) const {
  std::vector<Word> out(words_.size());
  kernels::active().bit_or(words_.data(), other.words_.data(), out.data(), out.size());
  return SubgroupSet(universe_, std::move(out));
}

SubgroupSet SubgroupSet::difference(const SubgroupSet& other) const {
  std::vector<Word> out(words_.size());
  kernels::active().bit_andnot(words_.data(), other.words_.data(), out.data(), out.size());
  return SubgroupSet(universe_, std::move(out));
}

std::string SubgroupSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Elem e : members()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

}  // namespace centra
