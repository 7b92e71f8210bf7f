#include <gtest/gtest.h>

#include "centra/centralizer.hpp"
#include "centra/constructors.hpp"
#include "centra/errors.hpp"
#include "centra/group_ops.hpp"
#include "centra/isoclinism.hpp"

using namespace centra;

namespace {

void expect_isoclinic(const Group& a, const Group& b) {
  const auto r = are_isoclinic(a, b);
  ASSERT_TRUE(r.isoclinic()) << a.name() << " vs " << b.name() << ": " << r.reason;
  EXPECT_TRUE(verify_witness(a, b, *r.witness));
  EXPECT_TRUE(r.reason.empty());
}

void expect_not_isoclinic(const Group& a, const Group& b) {
  const auto r = are_isoclinic(a, b);
  EXPECT_FALSE(r.isoclinic()) << a.name() << " vs " << b.name();
  EXPECT_FALSE(r.reason.empty());
}

}  // namespace

TEST(Isoclinism, D8AndQ8) {
  const Group d8 = construct_dihedral(8), q8 = construct_quaternion8();
  expect_isoclinic(d8, q8);
  EXPECT_EQ(profile(d8).cent_count, profile(q8).cent_count);
}

TEST(Isoclinism, DirectProductWithAbelian) {
  expect_isoclinic(construct_heisenberg(3),
                   construct_direct_product(construct_cyclic(2), construct_heisenberg(3)));
  expect_isoclinic(construct_dihedral(8),
                   construct_direct_product(construct_cyclic(4), construct_dihedral(8)));
  expect_isoclinic(construct_symmetric(3),
                   construct_direct_product(construct_cyclic(3), construct_symmetric(3)));
}

TEST(Isoclinism, ExtraspecialVariants) {
  expect_isoclinic(construct_extraspecial(3, 1, Variant::Plus), construct_extraspecial(3, 1, Variant::Minus));
  expect_isoclinic(construct_extraspecial(2, 2, Variant::Plus), construct_extraspecial(2, 2, Variant::Minus));
}

TEST(Isoclinism, AbelianGroups) {
  expect_isoclinic(construct_cyclic(1), construct_cyclic(6));
  expect_not_isoclinic(construct_cyclic(4), construct_dihedral(8));
}

TEST(Isoclinism, Negative) {
  expect_not_isoclinic(construct_dihedral(8), construct_symmetric(3));
  expect_not_isoclinic(construct_dihedral(8), construct_dihedral(16));
  expect_not_isoclinic(construct_extraspecial(3, 1, Variant::Plus), construct_dihedral(12));
  expect_not_isoclinic(construct_quaternion8(), construct_alternating4());
  // D12 ≅ C2×S3
  expect_isoclinic(construct_dihedral(12), construct_symmetric(3));
}

TEST(Isoclinism, Signatures) {
  const auto d8 = commutator_map_signature(construct_dihedral(8));
  EXPECT_EQ(d8, commutator_map_signature(construct_quaternion8()));
  EXPECT_NE(d8, commutator_map_signature(construct_from_spec("product:cyclic:n=2*product:cyclic:n=2*cyclic:n=2")));
  std::size_t total = 0;
  for (const auto& [key, count] : d8) total += count;
  EXPECT_EQ(total, 16u);  // pairs of cosets of Z(D8)
}

TEST(Isoclinism, WitnessVerificationRejectsCorruption) {
  const Group d8 = construct_dihedral(8), q8 = construct_quaternion8();
  auto w = *are_isoclinic(d8, q8).witness;
  ASSERT_TRUE(verify_witness(d8, q8, w));
  auto bad = w;
  std::swap(bad.phi[1], bad.phi[2]);
  std::swap(bad.phi[0], bad.phi[1]);
  EXPECT_FALSE(verify_witness(d8, q8, bad));
  bad = w;
  bad.theta.clear();
  EXPECT_FALSE(verify_witness(d8, q8, bad));
}

TEST(Isoclinism, Budget) {
  const Group a = construct_extraspecial(2, 2, Variant::Plus), b = construct_extraspecial(2, 2, Variant::Minus);
  EXPECT_THROW(are_isoclinic(a, b, 1), SearchBudgetExceeded);
  EXPECT_GT(are_isoclinic(a, b).nodes, 1u);
}

TEST(Isoclinism, ExtraspecialMatch) {
  const auto m = isoclinic_to_extraspecial(construct_from_spec("product:cyclic:n=4*dihedral:n=8"));
  EXPECT_TRUE(m.matches);
  EXPECT_EQ(m.p, 2u);
  EXPECT_EQ(m.a, 1u);
  const auto h = isoclinic_to_extraspecial(construct_from_spec("product:cyclic:n=2*heisenberg:p=3"));
  EXPECT_TRUE(h.matches);
  EXPECT_EQ(h.p, 3u);
  const auto s = isoclinic_to_extraspecial(construct_symmetric(3));
  EXPECT_FALSE(s.matches);
  EXPECT_FALSE(s.reason.empty());
}

TEST(Isoclinism, StemReduction) {
  const Group g = construct_from_spec("product:cyclic:n=2*heisenberg:p=3");
  const Group s = stem_reduction(g);
  EXPECT_EQ(s.order(), 27u);
  EXPECT_TRUE(center(s).subset_of(commutator_subgroup(s)));
  expect_isoclinic(g, s);
  const Group t = stem_reduction(construct_from_spec("product:cyclic:n=4*dihedral:n=8"));
  EXPECT_EQ(t.order(), 8u);
  EXPECT_EQ(stem_reduction(construct_dihedral(8)).order(), 8u);
  EXPECT_EQ(stem_reduction(construct_cyclic(12)).order(), 1u);
}
