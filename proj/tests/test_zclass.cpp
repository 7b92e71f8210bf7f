#include <gtest/gtest.h>

#include "centra/catalog_io.hpp"
#include "centra/constructors.hpp"
#include "centra/group_ops.hpp"
#include "centra/zclass.hpp"
#include "oracles.hpp"

using namespace centra;

namespace {

std::vector<oracle::Set> library_classes(const ZClassPartition& z) {
  std::vector<oracle::Set> out;
  for (const auto& c : z.classes) out.push_back(c.members);
  return out;
}

}  // namespace

TEST(ZClass, S3) {
  const Group s3 = construct_symmetric(3);
  const auto z = z_partition(s3);
  ASSERT_EQ(z.zclass_count(), 3u);
  EXPECT_EQ(z.classes[0].members, (std::vector<Elem>{0}));
  EXPECT_EQ(z.classes[0].centralizer_id, kWholeGroup);
  // transpositions (1 2), (0 1), (0 2) and the two 3-cycles
  EXPECT_EQ(z.classes[1].members, (std::vector<Elem>{1, 2, 5}));
  EXPECT_EQ(z.classes[2].members, (std::vector<Elem>{3, 4}));
  EXPECT_EQ(z.classes[1].normalizer_index, 3u);
  EXPECT_EQ(z.classes[1].fprime_size, 1u);
  EXPECT_EQ(z.classes[2].normalizer_index, 1u);
  EXPECT_EQ(z.classes[2].fprime_size, 2u);
  for (const auto& c : z.classes) EXPECT_TRUE(c.size_formula_holds());
  EXPECT_EQ(z.class_of[5], 1u);
}

TEST(ZClass, Equivalence) {
  const Group s3 = construct_symmetric(3);
  EXPECT_TRUE(z_equivalent(s3, 1, 2));
  EXPECT_TRUE(z_equivalent(s3, 3, 4));
  EXPECT_FALSE(z_equivalent(s3, 1, 3));
  EXPECT_FALSE(z_equivalent(s3, 0, 1));
}

TEST(ZClass, KnownCounts) {
  struct Case {
    const char* spec;
    std::size_t z;
  };
  for (const Case c : {Case{"dihedral:n=8", 4}, Case{"quaternion8", 4}, Case{"alternating4", 3},
                       Case{"extraspecial:p=3,a=1,variant=-", 5}, Case{"extraspecial:p=2,a=2,variant=+", 16},
                       Case{"cyclic:n=5", 1}}) {
    EXPECT_EQ(z_partition(construct_from_spec(c.spec)).zclass_count(), c.z) << c.spec;
  }
}

TEST(ZClass, CountComparison) {
  const auto s3 = zclass_count_equals_cent_count(construct_symmetric(3));
  EXPECT_EQ(s3.zclass_count, 3u);
  EXPECT_EQ(s3.cent_count, 5u);
  EXPECT_FALSE(s3.counts_equal());
  EXPECT_FALSE(s3.all_centralizers_normal);
  EXPECT_TRUE(s3.consistent());
  const auto d8 = zclass_count_equals_cent_count(construct_dihedral(8));
  EXPECT_TRUE(d8.counts_equal());
  EXPECT_TRUE(d8.all_centralizers_normal);
}

TEST(ZClass, MaxCharacterization) {
  const auto r = check_max_zclass_characterization(construct_extraspecial(3, 1, Variant::Plus));
  EXPECT_EQ(r.status, CheckStatus::Holds) << r.detail;
  EXPECT_NE(r.detail.find("zclass=5"), std::string::npos) << r.detail;
  EXPECT_EQ(check_max_zclass_characterization(construct_symmetric(4)).status, CheckStatus::HypothesisNotMet);
  EXPECT_EQ(check_max_zclass_characterization(construct_cyclic(8)).status, CheckStatus::HypothesisNotMet);
}

TEST(ZClass, UpperBound) {
  const auto d8 = upper_bound_check(construct_dihedral(8));
  EXPECT_TRUE(d8.holds());
  EXPECT_TRUE(d8.equality);
  const auto e = upper_bound_check(construct_extraspecial(3, 1, Variant::Plus));
  EXPECT_TRUE(e.holds());
  EXPECT_FALSE(e.equality);
  EXPECT_FALSE(e.all_quotients_two);
}

TEST(ZClass, MatchesOracleOnCorpus) {
  const auto corpus = load_corpus(read_manifest(builtin_manifest_path()));
  for (const auto& e : corpus) {
    const Group& g = *e.group;
    const auto z = z_partition(g);
    EXPECT_EQ(library_classes(z), oracle::zclasses(g)) << g.name();
    for (const auto& c : z.classes) EXPECT_TRUE(c.size_formula_holds()) << g.name();
  }
}
