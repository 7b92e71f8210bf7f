#include <gtest/gtest.h>

#include "centra/catalog_io.hpp"
#include "centra/centralizer.hpp"
#include "centra/constructors.hpp"
#include "centra/errors.hpp"
#include "centra/group_ops.hpp"
#include "oracles.hpp"

using namespace centra;

namespace {

std::set<oracle::Set> library_centralizers(const CentralizerProfile& p) {
  std::set<oracle::Set> out;
  for (const auto& c : p.proper_centralizers) out.insert(c.members());
  return out;
}

}  // namespace

TEST(Centralizer, MatchesOracle) {
  const Group s4 = construct_symmetric(4);
  for (Elem x = 0; x < s4.order(); ++x) EXPECT_EQ(centralizer(s4, x).members(), oracle::centralizer(s4, x));
}

TEST(Profile, AbelianGroup) {
  const auto p = profile(construct_cyclic(6));
  EXPECT_TRUE(p.abelian());
  EXPECT_EQ(p.cent_count, 1u);
  EXPECT_EQ(p.rank, 0u);
  EXPECT_EQ(p.nacent_count, 0u);
  EXPECT_THROW(conjugate_type(p), AbelianInput);
  EXPECT_THROW(poset_rank(p), AbelianInput);
  EXPECT_THROW(is_CA_group(p), AbelianInput);
  EXPECT_THROW(is_strict_center_partition(p), AbelianInput);
  EXPECT_TRUE(is_F_group(p).holds);
}

TEST(Profile, S3) {
  const auto p = profile(construct_symmetric(3));
  EXPECT_EQ(p.cent_count, 5u);
  EXPECT_EQ(p.center.size(), 1u);
  EXPECT_EQ(p.proper_centralizers.size(), 4u);
  EXPECT_EQ(p.rank, 1u);
  EXPECT_EQ(p.nacent_count, 1u);
  EXPECT_EQ(conjugate_type(p).to_string(), "mixed:2,3");
  EXPECT_TRUE(is_CA_group(p));
  EXPECT_FALSE(is_I_group(p));
  EXPECT_TRUE(is_F_group(p).holds);
  // owners are the minimal non-central members
  for (std::size_t i = 0; i < p.owners.size(); ++i) {
    EXPECT_EQ(p.owner_map[p.owners[i]], i);
    EXPECT_EQ(p.proper_centralizers[i].difference(p.center).min_member(), p.owners[i]);
  }
  EXPECT_EQ(p.owner_map[0], kWholeGroup);
}

TEST(Profile, D8) {
  const Group d8 = construct_dihedral(8);
  const auto p = profile(d8);
  EXPECT_EQ(p.cent_count, 4u);
  EXPECT_EQ(p.center_index(), 4u);
  EXPECT_EQ(conjugate_type(p).to_string(), "(2,1)");
  for (std::size_t i = 0; i < p.proper_centralizers.size(); ++i) EXPECT_EQ(p.center_quotient_size(i), 2u);
  EXPECT_TRUE(is_I_group(p));
  EXPECT_TRUE(is_strict_center_partition(p).strict);
}

TEST(Profile, KnownCounts) {
  struct Case {
    const char* spec;
    std::size_t cent;
  };
  for (const Case c : {Case{"symmetric:k=4", 14}, Case{"symmetric:k=5", 57}, Case{"dihedral:n=10", 7},
                       Case{"dihedral:n=12", 5}, Case{"dihedral:n=16", 6}, Case{"alternating4", 6},
                       Case{"quaternion8", 4}, Case{"extraspecial:p=3,a=2,variant=+", 41}}) {
    EXPECT_EQ(profile(construct_from_spec(c.spec)).cent_count, c.cent) << c.spec;
  }
}

TEST(Profile, S4IsNotAnFGroup) {
  const auto p = profile(construct_symmetric(4));
  const auto f = is_F_group(p);
  EXPECT_FALSE(f.holds);
  ASSERT_TRUE(f.witness.has_value());
  const auto [x, y] = *f.witness;
  const Group s4 = construct_symmetric(4);
  EXPECT_TRUE(centralizer(s4, x).strict_subset_of(centralizer(s4, y)));
  EXPECT_GT(p.rank, 1u);
  EXPECT_FALSE(is_strict_center_partition(p).strict);
}

TEST(Profile, D16Rank) {
  const auto p = profile(construct_dihedral(16));
  // every non-central rotation has centralizer ⟨r⟩, every reflection s has {1, r⁴, s, sr⁴}
  EXPECT_EQ(p.rank, 1u);
  EXPECT_TRUE(is_F_group(p).holds);
}

TEST(Profile, MatchesOracleOnCorpus) {
  const auto corpus = load_corpus(read_manifest(builtin_manifest_path()));
  for (const auto& e : corpus) {
    const Group& g = *e.group;
    const auto p = profile(g);
    EXPECT_EQ(p.center.members(), oracle::center(g)) << g.name();
    EXPECT_EQ(library_centralizers(p), oracle::proper_centralizers(g)) << g.name();
    EXPECT_EQ(p.cent_count, oracle::proper_centralizers(g).size() + 1) << g.name();
  }
}

TEST(Formulas, F1OnExtraspecial) {
  const auto f = count_by_formula_f1(construct_extraspecial(3, 1, Variant::Plus));
  ASSERT_TRUE(f.applicable);
  EXPECT_EQ(f.p, 3u);
  EXPECT_EQ(f.k, 2u);
  EXPECT_EQ(f.m, 1u);
  EXPECT_EQ(f.value, 5);
}

TEST(Formulas, F1Gates) {
  EXPECT_FALSE(count_by_formula_f1(construct_cyclic(4)).applicable);
  EXPECT_FALSE(count_by_formula_f1(construct_symmetric(4)).applicable);
  // S3: |G/Z| = 6 is not a prime power
  EXPECT_FALSE(count_by_formula_f1(construct_symmetric(3)).applicable);
}

TEST(Formulas, PP1OnD8AndE35) {
  const auto d8 = count_by_formula_pp1(construct_dihedral(8));
  ASSERT_TRUE(d8.applicable);
  EXPECT_EQ(d8.v, 0u);
  EXPECT_EQ(d8.value, 4);
  const auto e = count_by_formula_pp1(construct_extraspecial(3, 2, Variant::Minus));
  ASSERT_TRUE(e.applicable);
  EXPECT_EQ(e.value, 41);
}

TEST(ConjugateType, Formatting) {
  EXPECT_EQ((ConjugateType{{4}}).to_string(), "(4,1)");
  EXPECT_EQ((ConjugateType{{2, 3}}).to_string(), "mixed:2,3");
  EXPECT_EQ(ConjugateType{}.to_string(), "none");
}
