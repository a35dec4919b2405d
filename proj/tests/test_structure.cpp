#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "wbd/structure.hpp"

using namespace wbd;
using namespace wbd::testing;

namespace {

// F1 + F[i] with i^2 = -1 inside bar: simple over F but split only when -1 is a square.
template <ExactField K>
BaricAlgebra<K> gaussian_bar() {
  TableBuilder<K> tb;
  tb.add("1");
  const auto a = tb.add("a"), b = tb.add("b");
  tb.set(a, a, a);
  tb.set(a, b, b);
  tb.set(b, a, b);
  tb.set(b, b, a, -1);
  tb.unit(0);
  return {tb.build(), tb.point_weight(0)};
}

bool same_set(std::vector<Subspace<Q>> got, std::vector<Subspace<Q>> want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    bool hit = false;
    for (const auto& g : got) hit = hit || g == w;
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST(SplitSemisimpleBar, TrivialExtension) {
  const auto u = fixture_t5<Q>();
  const auto s = split_semisimple_bar(u);
  EXPECT_EQ(s.semisimple_part, labels_span(u.algebra(), {"e11", "e12", "e21", "e22"}));
  EXPECT_EQ(s.trivial_part, labels_span(u.algebra(), {"n"}));
}

TEST(SplitSemisimpleBar, NilBarIsAllTrivial) {
  const auto u = fixture_t7<Q>();
  const auto s = split_semisimple_bar(u);
  EXPECT_TRUE(s.semisimple_part.is_zero());
  EXPECT_EQ(s.trivial_part, labels_span(u.algebra(), {"n"}));
}

TEST(SplitSemisimpleBar, RejectsNonBSemisimple) {
  try {
    split_semisimple_bar(fixture_t3<Q>());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_input);
  }
}

TEST(Centroid, DimensionCountsSimpleBlocks) {
  const auto t2 = fixture_t2<Q>();
  EXPECT_EQ(centroid(t2.algebra(), bar_ideal(t2)).size(), 1u);
  const auto t11 = fixture_t11<Q>();
  EXPECT_EQ(centroid(t11.algebra(), bar_ideal(t11)).size(), 2u);
  const auto z = fixture_zb<Q>();
  EXPECT_EQ(centroid(z.algebra(), bar_ideal(z)).size(), 1u);
}

TEST(SimpleComponents, TwoMatrixBlocks) {
  const auto u = fixture_t11<Q>();
  const auto& a = u.algebra();
  const auto comps = simple_components(a, bar_ideal(u));
  EXPECT_TRUE(same_set(comps, {prefix_span(a, "a"), prefix_span(a, "b")}));
}

TEST(SimpleComponents, BlocksRecoveredAfterConjugation) {
  const auto u = fixture_t11<Q>();
  const auto& a0 = u.algebra();
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto c = conjugate(u, seed);
    const auto comps = simple_components(c.algebra.algebra(), bar_ideal(c.algebra));
    EXPECT_TRUE(same_set(comps, {c.map(prefix_span(a0, "a")), c.map(prefix_span(a0, "b"))})) << seed;
  }
}

TEST(SimpleComponents, NonSplitOverRationals) {
  const auto u = gaussian_bar<Q>();
  try {
    simple_components(u.algebra(), bar_ideal(u));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::non_split);
  }
}

TEST(SimpleComponents, SplitsWhenMinusOneIsASquare) {
  {
    ModP::Scope scope(13);  // 5^2 = -1
    const auto u = gaussian_bar<ModP>();
    const auto comps = simple_components(u.algebra(), bar_ideal(u));
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0].dim(), 1u);
    EXPECT_EQ(comps[1].dim(), 1u);
  }
  {
    ModP::Scope scope(7);  // -1 is not a square mod 7
    const auto u = gaussian_bar<ModP>();
    EXPECT_THROW(simple_components(u.algebra(), bar_ideal(u)), Error);
  }
}

TEST(Classify, MatrixAndCayley) {
  const auto t2 = fixture_t2<Q>();
  EXPECT_EQ(classify_component(t2.algebra(), bar_ideal(t2)), ComponentKind::matrix);
  const auto z = fixture_zb<Q>();
  EXPECT_EQ(classify_component(z.algebra(), bar_ideal(z)), ComponentKind::cayley);
}

TEST(MatrixUnitsOfSimple, ConjugatedMatrixBlock) {
  for (const char* name : {"t2", "t11"}) {
    const auto u = fixture<Q>(name);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const auto c = conjugate(u, seed);
      const auto& a = c.algebra.algebra();
      for (const auto& comp : simple_components(a, bar_ideal(c.algebra))) {
        const auto m = matrix_units_of_simple(a, comp, {seed, 3, 4000});
        EXPECT_EQ(m.degree, 2u);
        EXPECT_FALSE(check_matrix_units(a, m).has_value()) << name;
        EXPECT_EQ(Subspace<Q>::span(a.dim(), m.units), comp) << name;
      }
    }
  }
}

TEST(MatrixUnitsOfSimple, LargerDegreesAcrossConjugates) {
  for (std::size_t t : {3, 4}) {
    TableBuilder<Q> tb;
    tb.add("1");
    tb.matrix_block(tb.add_matrix_units(t));
    tb.unit(0);
    const BaricAlgebra<Q> u(tb.build(), tb.point_weight(0));
    for (std::uint64_t seed = 1; seed <= (t == 3 ? 5u : 2u); ++seed) {
      const auto c = conjugate(u, seed);
      const auto& a = c.algebra.algebra();
      const auto comp = bar_ideal(c.algebra);
      const auto m = matrix_units_of_simple(a, comp, {seed, 3, 4000});
      EXPECT_EQ(m.degree, t);
      EXPECT_FALSE(check_matrix_units(a, m).has_value()) << t << " seed " << seed;
      EXPECT_EQ(Subspace<Q>::span(a.dim(), m.units), comp);
    }
  }
}

TEST(ZornFrame, ConjugatedSplitCayley) {
  const auto u = fixture_zb<Q>();
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto c = conjugate(u, seed);
    const auto& a = c.algebra.algebra();
    const auto comp = bar_ideal(c.algebra);
    const auto f = zorn_frame_of_cayley(a, comp, {seed, 3, 4000});
    EXPECT_FALSE(check_cayley_frame(a, f).has_value()) << seed;
    EXPECT_EQ(Subspace<Q>::span(a.dim(), f.spanning_set(a)), comp) << seed;
  }
}

TEST(ZornFrame, RejectsAssociativeComponent) {
  const auto u = fixture_t2<Q>();
  EXPECT_THROW(zorn_frame_of_cayley(u.algebra(), bar_ideal(u)), Error);
}

TEST(PresentComponents, MixedKindsAreDescribed) {
  const auto z = fixture_zb<Q>();
  const auto pz = present_components(z.algebra(), bar_ideal(z));
  ASSERT_EQ(pz.size(), 1u);
  EXPECT_EQ(pz[0].kind, ComponentKind::cayley);
  EXPECT_TRUE(pz[0].frame.has_value());
  const auto t11 = fixture_t11<Q>();
  const auto p11 = present_components(t11.algebra(), bar_ideal(t11));
  ASSERT_EQ(p11.size(), 2u);
  for (const auto& p : p11) {
    EXPECT_EQ(p.kind, ComponentKind::matrix);
    EXPECT_EQ(p.degree, 2u);
  }
}

TEST(IntegerTuples, MaxNormOrder) {
  const auto t = detail::integer_tuples(2, 2);
  EXPECT_EQ(t.size(), 24u);  // 5^2 - 1
  EXPECT_EQ(t.front(), (std::vector<long>{-1, -1}));
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_LE(std::abs(t[i][0]), 1);
    EXPECT_LE(std::abs(t[i][1]), 1);
  }
}

TEST(ReducedBasis, IntegralAndSpansTheSubspace) {
  const std::vector<Vec<Q>> gens{{Q(12009), Q(1), Q(0), Q(0)}, {Q(5), Q(0), Q(7), Q(0)}};
  const auto s = Subspace<Q>::span(4, gens);
  const auto b = reduced_basis(s);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(Subspace<Q>::span(4, b), s);
  for (const auto& v : b)
    for (const auto& x : v) EXPECT_EQ(x.denominator(), 1);
  // W ∩ Z^4 contains (5, 0, 7, 0); LLL in rank 2 is within a factor 2 of it in squared norm
  Q shortest(-1);
  for (const auto& v : b) {
    Q n2(0);
    for (const auto& x : v) n2 += x * x;
    if (shortest < Q(0) || n2 < shortest) shortest = n2;
  }
  EXPECT_FALSE(Q(2 * 74) < shortest);
}

TEST(ReducedBasis, SubalgebraCoordinatesRoundTrip) {
  const auto c = conjugate(fixture<Q>("t10"), 2);
  const auto& a = c.algebra.algebra();
  const auto r = nilradical(a).radical;
  const auto sub = subalgebra(a, r, true);
  EXPECT_EQ(sub.embed(Subspace<Q>::full(r.dim())), r);
  for (const auto& x : r.vectors()) EXPECT_EQ(sub.embed(sub.coordinates(x)), x);
  const auto plain = subalgebra(a, r);
  EXPECT_EQ(ideal_power_chain(sub.algebra, Subspace<Q>::full(r.dim())).nil_index,
            ideal_power_chain(plain.algebra, Subspace<Q>::full(r.dim())).nil_index);
}
