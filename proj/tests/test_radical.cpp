#include <gtest/gtest.h>

#include <map>
#include <random>

#include "test_support.hpp"
#include "wbd/radical.hpp"

using namespace wbd;
using namespace wbd::testing;

namespace {

// Nilradicals read off the constructions: the strictly triangular or
// nilpotent-coefficient parts of each table.
Subspace<Q> expected_nilradical(const std::string& name, const Algebra<Q>& a) {
  if (name == "t3") return labels_span(a, {"e12"});
  if (name == "t4") return labels_span(a, {"x1", "x2", "x3", "x4", "x5", "x6", "x7"});
  if (name == "t5") return labels_span(a, {"n"});
  if (name == "t6") return labels_span(a, {"c1", "c2", "r1", "r2"});
  if (name == "t6u" || name == "t8") return prefix_span(a, "eps.");
  if (name == "t7") return labels_span(a, {"n"});
  if (name == "t9") return labels_span(a, {"e14", "e24", "e34"});
  if (name == "t10") return subspace_sum(prefix_span(a, "x.e"), prefix_span(a, "x2.e"));
  if (name == "t12") return labels_span(a, {"e13", "e23"});
  return Subspace<Q>(a.dim());
}

}  // namespace

TEST(Nilpotency, PowerOfGeneratorInTruncatedPolynomials) {
  const auto a = fixture_t4<Q>().algebra();
  const auto r = is_nilpotent_element(a, basis_by_label(a, "x1"));
  EXPECT_TRUE(r.nilpotent);
  EXPECT_EQ(r.index, 8u);
  EXPECT_EQ(is_nilpotent_element(a, basis_by_label(a, "x3")).index, 3u);
  EXPECT_FALSE(is_nilpotent_element(a, basis_by_label(a, "1")).nilpotent);
}

TEST(PowerChain, TruncatedPolynomialIndices) {
  const auto a = fixture_t4<Q>().algebra();
  const auto full = labels_span(a, {"x1", "x2", "x3", "x4", "x5", "x6", "x7"});
  const auto c = ideal_power_chain(a, full);
  EXPECT_TRUE(c.nilpotent);
  EXPECT_EQ(c.nil_index, 8u);
  EXPECT_EQ(c.chain.at(1), labels_span(a, {"x2", "x3", "x4", "x5", "x6", "x7"}));
  // (x^2) has x^8 = 0 and x^6 != 0
  const auto sq = labels_span(a, {"x2", "x3", "x4", "x5", "x6", "x7"});
  EXPECT_EQ(ideal_power_chain(a, sq).nil_index, 4u);
}

TEST(PowerChain, IdempotentIdealStalls) {
  const auto a = fixture_t2<Q>().algebra();
  const auto m2 = labels_span(a, {"e11", "e12", "e21", "e22"});
  const auto c = ideal_power_chain(a, m2);
  EXPECT_FALSE(c.nilpotent);
  EXPECT_EQ(c.chain.size(), 1u);
}

TEST(PowerChain, NonIdealRejected) {
  const auto a = fixture_t3<Q>().algebra();
  try {
    ideal_power_chain(a, labels_span(a, {"e11"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_an_ideal);
  }
}

TEST(Nilradical, MatchesConstructionOnAllFixtures) {
  for (const auto& name : fixture_names()) {
    const auto u = fixture<Q>(name);
    const auto r = nilradical(u.algebra());
    EXPECT_TRUE(r.certified()) << name << ": " << r.detail;
    EXPECT_EQ(r.radical, expected_nilradical(name, u.algebra())) << name;
  }
}

TEST(Nilradical, AgreesWithRepresentationTrace) {
  for (const char* name : {"t2", "t3", "t6", "t9", "t12"}) {
    const auto u = fixture<Q>(name);
    const auto rho = matrix_representation(name);
    const auto oracle = representation_radical(u.dim(), rho);
    EXPECT_EQ(nilradical(u.algebra()).radical, oracle) << name;
    for (const auto& x : oracle.vectors()) EXPECT_TRUE(matrix_nilpotent(rho(x))) << name;
  }
}

TEST(Nilradical, EquivariantUnderConjugation) {
  for (const char* name : {"t3", "t6", "t9", "t12", "zb"}) {
    const auto u = fixture<Q>(name);
    const auto r = nilradical(u.algebra()).radical;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const auto c = conjugate(u, seed);
      const auto rc = nilradical(c.algebra.algebra());
      EXPECT_TRUE(rc.certified()) << name;
      EXPECT_EQ(rc.radical, c.map(r)) << name << " seed " << seed;
    }
  }
}

TEST(Nilradical, MaximalityOracleRejectsSmallCandidate) {
  const auto a = fixture_t4<Q>().algebra();
  const auto sq = labels_span(a, {"x2", "x3", "x4", "x5", "x6", "x7"});
  const auto r = certify_nilradical(a, sq, "test");
  EXPECT_TRUE(r.ideal);
  EXPECT_TRUE(r.chain.nilpotent);
  EXPECT_FALSE(r.maximal);
  EXPECT_FALSE(r.certified());
}

TEST(Nilradical, NonNilCandidateNotCertified) {
  const auto a = fixture_t5<Q>().algebra();
  const auto r = certify_nilradical(a, labels_span(a, {"e11", "e12", "e21", "e22", "n"}), "test");
  EXPECT_FALSE(r.certified());
}

TEST(Nilradical, QuotientIsSemisimple) {
  for (const auto& name : fixture_names()) {
    const auto u = fixture<Q>(name);
    const auto r = nilradical(u.algebra()).radical;
    if (r.is_zero()) continue;
    const auto q = quotient(u.algebra(), r);
    EXPECT_TRUE(nilradical(q.algebra).radical.is_zero()) << name;
  }
}

TEST(BRadical, HandDerivedValues) {
  // rad = bar^2 ∩ R
  const std::map<std::string, std::vector<std::string>> expected = {
      {"t1", {}},
      {"t2", {}},
      {"t3", {"e12"}},
      {"t4", {"x2", "x3", "x4", "x5", "x6", "x7"}},
      {"t5", {}},
      {"t6", {"c1", "c2", "r1", "r2"}},
      {"t7", {}},
      {"t9", {"e14", "e24"}},
      {"t11", {}},
      {"t12", {"e13", "e23"}},
      {"zb", {}},
  };
  for (const auto& [name, labels] : expected) {
    const auto u = fixture<Q>(name);
    EXPECT_EQ(b_radical(u), labels_span(u.algebra(), labels)) << name;
  }
  const auto t10 = fixture_t10<Q>();
  EXPECT_EQ(b_radical(t10), nilradical(t10.algebra()).radical);
  const auto t8 = fixture_t8<Q>();
  EXPECT_EQ(b_radical(t8), prefix_span(t8.algebra(), "eps."));
}

TEST(BRadical, IsBIdealAndQuotientIsBSemisimple) {
  for (const auto& name : fixture_names()) {
    const auto u = fixture<Q>(name);
    const auto rad = b_radical(u);
    EXPECT_TRUE(is_b_ideal(u, rad)) << name;
    if (rad.is_zero()) continue;
    EXPECT_TRUE(is_b_semisimple(quotient_baric(u, rad).algebra)) << name;
  }
}

TEST(BRadical, TrivialExtensionIsBSemisimpleButNotSemisimple) {
  const auto rep = radical_report(fixture_t5<Q>());
  EXPECT_FALSE(rep.semisimple);
  EXPECT_TRUE(rep.b_semisimple);
  const auto rep2 = radical_report(fixture_t2<Q>());
  EXPECT_TRUE(rep2.semisimple);
  EXPECT_TRUE(rep2.b_semisimple);
}

TEST(BRadical, ModPAgreesWithRationalsOnFixtures) {
  ModP::Scope scope(10007);
  for (const char* name : {"t3", "t4", "t6", "t9", "t12"}) {
    const auto uq = fixture<Q>(name);
    const auto up = fixture<ModP>(name);
    EXPECT_EQ(b_radical(up).dim(), b_radical(uq).dim()) << name;
    EXPECT_EQ(nilradical(up.algebra()).radical.dim(), nilradical(uq.algebra()).radical.dim()) << name;
  }
}
