#include <gtest/gtest.h>

#include <random>

#include "mtl/error.hpp"
#include "mtl/growth.hpp"
#include "oracle.hpp"

using mtl::Automorphism;
using mtl::FreeBasis;
using mtl::GrowthClass;
using mtl::Metric;
using mtl::SubgroupGraph;
using mtl::Word;

namespace {

const FreeBasis kAB = FreeBasis::from_string("ab");

Automorphism make(const FreeBasis& basis, std::vector<const char*> images) {
  std::vector<Word> ws;
  for (const char* s : images) ws.push_back(basis.parse(s));
  return Automorphism::validate(basis, std::move(ws));
}

const Automorphism kFib = make(kAB, {"ab", "a"});
const Automorphism kUni = make(kAB, {"a", "ba"});
const std::map<char, std::string> kFibMap{{'a', "ab"}, {'b', "a"}};

bool exponential(GrowthClass c) { return c == GrowthClass::exponential; }

}  // namespace

TEST(Sequence, Examples) {
  auto s = mtl::growth_sequence(kUni, kAB.parse("b"), 4, Metric::conjugacy());
  EXPECT_EQ(s.values, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  s = mtl::growth_sequence(kFib, kAB.parse("a"), 5, Metric::word());
  EXPECT_EQ(s.values, (std::vector<std::size_t>{1, 2, 3, 5, 8, 13}));
  s = mtl::growth_sequence(kFib, Word(), 10, Metric::conjugacy());
  EXPECT_EQ(s.values, std::vector<std::size_t>(11, 0));
}

TEST(Sequence, MatchesNaiveIteration) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::string g = oracle::random_word(rng, "ab", 6);
    const auto word = mtl::growth_sequence(kFib, kAB.parse(g), 10, Metric::word());
    const auto conj = mtl::growth_sequence(kFib, kAB.parse(g), 10, Metric::conjugacy());
    for (int n = 0; n <= 10; ++n) {
      const std::string it = oracle::power(kFibMap, g, n);
      EXPECT_EQ(word.values[n], it.size());
      EXPECT_EQ(conj.values[n], oracle::cyclic_core(it).size());
    }
  }
}

TEST(Sequence, TruncatesAtCap) {
  const auto s = mtl::growth_sequence(kFib, kAB.parse("a"), 40, Metric::word(), 1000);
  EXPECT_TRUE(s.truncated);
  EXPECT_LT(s.values.size(), 41u);
  EXPECT_LE(s.values.back(), 1000u);
}

TEST(Classify, Linear) {
  const auto r = mtl::classify_element(kUni, kAB.parse("b"), Metric::conjugacy());
  EXPECT_EQ(r.cls, GrowthClass::polynomial);
  EXPECT_EQ(r.degree, 1u);
  EXPECT_FALSE(r.certified);
}

TEST(Classify, CommutatorIsBoundedWithPeriodTwo) {
  const auto r = mtl::classify_element(kFib, kAB.parse("abAB"), Metric::conjugacy());
  EXPECT_EQ(r.cls, GrowthClass::bounded);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_EQ(r.certificate->period, 2u);
  EXPECT_TRUE(r.certified);
  EXPECT_TRUE(mtl::verify_certificate(kFib, kAB.parse("abAB"), *r.certificate));
}

TEST(Classify, FibonacciRate) {
  const auto r = mtl::classify_element(kFib, kAB.parse("a"), Metric::word(), 30);
  EXPECT_EQ(r.cls, GrowthClass::exponential);
  ASSERT_TRUE(r.rate.has_value());
  EXPECT_GE(*r.rate, 1.55);
  EXPECT_LE(*r.rate, 1.70);
}

TEST(Classify, FixedElementIsBounded) {
  const auto r = mtl::classify_element(kUni, kAB.parse("a"), Metric::word());
  EXPECT_EQ(r.cls, GrowthClass::bounded);
  EXPECT_EQ(r.certificate->period, 1u);
}

TEST(Classify, HorizonTooSmallIsInconclusive) {
  const auto r = mtl::classify_element(kUni, kAB.parse("b"), Metric::word(), 5);
  EXPECT_EQ(r.cls, GrowthClass::inconclusive);
  EXPECT_FALSE(r.evidence.empty());
}

TEST(Classify, HigherDegrees) {
  const FreeBasis abc = FreeBasis::from_string("abcd");
  // c grows quadratically, d cubically.
  const auto alpha = make(abc, {"a", "ba", "cb", "dc"});
  EXPECT_EQ(mtl::classify_element(alpha, abc.parse("c"), Metric::word()).degree, 2u);
  EXPECT_EQ(mtl::classify_element(alpha, abc.parse("d"), Metric::word()).degree, 3u);
}

TEST(Classify, InnerAutomorphismUnderWordMetric) {
  // Conjugation by a: the class of b is fixed but |alpha^n(b)| = 2n + 1.
  const auto inner = make(kAB, {"a", "Aba"});
  const auto w = mtl::classify_element(inner, kAB.parse("b"), Metric::word());
  EXPECT_EQ(w.cls, GrowthClass::polynomial);
  EXPECT_EQ(w.degree, 1u);
  const auto c = mtl::classify_element(inner, kAB.parse("b"), Metric::conjugacy());
  EXPECT_EQ(c.cls, GrowthClass::bounded);
}

TEST(Property, ConjugacyBelowWordLength) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Word g = kAB.parse(oracle::random_word(rng, "ab", 8));
    const auto w = mtl::growth_sequence(kFib, g, 15, Metric::word());
    const auto c = mtl::growth_sequence(kFib, g, 15, Metric::conjugacy());
    for (std::size_t n = 0; n < w.values.size(); ++n) {
      EXPECT_LE(c.values[n], w.values[n]);
    }
  }
}

TEST(Property, ConjugationInvariance) {
  std::mt19937_64 rng(9);
  for (const auto* alpha : {&kFib, &kUni}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Word g = kAB.parse(oracle::random_word(rng, "ab", 6));
      const Word h = kAB.parse(oracle::random_word(rng, "ab", 6));
      const auto a = mtl::classify_element(*alpha, g, Metric::conjugacy());
      const auto b = mtl::classify_element(*alpha, h * g * h.inverse(), Metric::conjugacy());
      EXPECT_EQ(a.cls, b.cls) << kAB.format(g) << " " << kAB.format(h);
    }
  }
}

TEST(Property, CertificatesAreSound) {
  std::mt19937_64 rng(10);
  const auto swap = make(kAB, {"B", "A"});
  for (const auto* alpha : {&kFib, &kUni, &swap}) {
    for (int trial = 0; trial < 60; ++trial) {
      const Word g = kAB.parse(oracle::random_word(rng, "ab", 6));
      for (const Metric& m : {Metric::word(), Metric::conjugacy()}) {
        const auto r = mtl::classify_element(*alpha, g, m);
        if (r.cls != GrowthClass::bounded) continue;
        ASSERT_TRUE(r.certificate.has_value());
        EXPECT_TRUE(mtl::verify_certificate(*alpha, g, *r.certificate));
        const std::size_t a = r.certificate->start;
        const std::size_t p = r.certificate->period;
        EXPECT_EQ(mtl::length(alpha->apply_power(g, a + p), m),
                  mtl::length(alpha->apply_power(g, a), m));
      }
    }
  }
}

TEST(Property, ProductClosureUnderWordLength) {
  const FreeBasis abc = FreeBasis::from_string("abc");
  const auto alpha = make(abc, {"a", "ba", "cb"});
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Word x = abc.parse(oracle::random_word(rng, "abc", 4));
    const Word y = abc.parse(oracle::random_word(rng, "abc", 4));
    const auto rx = mtl::classify_element(alpha, x, Metric::word());
    const auto ry = mtl::classify_element(alpha, y, Metric::word());
    if (!rx.non_exponential() || !ry.non_exponential()) continue;
    ++checked;
    const auto rxy = mtl::classify_element(alpha, x * y, Metric::word());
    EXPECT_FALSE(exponential(rxy.cls)) << abc.format(x * y);
  }
  EXPECT_GT(checked, 20);
}

TEST(Property, TwoTreesAgree) {
  // F(a,b,c) with elliptic factor <a>: one tree has stable letters b, c;
  // the second is its twist by phi: a -> a, b -> bA, c -> c.
  const FreeBasis abc = FreeBasis::from_string("abc");
  const auto alpha = make(abc, {"a", "c", "bc"});
  const auto phi = make(abc, {"a", "bA", "c"});
  const auto twisted = phi.compose(alpha).compose(mtl::invert(phi));
  const Metric tree = Metric::tree({2, 3});
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const Word g = abc.parse(oracle::random_word(rng, "abc", 5));
    const auto first = mtl::classify_element(alpha, g, tree);
    const auto second = mtl::classify_element(twisted, phi.apply(g), tree);
    ASSERT_NE(first.cls, GrowthClass::inconclusive);
    ASSERT_NE(second.cls, GrowthClass::inconclusive);
    EXPECT_EQ(exponential(first.cls), exponential(second.cls)) << abc.format(g);
  }
}

TEST(SubgroupGrowth, Examples) {
  const auto comm = SubgroupGraph::fold(2, {kAB.parse("abAB")});
  EXPECT_THROW((void)mtl::subgroup_growth(kFib, comm), mtl::InvarianceError);

  const auto a = SubgroupGraph::fold(2, {kAB.parse("a")});
  EXPECT_EQ(mtl::subgroup_growth(kUni, a).cls, GrowthClass::bounded);

  const auto whole = SubgroupGraph::fold(2, {kAB.parse("a"), kAB.parse("b")});
  const auto r = mtl::subgroup_growth(kFib, whole);
  EXPECT_EQ(r.cls, GrowthClass::exponential);
  EXPECT_EQ(r.sequence.element, kAB.parse("a"));

  const auto u = mtl::subgroup_growth(kUni, whole);
  EXPECT_EQ(u.cls, GrowthClass::polynomial);
  EXPECT_EQ(u.sequence.element, kAB.parse("b"));
}
