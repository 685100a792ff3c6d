#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "mtl/error.hpp"
#include "mtl/splittings.hpp"
#include "oracle.hpp"

using namespace mtl;

namespace {

Automorphism make(const FreeBasis& basis, std::vector<const char*> images) {
  std::vector<Word> ws;
  for (const char* s : images) ws.push_back(basis.parse(s));
  return Automorphism::validate(basis, std::move(ws));
}

SubgroupGraph sub(const FreeBasis& basis, std::initializer_list<const char*> gens) {
  std::vector<Word> ws;
  for (const char* g : gens) ws.push_back(basis.parse(g));
  return SubgroupGraph::fold(basis.rank(), ws);
}

const FreeBasis kAS = FreeBasis::from_string("as");
const FreeBasis kABS = FreeBasis::from_string("abs");

// F(a,s), alpha(a) = a, alpha(s) = s a^-1.
HnnContext twist_context() {
  return build_hnn_context(kAS, {1}, 2, make(kAS, {"a", "sA"}), std::nullopt, {});
}

// F(a,b) * <s>, Fibonacci on F(a,b), alpha(s) = s.
HnnContext flagship_context() {
  return build_hnn_context(kABS, {1, 2}, 3, make(kABS, {"ab", "a", "s"}),
                           std::nullopt, {});
}

}  // namespace

TEST(HnnContext, ReadsH) {
  const auto ctx = twist_context();
  EXPECT_EQ(ctx.h, kAS.parse("a"));
  EXPECT_EQ(ctx.a0, sub(kAS, {"a"}));
  EXPECT_EQ(ctx.k.status, KStatus::found);
  EXPECT_TRUE(ctx.k.k0.is_identity());

  const auto plain = build_hnn_context(kAS, {1}, 2, make(kAS, {"a", "s"}),
                                       std::nullopt, {});
  EXPECT_TRUE(plain.h.is_identity());
}

TEST(HnnContext, RejectsBadStableImage) {
  EXPECT_THROW(build_hnn_context(kAS, {1}, 2, make(kAS, {"a", "as"}),
                                 std::nullopt, {}),
               NormalizationError);
  // Factor not preserved.
  EXPECT_THROW(build_hnn_context(kABS, {1, 2}, 3, make(kABS, {"as", "b", "s"}),
                                 std::nullopt, {}),
               NormalizationError);
}

TEST(HnnContext, SuppliedA0IsChecked) {
  const auto alpha = make(kABS, {"ab", "a", "s"});
  EXPECT_THROW(build_hnn_context(kABS, {1, 2}, 3, alpha, sub(kABS, {"a"}), {}),
               InvarianceError);
  const auto ctx = build_hnn_context(kABS, {1, 2}, 3, alpha,
                                     SubgroupGraph::trivial(3), {});
  EXPECT_TRUE(ctx.a0_supplied);
}

TEST(HnnContext, FlagshipData) {
  const auto ctx = flagship_context();
  EXPECT_TRUE(ctx.h.is_identity());
  // alpha(ABab) = BAba, the inverse of ABab.
  EXPECT_EQ(ctx.a0, sub(kABS, {"ABab"}));
  EXPECT_EQ(ctx.k.status, KStatus::found);
  EXPECT_TRUE(ctx.k.k0.is_identity());
  EXPECT_EQ(ctx.b0, ctx.a0);
}

TEST(KPrime, Examples) {
  const auto ctx = twist_context();
  EXPECT_EQ(k_prime(ctx, Word()), ctx.h.inverse());
  EXPECT_EQ(k_prime(ctx, kAS.parse("aa")), kAS.parse("A"));
  EXPECT_THROW((void)k_prime(ctx, kAS.parse("s")), DomainError);
  const auto flag = flagship_context();
  EXPECT_EQ(k_prime(flag, kABS.parse("b")), kABS.parse("Ba"));
}

TEST(SolveK, OneCosetInTwistInstance) {
  const auto ctx = twist_context();
  const auto sols = enumerate_K(ctx, 6);
  // Solutions are exactly a^m with |m| <= 6.
  EXPECT_EQ(sols.size(), 13u);
  for (const Word& k : sols) EXPECT_TRUE(ctx.a0.contains(k));
  EXPECT_EQ(solve_K(ctx, 6).status, KStatus::found);
}

TEST(SolveK, IdentityIsASolutionWhenHIsTrivial) {
  const auto ctx = flagship_context();
  const auto r = solve_K(ctx, 3);
  EXPECT_EQ(r.status, KStatus::found);
  EXPECT_TRUE(r.k0.is_identity());
}

TEST(SolveK, FibonacciTwistedByB) {
  const auto ctx = build_hnn_context(kABS, {1, 2}, 3, make(kABS, {"ab", "a", "sB"}),
                                     std::nullopt, {});
  EXPECT_EQ(ctx.h, kABS.parse("b"));
  EXPECT_EQ(ctx.a0, sub(kABS, {"ABab"}));
  // a^-1 b^-1 alpha(a) = ABab.
  const auto r = solve_K(ctx, 6);
  EXPECT_EQ(r.status, KStatus::found);
  EXPECT_EQ(r.k0, kABS.parse("a"));
  EXPECT_EQ(ctx.b0, sub(kABS, {"BabA"}));
}

TEST(SolveK, EmptyForInversionTwist) {
  // alpha(a) = a^-1, h = a: a^-m a^-1 a^-m is never trivial.
  const auto ctx = build_hnn_context(kAS, {1}, 2, make(kAS, {"A", "sA"}),
                                     SubgroupGraph::trivial(2), {});
  const auto r = solve_K(ctx, 6);
  EXPECT_EQ(r.status, KStatus::empty_within);
  EXPECT_EQ(r.radius, 6u);
  EXPECT_TRUE(enumerate_K(ctx, 6).empty());
  EXPECT_EQ(ctx.b0, sub(kAS, {"a"}));
}

TEST(SolveK, CosetPropertyOnInstances) {
  const FreeBasis abs = kABS;
  const std::vector<Automorphism> autos{
      make(abs, {"a", "ab", "s"}), make(abs, {"a", "ab", "sA"}),
      make(abs, {"a", "b", "sB"}), make(abs, {"A", "b", "sb"})};
  for (const auto& alpha : autos) {
    const auto ctx = build_hnn_context(abs, {1, 2}, 3, alpha, std::nullopt, {});
    const auto sols = enumerate_K(ctx, 4);
    if (sols.empty()) continue;
    const Word k0 = sols.front();
    // Every word of k0 A0 within the radius is a solution and vice versa.
    for (const Word& k : enumerate_words(ctx.factor, 0, 4)) {
      const bool in_coset = ctx.a0.contains(k0.inverse() * k);
      const bool solves = std::find(sols.begin(), sols.end(), k) != sols.end();
      EXPECT_EQ(in_coset, solves) << abs.format(k);
    }
  }
}

TEST(ComputeB0, Examples) {
  auto ctx = twist_context();
  EXPECT_EQ(ctx.b0, ctx.a0);

  auto manual = flagship_context();
  manual.a0 = sub(kABS, {"a"});
  manual.k = {KStatus::found, kABS.parse("b"), 4};
  EXPECT_EQ(compute_B0(manual), sub(kABS, {"baB"}));

  auto flag = flagship_context();
  flag.a0 = SubgroupGraph::trivial(3);
  flag.k = {KStatus::empty_within, Word(), 4};
  // s ABab S is bounded, so the search recovers <ABab>.
  EXPECT_EQ(compute_B0(flag), sub(kABS, {"ABab"}));
}

TEST(ComputeB0, ConjugatesBackToA0) {
  const FreeBasis abs = kABS;
  for (const auto& alpha : {make(abs, {"a", "ab", "s"}), make(abs, {"a", "ab", "sA"}),
                            make(abs, {"a", "b", "sB"})}) {
    const auto ctx = build_hnn_context(abs, {1, 2}, 3, alpha, std::nullopt, {});
    if (ctx.k.status != KStatus::found) continue;
    EXPECT_EQ(ctx.b0.conjugate(ctx.k.k0), ctx.a0);
  }
}

TEST(ComputeB0, EmptyKSearchIsTwistInvariant) {
  // h = b: K is empty, B0 must satisfy alpha(B0) = h B0 h^-1.
  const FreeBasis abs = kABS;
  const auto alpha = make(abs, {"a", "b", "sB"});
  const auto ctx = build_hnn_context(abs, {1, 2}, 3, alpha, sub(abs, {"a"}),
                                     {40, 3, 4, 4, 0, 4});
  EXPECT_EQ(ctx.k.status, KStatus::empty_within);
  EXPECT_EQ(image_subgroup(alpha, ctx.b0), ctx.b0.conjugate(ctx.h.inverse()));
  EXPECT_FALSE(ctx.b0.is_trivial());
}

namespace {

const FreeBasis kABCS = FreeBasis::from_string("abcs");

HnnContext identity_context() {
  Bounds small;
  small.radius = 1;
  return build_hnn_context(kABCS, {1, 2, 3}, 4, make(kABCS, {"a", "b", "c", "s"}),
                           std::nullopt, small);
}

// All succession-legal ways to cut `w` (external syntax, stable letter s)
// into syllables.
std::vector<std::vector<Syllable>> all_decompositions(const FreeBasis& basis,
                                                      const std::string& w) {
  std::vector<std::vector<Syllable>> out;
  std::vector<Syllable> cur;
  auto allowed = [](int prev, int next) {
    if (prev == 0) return next == 1 || next == 2;
    if (prev == 1 || prev == 3) return next == 3 || next == 4;
    return next == 1 || next == 2;
  };
  auto is_h = [](const std::string& x) { return x.find_first_of("sS") == std::string::npos; };
  std::function<void(std::size_t, int)> go = [&](std::size_t pos, int prev) {
    if (pos == w.size()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t end = pos + 1; end <= w.size(); ++end) {
      const std::string piece = w.substr(pos, end - pos);
      for (int kind = 1; kind <= 4; ++kind) {
        std::string content;
        bool ok = false;
        if (kind == 1 && piece.size() >= 2 && piece.front() == 's' && piece.back() == 'S') {
          content = piece.substr(1, piece.size() - 2);
          ok = true;
        } else if (kind == 2 && piece.front() == 's') {
          content = piece.substr(1);
          ok = true;
        } else if (kind == 3 && piece.back() == 'S') {
          content = piece.substr(0, piece.size() - 1);
          ok = true;
        } else if (kind == 4) {
          content = piece;
          ok = !content.empty();
        }
        if (!ok || !is_h(content) || !allowed(prev, kind)) continue;
        cur.push_back({kind, basis.parse(content)});
        go(end, kind);
        cur.pop_back();
      }
    }
  };
  go(0, 0);
  return out;
}

}  // namespace

TEST(Syllables, Examples) {
  const auto ctx = identity_context();
  auto p = syllable_decompose(ctx, kABCS.parse("saSbsc"));
  ASSERT_EQ(p.route, Route::syllables);
  EXPECT_EQ(p.syllables, (std::vector<Syllable>{{1, kABCS.parse("a")},
                                                {4, kABCS.parse("b")},
                                                {2, kABCS.parse("c")}}));
  p = syllable_decompose(ctx, kABCS.parse("sasb"));
  EXPECT_EQ(p.syllables, (std::vector<Syllable>{{2, kABCS.parse("a")},
                                                {2, kABCS.parse("b")}}));
  EXPECT_EQ(syllable_decompose(ctx, kABCS.parse("a")).route, Route::in_factor);
  p = syllable_decompose(ctx, kABCS.parse("bsssB"));
  EXPECT_EQ(p.route, Route::stable_power);
  EXPECT_EQ(p.stable_power, 3);
}

TEST(Syllables, NormalizationIsAConjugateOfGOrItsInverse) {
  const auto ctx = identity_context();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Word g = kABCS.parse(oracle::random_word(rng, "abcs", 12));
    const auto p = syllable_decompose(ctx, g);
    const Word target = p.inverted ? g.inverse() : g;
    EXPECT_EQ(p.conjugator.inverse() * target * p.conjugator, p.normalized)
        << kABCS.format(g);
    if (p.route != Route::syllables) continue;
    EXPECT_EQ(p.normalized.front(), 4);
    Word product;
    for (const Syllable& s : p.syllables) product *= syllable_word(ctx, s);
    EXPECT_EQ(product, p.normalized);
  }
}

TEST(Syllables, DecompositionIsUnique) {
  const auto ctx = identity_context();
  std::mt19937_64 rng(19);
  int checked = 0;
  while (checked < 300) {
    const std::string raw = oracle::random_word(rng, "abcs", 12);
    if (std::count_if(raw.begin(), raw.end(), [](char c) { return c == 's' || c == 'S'; }) > 4) {
      continue;
    }
    const auto p = syllable_decompose(ctx, kABCS.parse(raw));
    if (p.route != Route::syllables) continue;
    const auto all = all_decompositions(kABCS, kABCS.format(p.normalized));
    ASSERT_EQ(all.size(), 1u) << kABCS.format(p.normalized);
    EXPECT_EQ(all.front(), p.syllables);
    ++checked;
  }
}

TEST(Admissible, Examples) {
  const auto twist = twist_context();
  EXPECT_TRUE(is_admissible(twist, {4, kAS.parse("a")}));

  auto ctx = identity_context();
  ctx.a0 = sub(kABCS, {"a"});
  ctx.b0 = sub(kABCS, {"a"});
  ctx.k = {KStatus::found, kABCS.parse("b"), 1};
  EXPECT_FALSE(is_admissible(ctx, {1, kABCS.parse("b")}));
  EXPECT_TRUE(is_admissible(ctx, {1, kABCS.parse("aa")}));
  // k0 x with x in A0.
  EXPECT_TRUE(is_admissible(ctx, {2, kABCS.parse("baaa")}));
  EXPECT_FALSE(is_admissible(ctx, {2, kABCS.parse("ab")}));
  // a k0 in A0.
  EXPECT_TRUE(is_admissible(ctx, {3, kABCS.parse("aB")}));
  ctx.k = {KStatus::empty_within, Word(), 1};
  EXPECT_FALSE(is_admissible(ctx, {2, kABCS.parse("b")}));
  EXPECT_FALSE(is_admissible(ctx, {3, kABCS.parse("B")}));
}

TEST(PolynomialElement, Examples) {
  const auto twist = twist_context();
  EXPECT_TRUE(is_polynomial_element(twist, kAS.parse("s")).polynomial);

  const auto flag = flagship_context();
  EXPECT_TRUE(is_polynomial_element(flag, kABS.parse("s")).polynomial);
  EXPECT_TRUE(is_polynomial_element(flag, kABS.parse("sABab")).polynomial);
  EXPECT_EQ(classify_element(flag.alpha, kABS.parse("sABab"), Metric::conjugacy()).cls,
            GrowthClass::bounded);
  const auto sa = is_polynomial_element(flag, kABS.parse("sa"));
  EXPECT_FALSE(sa.polynomial);
  EXPECT_EQ(sa.failing, 0u);
  EXPECT_EQ(classify_element(flag.alpha, kABS.parse("sa"), Metric::conjugacy()).cls,
            GrowthClass::exponential);
  EXPECT_FALSE(is_polynomial_element(flag, kABS.parse("saS")).polynomial);
  EXPECT_FALSE(is_polynomial_element(flag, kABS.parse("sabS")).polynomial);

  const std::vector<SubgroupGraph> h_structure{sub(kABS, {"abAB"})};
  EXPECT_TRUE(is_polynomial_element(flag, kABS.parse("sabABS"), &h_structure).polynomial);
  EXPECT_FALSE(is_polynomial_element(flag, kABS.parse("ab"), &h_structure).polynomial);
}

TEST(HnnStructure, Examples) {
  PeripheralStructure a;
  a.add(sub(kAS, {"a"}), "cyclic factor");
  auto s = hnn_peripheral_structure(twist_context(), a);
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_TRUE(s.entries[0].is_whole_group());

  PeripheralStructure comm;
  comm.add(sub(kABS, {"abAB"}), "declared");
  // <abAB> is conjugate to A0 = <ABab> and is absorbed.
  s = hnn_peripheral_structure(flagship_context(), comm);
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_EQ(s.entries[0], sub(kABS, {"ABab", "s"}));

  auto trivial_a0 = flagship_context();
  trivial_a0.a0 = SubgroupGraph::trivial(3);
  trivial_a0.b0 = trivial_a0.a0;
  s = hnn_peripheral_structure(trivial_a0, comm);
  ASSERT_EQ(s.entries.size(), 2u);
  EXPECT_EQ(s.entries[0], sub(kABS, {"abAB"}));
  EXPECT_EQ(s.entries[1], sub(kABS, {"s"}));

  const auto uni = build_hnn_context(kABS, {1, 2}, 3, make(kABS, {"a", "ab", "s"}),
                                     std::nullopt, {});
  EXPECT_EQ(uni.a0, sub(kABS, {"a", "b"}));
  PeripheralStructure whole_h;
  whole_h.add(sub(kABS, {"a", "b"}), "declared");
  s = hnn_peripheral_structure(uni, whole_h);
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_TRUE(s.entries[0].is_whole_group());
}

TEST(ProductContext, Examples) {
  const FreeBasis ab = FreeBasis::from_string("ab");
  EXPECT_NO_THROW(build_product_context(ab, {1}, {2}, make(ab, {"a", "b"})));
  EXPECT_NO_THROW(build_product_context(ab, {1}, {2}, make(ab, {"a", "B"})));
  EXPECT_THROW(build_product_context(ab, {1}, {2}, make(ab, {"b", "a"})),
               NormalizationError);
}

TEST(Twinned, Examples) {
  const FreeBasis ab = FreeBasis::from_string("ab");
  const std::vector<Letter> l2{1, 2};
  auto t = twinned(sub(ab, {"a"}), sub(ab, {"b"}), make(ab, {"a", "b"}), 4, 4, l2);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->exponent, 1u);
  EXPECT_TRUE(t->conjugator.is_identity());
  t = twinned(sub(ab, {"a"}), sub(ab, {"b"}), make(ab, {"a", "B"}), 4, 4, l2);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->exponent, 1u);

  const FreeBasis abc = FreeBasis::from_string("abc");
  const std::vector<Letter> l3{1, 2, 3};
  EXPECT_FALSE(twinned(sub(abc, {"a"}), sub(abc, {"b"}), make(abc, {"a", "bc", "c"}),
                       4, 4, l3)
                   .has_value());
}

TEST(Twinned, AgreesWithBruteForce) {
  const FreeBasis ab = FreeBasis::from_string("ab");
  const std::vector<Letter> l2{1, 2};
  const auto inner = make(ab, {"a", "Aba"});
  const auto a = sub(ab, {"a"});
  const auto b = sub(ab, {"b"});
  // Conjugation by a: alpha(<b>) = a^-1 <b> a, alpha(<a>) = <a> = a^-1 <a> a.
  const auto t = twinned(a, b, inner, 3, 2, l2);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->exponent, 1u);
  EXPECT_EQ(t->conjugator, ab.parse("a"));
}

TEST(ProductStructure, Examples) {
  const FreeBasis ab = FreeBasis::from_string("ab");
  auto ctx = build_product_context(ab, {1}, {2}, make(ab, {"a", "b"}));
  PeripheralStructure s1, s2;
  s1.add(sub(ab, {"a"}), "cyclic factor");
  s2.add(sub(ab, {"b"}), "cyclic factor");
  auto r = product_peripheral_structure(ctx, s1, s2, {});
  ASSERT_EQ(r.structure.entries.size(), 1u);
  EXPECT_TRUE(r.structure.entries[0].is_whole_group());

  const FreeBasis abc = FreeBasis::from_string("abc");
  auto fc = build_product_context(abc, {1, 2}, {3}, make(abc, {"ab", "a", "c"}));
  PeripheralStructure f1, f2;
  f1.add(sub(abc, {"abAB"}), "declared");
  f2.add(sub(abc, {"c"}), "cyclic factor");
  r = product_peripheral_structure(fc, f1, f2, {});
  ASSERT_EQ(r.structure.entries.size(), 2u);
  EXPECT_EQ(r.structure.entries[0], sub(abc, {"abAB"}));
  EXPECT_EQ(r.structure.entries[1], sub(abc, {"c"}));
  EXPECT_TRUE(r.preserved_left.is_trivial());

  const FreeBasis abcd = FreeBasis::from_string("abcd");
  auto two = build_product_context(abcd, {1, 2}, {3, 4},
                                   make(abcd, {"ab", "a", "cd", "c"}));
  PeripheralStructure t1, t2;
  t1.add(sub(abcd, {"abAB"}), "declared");
  t2.add(sub(abcd, {"cdCD"}), "declared");
  r = product_peripheral_structure(two, t1, t2, {});
  ASSERT_EQ(r.structure.entries.size(), 2u);

  PeripheralStructure both;
  both.add(sub(abc, {"a"}), "x");
  both.add(sub(abc, {"b"}), "y");
  auto idc = build_product_context(abc, {1, 2}, {3}, make(abc, {"a", "b", "c"}));
  EXPECT_THROW(product_peripheral_structure(idc, both, f2, {}), InconsistencyError);
}

TEST(Verify, Examples) {
  const FreeBasis ab = FreeBasis::from_string("ab");
  const auto fib = make(ab, {"ab", "a"});
  auto rep = verify_peripheral_structure(ab, fib, {sub(ab, {"abAB"})}, {});
  EXPECT_TRUE(rep.malnormal());
  EXPECT_TRUE(rep.growth_ok());
  EXPECT_TRUE(rep.twin_free());
  EXPECT_TRUE(rep.complete());
  EXPECT_GT(rep.sampled, 0u);

  rep = verify_peripheral_structure(ab, make(ab, {"a", "b"}), {sub(ab, {"a"})}, {});
  EXPECT_FALSE(rep.complete());
  ASSERT_FALSE(rep.completeness_failures.empty());
  EXPECT_EQ(rep.completeness_failures.front(), ab.parse("b"));

  rep = verify_peripheral_structure(ab, make(ab, {"a", "b"}), {sub(ab, {"aa"})}, {});
  EXPECT_FALSE(rep.malnormal());
}

TEST(Decomposition, Flagship) {
  const auto alpha = make(kABS, {"ab", "a", "s"});
  const std::vector<SplitSpec> splits{{SplitSpec::Kind::hnn, {'a', 'b'}, {}, 's'}};
  const std::vector<NamedSubgroup> subs{{"P", {kABS.parse("abAB")}}};
  const auto r = run_decomposition(kABS, alpha, splits, subs, {});
  EXPECT_EQ(r.root_case, "hnn-4");
  ASSERT_EQ(r.structure.entries.size(), 1u);
  EXPECT_EQ(r.structure.entries[0], sub(kABS, {"ABab", "s"}));
  EXPECT_TRUE(r.verification.passed());
  ASSERT_EQ(r.nodes.size(), 2u);
  EXPECT_EQ(r.nodes.back().scott, (std::pair<int, int>{1, 1}));
  EXPECT_EQ(r.nodes.front().kind, NodeReport::Kind::leaf);
}

TEST(Decomposition, ProductOfCyclicFactorsUnderIdentity) {
  const FreeBasis ab = FreeBasis::from_string("ab");
  const std::vector<SplitSpec> splits{{SplitSpec::Kind::product, {'a'}, {'b'}, 0}};
  const auto r = run_decomposition(ab, make(ab, {"a", "b"}), splits, {}, {});
  EXPECT_TRUE(r.nodes.back().degenerate);
  EXPECT_EQ(r.root_case, "two-parabolics");
  EXPECT_EQ(r.nodes.back().scott, (std::pair<int, int>{0, 2}));
  EXPECT_TRUE(r.verification.passed());
}

TEST(Decomposition, NestedAndUnmatchedSplits) {
  const FreeBasis abcs = kABCS;
  const auto alpha = make(abcs, {"ab", "a", "c", "s"});
  const std::vector<SplitSpec> nested{
      {SplitSpec::Kind::hnn, {'a', 'b', 'c'}, {}, 's'},
      {SplitSpec::Kind::product, {'a', 'b'}, {'c'}, 0}};
  const std::vector<NamedSubgroup> subs{{"P", {abcs.parse("ABab")}}};
  const auto r = run_decomposition(abcs, alpha, nested, subs, {});
  EXPECT_EQ(r.nodes.size(), 4u);
  EXPECT_EQ(r.nodes[2].case_label, "two-parabolics");
  ASSERT_EQ(r.structure.entries.size(), 1u);
  EXPECT_EQ(r.structure.entries[0], sub(abcs, {"ABab", "c", "s"}));
  EXPECT_TRUE(r.verification.malnormal());

  const std::vector<SplitSpec> stray{{SplitSpec::Kind::product, {'a'}, {'c'}, 0}};
  EXPECT_THROW(run_decomposition(abcs, alpha, stray, subs, {}), ConfigurationError);
}
