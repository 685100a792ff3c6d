#pragma once

// Peripheral structures for automorphisms preserving a one-edge free
// splitting: G = H * <s> (HNN with trivial edge group) or G = H1 * H2.
//
// All subgroups live in the ambient free group, so a node of a nested
// decomposition uses the same alphabet as the root.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtl/autos.hpp"
#include "mtl/growth.hpp"
#include "mtl/subgroups.hpp"
#include "mtl/words.hpp"

namespace mtl {

struct Bounds {
  std::size_t horizon = kDefaultHorizon;
  std::size_t radius = 4;
  std::size_t max_exp = 4;
  std::size_t max_conj = 4;
  std::uint64_t seed = 0;
  /// Cyclic words up to this length are sampled for completeness.
  std::size_t sample_length = 4;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

// ---------------------------------------------------------------- HNN case

enum class KStatus { found, empty_within };

struct KResult {
  KStatus status = KStatus::empty_within;
  Word k0;  // meaningful when found
  std::size_t radius = 0;
};

struct HnnContext {
  FreeBasis basis;
  std::vector<Letter> factor;  // letters of H
  Letter stable = 0;
  Automorphism alpha;
  /// alpha(s) = s h^-1.
  Word h;
  SubgroupGraph a0;
  bool a0_supplied = false;
  /// Radius of the A0 search (0 when supplied).
  std::size_t a0_radius = 0;
  KResult k;
  SubgroupGraph b0;
  std::size_t b0_radius = 0;
  Bounds bounds;

  bool in_factor(const Word& w) const;
};

/// Checks alpha(H) = H and alpha(s) = s h^-1 (NormalizationError), finds or
/// verifies A0, solves for K and computes B0.  A supplied A0 must be
/// invariant (InvarianceError) and of non-exponential growth (DomainError).
HnnContext build_hnn_context(const FreeBasis& basis,
                             std::vector<Letter> factor, Letter stable,
                             const Automorphism& alpha,
                             std::optional<SubgroupGraph> a0,
                             const Bounds& bounds);

/// k^-1 h^-1 alpha(k).  Throws DomainError if k is not in H.
Word k_prime(const HnnContext& ctx, const Word& k);

/// All k in H with |k| <= radius and k_prime(k) in A0, in shortlex order.
std::vector<Word> enumerate_K(const HnnContext& ctx, std::size_t radius);

/// Least solution within the radius.  Throws InconsistencyError if the
/// solutions found do not lie in a single left coset k0 A0.
KResult solve_K(const HnnContext& ctx, std::size_t radius);

/// With k0: the fold of k0 a k0^-1 over a basis of A0.  Otherwise the fold
/// of the b in H, |b| <= radius, with s b s^-1 of non-exponential word
/// growth, cut down until alpha(B0) = h B0 h^-1.
SubgroupGraph compute_B0(const HnnContext& ctx);

struct Syllable {
  int kind = 0;  // 1: s a S, 2: s a, 3: a S, 4: a
  Word content;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

Word syllable_word(const HnnContext& ctx, const Syllable& s);

enum class Route { syllables, in_factor, stable_power };

struct SyllableParse {
  Route route = Route::syllables;
  /// Cyclically reduced conjugate of g (or of g^-1) that starts with s and
  /// ends with a letter of H.
  Word normalized;
  /// normalized == conjugator^-1 * (inverted ? g^-1 : g) * conjugator.
  Word conjugator;
  bool inverted = false;
  /// Exponent m when g is conjugate to s^m.
  long stable_power = 0;
  std::vector<Syllable> syllables;
};

SyllableParse syllable_decompose(const HnnContext& ctx, const Word& g);

bool is_admissible(const HnnContext& ctx, const Syllable& syl);

struct ElementVerdict {
  bool polynomial = false;
  Route route = Route::syllables;
  /// Index of the first inadmissible syllable.
  std::optional<std::size_t> failing;
  std::string reason;
};

/// Polynomial conjugacy-length growth of g from the splitting data.  Elements
/// of H are judged by `h_structure` when given (conjugate into an entry),
/// otherwise by A0.
ElementVerdict is_polynomial_element(
    const HnnContext& ctx, const Word& g,
    const std::vector<SubgroupGraph>* h_structure = nullptr);

// ------------------------------------------------------ peripheral family

struct PeripheralStructure {
  std::vector<SubgroupGraph> entries;
  std::vector<std::string> provenance;

  void add(SubgroupGraph g, std::string why) {
    entries.push_back(std::move(g));
    provenance.push_back(std::move(why));
  }
};

/// H entries not conjugate to A0, plus the fold of A0 with s k0 (K found)
/// or of A0 with s B0 s^-1 (K empty within the radius), if nontrivial.
PeripheralStructure hnn_peripheral_structure(const HnnContext& ctx,
                                             const PeripheralStructure& h_structure);

// -------------------------------------------------- free product case

struct ProductContext {
  FreeBasis basis;
  std::vector<Letter> left;
  std::vector<Letter> right;
  Automorphism alpha;
};

/// Throws NormalizationError unless alpha preserves both factors exactly.
ProductContext build_product_context(const FreeBasis& basis,
                                     std::vector<Letter> left,
                                     std::vector<Letter> right,
                                     const Automorphism& alpha);

struct Twin {
  std::size_t exponent = 0;
  Word conjugator;
};

/// Least (n, shortlex g), n <= max_exp, |g| <= max_conj over `letters`,
/// with alpha^n(A) = g^-1 A g and alpha^n(B) = g^-1 B g.
std::optional<Twin> twinned(const SubgroupGraph& a, const SubgroupGraph& b,
                            const Automorphism& alpha, std::size_t max_exp,
                            std::size_t max_conj,
                            std::span<const Letter> letters);

struct ProductResult {
  PeripheralStructure structure;
  /// Exactly preserved entries of each factor (trivial if none).
  SubgroupGraph preserved_left;
  SubgroupGraph preserved_right;
};

/// Factor entries with no twin in the other factor, plus the fold of the
/// exactly preserved pair.  Two preserved entries in one factor raise
/// InconsistencyError.
ProductResult product_peripheral_structure(const ProductContext& ctx,
                                           const PeripheralStructure& s1,
                                           const PeripheralStructure& s2,
                                           const Bounds& bounds);

// ------------------------------------------------------------ verification

struct VerificationReport {
  MalnormalityReport malnormality;
  /// Entry and basis element classified exponential or inconclusive.
  std::vector<std::pair<std::size_t, Word>> growth_failures;
  std::optional<std::pair<std::size_t, std::size_t>> twin_pair;
  std::optional<Twin> twin;
  std::vector<Word> completeness_failures;
  std::size_t sampled = 0;
  Bounds bounds;

  bool malnormal() const { return malnormality.malnormal; }
  bool growth_ok() const { return growth_failures.empty(); }
  bool twin_free() const { return !twin_pair.has_value(); }
  bool complete() const { return completeness_failures.empty(); }
  bool passed() const {
    return malnormal() && growth_ok() && twin_free() && complete();
  }
};

/// Malnormality, conjugacy-length growth of basis elements, pairwise
/// twinning and the completeness sample, all inside the subgroup generated
/// by `letters` (every basis letter when empty).
VerificationReport verify_peripheral_structure(
    const FreeBasis& basis, const Automorphism& alpha,
    const std::vector<SubgroupGraph>& candidate, const Bounds& bounds,
    std::span<const Letter> letters = {});

// ------------------------------------------------------ decomposition tree

struct SplitSpec {
  enum class Kind { hnn, product };
  Kind kind = Kind::hnn;
  std::vector<char> factor;  // hnn: H; product: left factor
  std::vector<char> right;   // product only
  char stable = 0;           // hnn only

  friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

struct NamedSubgroup {
  std::string name;
  std::vector<Word> generators;

  friend bool operator==(const NamedSubgroup&, const NamedSubgroup&) = default;
};

struct NodeReport {
  enum class Kind { leaf, hnn, product };
  Kind kind = Kind::leaf;
  std::vector<Letter> letters;
  std::vector<std::size_t> children;  // indices into DecompositionResult::nodes
  PeripheralStructure structure;
  std::string case_label;
  /// (free rank, number of factors) of the node's splitting.
  std::pair<int, int> scott{0, 0};
  std::size_t kurosh_rank = 0;
  std::optional<HnnContext> hnn;
  std::optional<ProductResult> product;
  bool degenerate = false;  // structure is the node's whole group
};

struct DecompositionResult {
  std::vector<NodeReport> nodes;  // children before parents; root last
  PeripheralStructure structure;
  VerificationReport verification;
  std::string root_case;
};

/// Builds the tree of declared splittings (matching letter sets), computes
/// structures bottom-up and verifies the root.  Leaves of rank 1 carry
/// their own cyclic group; larger leaves take the declared subgroups whose
/// letters lie in the leaf.  With no splittings the declared subgroups are
/// verified directly.
DecompositionResult run_decomposition(const FreeBasis& basis,
                                      const Automorphism& alpha,
                                      const std::vector<SplitSpec>& splits,
                                      const std::vector<NamedSubgroup>& subgroups,
                                      const Bounds& bounds);

}  // namespace mtl
