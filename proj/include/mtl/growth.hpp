#pragma once

// Growth of n -> length(alpha^n(g)) classified as bounded, polynomial or
// exponential from a finite horizon.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtl/autos.hpp"
#include "mtl/subgroups.hpp"
#include "mtl/words.hpp"

namespace mtl {

inline constexpr std::size_t kDefaultHorizon = 40;
inline constexpr std::size_t kMinimumHorizon = 8;
/// Iterates longer than this stop the scan; the sequence is then truncated.
inline constexpr std::size_t kDefaultLengthCap = std::size_t{1} << 18;

struct GrowthSequence {
  Word element;
  Metric metric = Metric::word();
  std::size_t horizon = 0;
  /// values[n] = length(alpha^n(element)); holds every computed value, so
  /// fewer than horizon + 1 entries when `truncated`.
  std::vector<std::size_t> values;
  bool truncated = false;
};

GrowthSequence growth_sequence(const Automorphism& alpha, const Word& g,
                               std::size_t horizon, const Metric& metric,
                               std::size_t cap = kDefaultLengthCap);

enum class GrowthClass { bounded, polynomial, exponential, inconclusive };

std::string_view to_string(GrowthClass c);

struct ClassifyOptions {
  /// Geometric-mean ratio threshold over the last half.
  double tau = 0.05;
  /// Minimum log-log slope over the last half for an exponential verdict.
  double min_exponential_slope = 4.5;
  std::size_t max_degree = 8;
  std::size_t cap = kDefaultLengthCap;
};

struct GrowthReport {
  GrowthClass cls = GrowthClass::inconclusive;
  std::optional<std::size_t> degree;
  std::optional<double> rate;
  /// Polynomial: spread of the degree-th differences.  Exponential: largest
  /// deviation of a log ratio from the mean log ratio.
  double residual = 0.0;
  std::optional<OrbitCertificate> certificate;
  bool certified = false;
  std::string evidence;
  GrowthSequence sequence;

  bool non_exponential() const {
    return cls == GrowthClass::bounded || cls == GrowthClass::polynomial;
  }
};

/// Bounded iff an orbit certificate exists within the computed horizon
/// (repeated conjugacy class, or repeated word for the word metric).
/// Otherwise exponential iff both the ratio and the slope tests hold;
/// otherwise polynomial of the least degree d >= max(1, rounded slope) whose
/// d-th differences over the last half vary by at most 2 + 2 log2(max).
GrowthReport classify(const GrowthSequence& seq, const Automorphism& alpha,
                      const ClassifyOptions& options = {});

/// growth_sequence + classify.
GrowthReport classify_element(const Automorphism& alpha, const Word& g,
                              const Metric& metric,
                              std::size_t horizon = kDefaultHorizon,
                              const ClassifyOptions& options = {});

/// Word-length classification of the worst basis element of an
/// alpha-invariant subgroup; the report's element is that generator.
/// Throws InvarianceError when alpha(A) != A.
GrowthReport subgroup_growth(const Automorphism& alpha, const SubgroupGraph& a,
                             std::size_t horizon = kDefaultHorizon,
                             const ClassifyOptions& options = {});

}  // namespace mtl
