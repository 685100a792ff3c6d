#include "mtl/growth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "mtl/error.hpp"

namespace mtl {

std::string_view to_string(GrowthClass c) {
  switch (c) {
    case GrowthClass::bounded:
      return "bounded";
    case GrowthClass::polynomial:
      return "polynomial";
    case GrowthClass::exponential:
      return "exponential";
    case GrowthClass::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

GrowthSequence growth_sequence(const Automorphism& alpha, const Word& g,
                               std::size_t horizon, const Metric& metric,
                               std::size_t cap) {
  GrowthSequence seq;
  seq.element = g;
  seq.metric = metric;
  seq.horizon = horizon;
  seq.values.reserve(horizon + 1);
  // Conjugacy and tree lengths only see the conjugacy class, so iterating
  // the cyclic core keeps the words short.
  const bool cyclic = metric.kind() != Metric::Kind::word_length;
  Word w = cyclic ? cyclic_core(g) : g;
  seq.values.push_back(length(w, metric));
  for (std::size_t n = 1; n <= horizon; ++n) {
    auto next = substitute(alpha.images(), w, cap);
    if (!next) {
      seq.truncated = true;
      break;
    }
    w = cyclic ? cyclic_core(*next) : std::move(*next);
    seq.values.push_back(length(w, metric));
  }
  return seq;
}

namespace {

std::vector<double> differences(std::vector<double> xs, std::size_t order) {
  for (std::size_t k = 0; k < order && !xs.empty(); ++k) {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) xs[i] = xs[i + 1] - xs[i];
    xs.pop_back();
  }
  return xs;
}

int severity(const GrowthReport& r) {
  switch (r.cls) {
    case GrowthClass::bounded:
      return 0;
    case GrowthClass::polynomial:
      return 1 + static_cast<int>(r.degree.value_or(0));
    case GrowthClass::inconclusive:
      return 100;
    case GrowthClass::exponential:
      return 101;
  }
  return 100;
}

}  // namespace

GrowthReport classify(const GrowthSequence& seq, const Automorphism& alpha,
                      const ClassifyOptions& options) {
  GrowthReport r;
  r.sequence = seq;
  if (seq.horizon < kMinimumHorizon) {
    r.evidence = "horizon " + std::to_string(seq.horizon) + " below " +
                 std::to_string(kMinimumHorizon);
    return r;
  }
  const auto& v = seq.values;
  const std::size_t n = v.size() - 1;

  const OrbitKind kind = seq.metric.kind() == Metric::Kind::word_length
                             ? OrbitKind::exact
                             : OrbitKind::conjugacy;
  // A repeat needs two equal lengths.
  std::vector<std::size_t> sorted(v);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    r.certificate = orbit_period(alpha, seq.element, n, kind, options.cap);
  }
  if (r.certificate) {
    r.cls = GrowthClass::bounded;
    r.certified = true;
    r.evidence = std::string(kind == OrbitKind::exact ? "word" : "class") +
                 " repeats with period " +
                 std::to_string(r.certificate->period) + " from n=" +
                 std::to_string(r.certificate->start);
    return r;
  }
  if (n < kMinimumHorizon) {
    r.evidence = "only " + std::to_string(n + 1) + " values below length cap";
    return r;
  }

  const std::size_t h = n / 2;
  std::size_t i0 = h;
  while (i0 < n && v[i0] == 0) ++i0;
  double slope = 0.0;
  if (i0 < n && v[n] > 0) {
    const double total = std::log(static_cast<double>(v[n]) / static_cast<double>(v[i0]));
    const double ratio = std::exp(total / static_cast<double>(n - i0));
    slope = total / std::log(static_cast<double>(n + 1) / static_cast<double>(i0 + 1));
    if (ratio > 1.0 + options.tau && slope > options.min_exponential_slope) {
      r.cls = GrowthClass::exponential;
      r.rate = ratio;
      double dev = 0.0;
      for (std::size_t i = i0; i < n; ++i) {
        const double step =
            std::log(static_cast<double>(v[i + 1]) / static_cast<double>(v[i]));
        dev = std::max(dev, std::abs(step - std::log(ratio)));
      }
      r.residual = dev;
      r.evidence = "ratio " + std::to_string(ratio) + ", log-log slope " +
                   std::to_string(slope) + " over n=" + std::to_string(i0) +
                   ".." + std::to_string(n);
      return r;
    }
  }

  std::vector<double> window(v.begin() + static_cast<std::ptrdiff_t>(h), v.end());
  const double top = *std::max_element(window.begin(), window.end());
  const double noise = 2.0 + 2.0 * std::log2(std::max(top, 1.0));
  // Small leading coefficients hide below the noise bound, so the search
  // starts at the degree suggested by the slope.
  const auto first = static_cast<std::size_t>(std::max(1.0, std::round(slope)));
  for (std::size_t k = first; k <= options.max_degree; ++k) {
    const auto d = differences(window, k);
    if (d.size() < 2) break;
    const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    const double spread = *hi - *lo;
    if (spread <= noise) {
      r.cls = GrowthClass::polynomial;
      r.degree = k;
      r.residual = spread;
      r.evidence = std::to_string(k) + "-th differences spread " +
                   std::to_string(spread) + " within noise " +
                   std::to_string(noise);
      return r;
    }
  }
  r.evidence = "no degree <= " + std::to_string(options.max_degree) +
               " fits and tail is not exponential";
  return r;
}

GrowthReport classify_element(const Automorphism& alpha, const Word& g,
                              const Metric& metric, std::size_t horizon,
                              const ClassifyOptions& options) {
  return classify(growth_sequence(alpha, g, horizon, metric, options.cap),
                  alpha, options);
}

GrowthReport subgroup_growth(const Automorphism& alpha, const SubgroupGraph& a,
                             std::size_t horizon,
                             const ClassifyOptions& options) {
  if (image_subgroup(alpha, a) != a) {
    throw InvarianceError("subgroup is not invariant under the automorphism");
  }
  if (a.is_trivial()) {
    return classify_element(alpha, Word(), Metric::word(), horizon, options);
  }
  std::optional<GrowthReport> worst;
  for (const Word& x : a.basis()) {
    GrowthReport r = classify_element(alpha, x, Metric::word(), horizon, options);
    if (!worst || severity(r) > severity(*worst)) worst = std::move(r);
  }
  return *worst;
}

}  // namespace mtl
