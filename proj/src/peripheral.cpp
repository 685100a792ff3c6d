#include <algorithm>
#include <functional>
#include <set>

#include "mtl/error.hpp"
#include "mtl/splittings.hpp"

namespace mtl {

VerificationReport verify_peripheral_structure(
    const FreeBasis& basis, const Automorphism& alpha,
    const std::vector<SubgroupGraph>& candidate, const Bounds& bounds,
    std::span<const Letter> letters) {
  std::vector<Letter> all;
  if (letters.empty()) {
    for (Letter x = 1; static_cast<std::size_t>(x) <= basis.rank(); ++x) all.push_back(x);
    letters = all;
  }
  VerificationReport rep;
  rep.bounds = bounds;
  rep.malnormality = is_malnormal_family(candidate);

  for (std::size_t i = 0; i < candidate.size(); ++i) {
    for (const Word& x : candidate[i].basis()) {
      const auto r = classify_element(alpha, x, Metric::conjugacy(), bounds.horizon);
      if (!r.non_exponential()) rep.growth_failures.emplace_back(i, x);
    }
  }

  for (std::size_t i = 0; i < candidate.size() && !rep.twin_pair; ++i) {
    for (std::size_t j = i + 1; j < candidate.size(); ++j) {
      if (candidate[i].is_trivial() || candidate[j].is_trivial()) continue;
      if (auto t = twinned(candidate[i], candidate[j], alpha, bounds.max_exp,
                           bounds.max_conj, letters)) {
        rep.twin_pair = {i, j};
        rep.twin = std::move(t);
        break;
      }
    }
  }

  for (const Word& w : enumerate_words(letters, 1, bounds.sample_length)) {
    if (!is_cyclically_reduced(w) || conjugacy_class_key(w) != w) continue;
    const bool covered = std::any_of(
        candidate.begin(), candidate.end(),
        [&](const SubgroupGraph& e) { return conjugate_into(e, w).has_value(); });
    if (covered) continue;
    ++rep.sampled;
    const auto r = classify_element(alpha, w, Metric::conjugacy(), bounds.horizon);
    if (r.cls != GrowthClass::exponential) rep.completeness_failures.push_back(w);
  }
  return rep;
}

namespace {

std::vector<Letter> letters_of(const FreeBasis& basis, const std::vector<char>& names) {
  std::vector<Letter> out;
  for (char c : names) {
    auto x = basis.index_of(c);
    if (!x) throw ConfigurationError(std::string("unknown generator '") + c + "' in split");
    out.push_back(*x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string hnn_case(const HnnContext& ctx) {
  const bool a = !ctx.a0.is_trivial();
  const bool b = !ctx.b0.is_trivial();
  const bool k = ctx.k.status == KStatus::found;
  if (!a && !b) return k ? "hnn-2" : "hnn-1";
  if (a != b) return k ? "hnn-unclassified" : "hnn-2";
  return k ? "hnn-4" : "hnn-3";
}

std::string product_case(const ProductResult& r) {
  const int parabolic = (r.preserved_left.is_trivial() ? 0 : 1) +
                        (r.preserved_right.is_trivial() ? 0 : 1);
  switch (parabolic) {
    case 0:
      return "both-loxodromic";
    case 1:
      return "one-parabolic";
    default:
      return "two-parabolics";
  }
}

}  // namespace

DecompositionResult run_decomposition(const FreeBasis& basis,
                                      const Automorphism& alpha,
                                      const std::vector<SplitSpec>& splits,
                                      const std::vector<NamedSubgroup>& subgroups,
                                      const Bounds& bounds) {
  const std::size_t n = basis.rank();
  struct Resolved {
    const SplitSpec* spec;
    std::vector<Letter> first;
    std::vector<Letter> second;  // product: right; hnn: {stable}
    std::vector<Letter> all;
  };
  std::vector<Resolved> resolved;
  for (const SplitSpec& s : splits) {
    Resolved r{&s, letters_of(basis, s.factor), {}, {}};
    if (s.kind == SplitSpec::Kind::hnn) {
      r.second = letters_of(basis, {s.stable});
    } else {
      r.second = letters_of(basis, s.right);
    }
    r.all = r.first;
    r.all.insert(r.all.end(), r.second.begin(), r.second.end());
    std::sort(r.all.begin(), r.all.end());
    if (std::adjacent_find(r.all.begin(), r.all.end()) != r.all.end()) {
      throw ConfigurationError("split repeats a generator");
    }
    resolved.push_back(std::move(r));
  }
  std::vector<bool> used(resolved.size(), false);

  DecompositionResult out;
  std::function<std::size_t(const std::vector<Letter>&)> build =
      [&](const std::vector<Letter>& letters) -> std::size_t {
    NodeReport node;
    node.letters = letters;
    const Resolved* match = nullptr;
    for (std::size_t i = 0; i < resolved.size(); ++i) {
      if (!used[i] && resolved[i].all == letters) {
        used[i] = true;
        match = &resolved[i];
        break;
      }
    }
    if (!match) {
      node.kind = NodeReport::Kind::leaf;
      node.kurosh_rank = 1;
      node.scott = {0, 1};
      node.case_label = "leaf";
      if (letters.size() == 1) {
        node.structure.add(SubgroupGraph::free_factor(n, letters), "cyclic factor");
      } else {
        for (const NamedSubgroup& s : subgroups) {
          const bool inside = std::all_of(
              s.generators.begin(), s.generators.end(), [&](const Word& w) {
                return std::all_of(w.letters().begin(), w.letters().end(), [&](Letter x) {
                  return std::binary_search(letters.begin(), letters.end(), x > 0 ? x : -x);
                });
              });
          if (!inside) continue;
          node.structure.add(SubgroupGraph::fold(n, s.generators), "declared " + s.name);
        }
      }
    } else if (match->spec->kind == SplitSpec::Kind::hnn) {
      node.kind = NodeReport::Kind::hnn;
      node.scott = {1, 1};
      node.kurosh_rank = 2;
      node.children.push_back(build(match->first));
      const PeripheralStructure& h = out.nodes[node.children[0]].structure;
      HnnContext ctx = build_hnn_context(basis, match->first, match->second.front(),
                                         alpha, std::nullopt, bounds);
      node.structure = hnn_peripheral_structure(ctx, h);
      node.case_label = hnn_case(ctx);
      node.hnn = std::move(ctx);
    } else {
      node.kind = NodeReport::Kind::product;
      node.scott = {0, 2};
      node.kurosh_rank = 2;
      node.children.push_back(build(match->first));
      node.children.push_back(build(match->second));
      const ProductContext ctx =
          build_product_context(basis, match->first, match->second, alpha);
      ProductResult r = product_peripheral_structure(
          ctx, out.nodes[node.children[0]].structure,
          out.nodes[node.children[1]].structure, bounds);
      node.structure = r.structure;
      node.case_label = product_case(r);
      node.product = std::move(r);
    }
    const auto whole = SubgroupGraph::free_factor(n, letters);
    node.degenerate = node.structure.entries.size() == 1 &&
                      node.structure.entries.front() == whole;
    out.nodes.push_back(std::move(node));
    return out.nodes.size() - 1;
  };

  std::vector<Letter> everything;
  for (Letter x = 1; static_cast<std::size_t>(x) <= n; ++x) everything.push_back(x);
  const std::size_t root = build(everything);
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) {
      throw ConfigurationError("split does not match any node of the decomposition");
    }
  }
  out.structure = out.nodes[root].structure;
  out.root_case = out.nodes[root].case_label;
  out.verification =
      verify_peripheral_structure(basis, alpha, out.structure.entries, bounds);
  return out;
}

}  // namespace mtl
