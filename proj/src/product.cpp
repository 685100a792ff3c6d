#include <algorithm>

#include "mtl/error.hpp"
#include "mtl/splittings.hpp"

namespace mtl {

namespace {

SubgroupGraph power_image(const Automorphism& alpha, const SubgroupGraph& a,
                          std::size_t n) {
  std::vector<Word> gens;
  for (const Word& x : a.basis()) gens.push_back(alpha.apply_power(x, n));
  return SubgroupGraph::fold(a.alphabet(), gens);
}

void check_preserved(const FreeBasis& basis, const Automorphism& alpha,
                     const SubgroupGraph& factor, const char* side) {
  const SubgroupGraph img = image_subgroup(alpha, factor);
  if (img == factor) return;
  std::string what = std::string(side) + " factor is not preserved";
  if (auto g = subgroups_conjugate(factor, img)) {
    what += "; its image is its conjugate by " + basis.format(*g);
  }
  throw NormalizationError(what);
}

}  // namespace

ProductContext build_product_context(const FreeBasis& basis,
                                     std::vector<Letter> left,
                                     std::vector<Letter> right,
                                     const Automorphism& alpha) {
  if (left.empty() || right.empty()) throw DomainError("empty product factor");
  for (Letter x : left) {
    if (std::find(right.begin(), right.end(), x) != right.end()) {
      throw DomainError("product factors share a letter");
    }
  }
  const std::size_t n = basis.rank();
  check_preserved(basis, alpha, SubgroupGraph::free_factor(n, left), "left");
  check_preserved(basis, alpha, SubgroupGraph::free_factor(n, right), "right");
  return ProductContext{basis, std::move(left), std::move(right), alpha};
}

std::optional<Twin> twinned(const SubgroupGraph& a, const SubgroupGraph& b,
                            const Automorphism& alpha, std::size_t max_exp,
                            std::size_t max_conj, std::span<const Letter> letters) {
  std::vector<Word> conjugators;
  for (std::size_t n = 1; n <= max_exp; ++n) {
    const SubgroupGraph an = power_image(alpha, a, n);
    const SubgroupGraph bn = power_image(alpha, b, n);
    if (!subgroups_conjugate(a, an) || !subgroups_conjugate(b, bn)) continue;
    if (conjugators.empty()) conjugators = enumerate_words(letters, 0, max_conj);
    for (const Word& g : conjugators) {
      if (a.conjugate(g) == an && b.conjugate(g) == bn) return Twin{n, g};
    }
  }
  return std::nullopt;
}

ProductResult product_peripheral_structure(const ProductContext& ctx,
                                           const PeripheralStructure& s1,
                                           const PeripheralStructure& s2,
                                           const Bounds& bounds) {
  const std::size_t n = ctx.basis.rank();
  std::vector<Letter> all(ctx.left);
  all.insert(all.end(), ctx.right.begin(), ctx.right.end());

  auto preserved = [&](const PeripheralStructure& s, const char* side) {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
      if (s.entries[i].is_trivial()) continue;
      if (image_subgroup(ctx.alpha, s.entries[i]) != s.entries[i]) continue;
      if (found) {
        throw InconsistencyError(std::string("two preserved entries in the ") +
                                 side + " factor");
      }
      found = i;
    }
    return found;
  };
  const auto p1 = preserved(s1, "left");
  const auto p2 = preserved(s2, "right");

  ProductResult r;
  r.preserved_left = p1 ? s1.entries[*p1] : SubgroupGraph::trivial(n);
  r.preserved_right = p2 ? s2.entries[*p2] : SubgroupGraph::trivial(n);

  auto keep_untwinned = [&](const PeripheralStructure& mine,
                            std::optional<std::size_t> skip,
                            const PeripheralStructure& other) {
    for (std::size_t i = 0; i < mine.entries.size(); ++i) {
      if (skip && *skip == i) continue;
      bool twin = false;
      for (const SubgroupGraph& e : other.entries) {
        if (twinned(mine.entries[i], e, ctx.alpha, bounds.max_exp,
                    bounds.max_conj, all)) {
          twin = true;
          break;
        }
      }
      if (!twin) r.structure.add(mine.entries[i], mine.provenance[i]);
    }
  };
  keep_untwinned(s1, p1, s2);
  keep_untwinned(s2, p2, s1);

  std::vector<Word> gens = r.preserved_left.basis();
  for (const Word& x : r.preserved_right.basis()) gens.push_back(x);
  auto joint = SubgroupGraph::fold(n, gens);
  if (!joint.is_trivial()) r.structure.add(std::move(joint), "preserved pair");
  return r;
}

}  // namespace mtl
