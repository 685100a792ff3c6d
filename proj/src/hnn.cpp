#include <algorithm>
#include <functional>

#include "mtl/error.hpp"
#include "mtl/splittings.hpp"

namespace mtl {

namespace {

bool letters_in(const Word& w, std::span<const Letter> allowed) {
  for (Letter x : w.letters()) {
    const Letter g = x > 0 ? x : -x;
    if (std::find(allowed.begin(), allowed.end(), g) == allowed.end()) return false;
  }
  return true;
}

using ImageFn = std::function<SubgroupGraph(const SubgroupGraph&)>;

// Largest subgroup of `a` found by repeatedly intersecting with its forward
// and backward images; trivial if that does not settle within a few rounds.
SubgroupGraph stabilize(SubgroupGraph a, const ImageFn& forward,
                        const ImageFn& backward) {
  for (int round = 0; round < 8; ++round) {
    const SubgroupGraph img = forward(a);
    if (img == a) return a;
    a = intersect(intersect(a, img), backward(a));
  }
  return forward(a) == a ? a : SubgroupGraph::trivial(a.alphabet());
}

SubgroupGraph fold_words(std::size_t alphabet, const std::vector<Word>& words) {
  return SubgroupGraph::fold(alphabet, words);
}

}  // namespace

bool HnnContext::in_factor(const Word& w) const { return letters_in(w, factor); }

Word k_prime(const HnnContext& ctx, const Word& k) {
  if (!ctx.in_factor(k)) throw DomainError("k is not in the factor");
  return k.inverse() * ctx.h.inverse() * ctx.alpha.apply(k);
}

std::vector<Word> enumerate_K(const HnnContext& ctx, std::size_t radius) {
  std::vector<Word> out;
  for (Word& k : enumerate_words(ctx.factor, 0, radius)) {
    if (ctx.a0.contains(k_prime(ctx, k))) out.push_back(std::move(k));
  }
  return out;
}

KResult solve_K(const HnnContext& ctx, std::size_t radius) {
  KResult r;
  r.radius = radius;
  const auto all = enumerate_K(ctx, radius);
  if (all.empty()) return r;
  r.status = KStatus::found;
  r.k0 = all.front();
  const Word k0i = r.k0.inverse();
  for (const Word& k : all) {
    if (!ctx.a0.contains(k0i * k)) {
      throw InconsistencyError("solutions of the K equation span several cosets of A0");
    }
  }
  return r;
}

SubgroupGraph compute_B0(const HnnContext& ctx) {
  const std::size_t n = ctx.basis.rank();
  if (ctx.k.status == KStatus::found) {
    std::vector<Word> gens;
    for (const Word& a : ctx.a0.basis()) {
      gens.push_back(ctx.k.k0 * a * ctx.k.k0.inverse());
    }
    return fold_words(n, gens);
  }
  const Word s = Word::letter(ctx.stable);
  std::vector<Word> keep;
  for (const Word& b : enumerate_words(ctx.factor, 1, ctx.bounds.radius)) {
    const auto r = classify_element(ctx.alpha, s * b * s.inverse(), Metric::word(),
                                    ctx.bounds.horizon);
    if (r.non_exponential()) keep.push_back(b);
  }
  // B0 is invariant under x -> h^-1 alpha(x) h.
  const Automorphism inv = invert(ctx.alpha);
  const Word& h = ctx.h;
  const ImageFn forward = [&](const SubgroupGraph& g) {
    return image_subgroup(ctx.alpha, g).conjugate(h);
  };
  const ImageFn backward = [&](const SubgroupGraph& g) {
    return image_subgroup(inv, g.conjugate(h.inverse()));
  };
  SubgroupGraph b0 = stabilize(fold_words(n, keep), forward, backward);
  if (image_subgroup(ctx.alpha, b0) != b0.conjugate(h.inverse())) {
    throw InconsistencyError("B0 fails alpha(B0) = h B0 h^-1");
  }
  return b0;
}

HnnContext build_hnn_context(const FreeBasis& basis, std::vector<Letter> factor,
                             Letter stable, const Automorphism& alpha,
                             std::optional<SubgroupGraph> a0,
                             const Bounds& bounds) {
  if (std::find(factor.begin(), factor.end(), stable) != factor.end()) {
    throw DomainError("stable letter belongs to the factor");
  }
  const std::size_t n = basis.rank();
  const auto h_graph = SubgroupGraph::free_factor(n, factor);
  if (image_subgroup(alpha, h_graph) != h_graph) {
    throw NormalizationError("automorphism does not preserve the factor");
  }
  const Word img = alpha.apply(Word::letter(stable));
  if (img.empty() || img.front() != stable ||
      !letters_in(img.subword(1, img.size() - 1), factor)) {
    throw NormalizationError(std::string("image of ") + basis.name(stable) +
                             " is not " + basis.name(stable) +
                             " followed by a factor element");
  }

  HnnContext ctx{basis, std::move(factor), stable, alpha,
                 img.subword(1, img.size() - 1).inverse(),
                 {}, false, 0, {}, {}, 0, bounds};

  const Automorphism inv = invert(alpha);
  const ImageFn forward = [&](const SubgroupGraph& g) {
    return image_subgroup(alpha, g);
  };
  const ImageFn backward = [&](const SubgroupGraph& g) {
    return image_subgroup(inv, g);
  };
  if (a0) {
    if (a0->alphabet() != n) throw DomainError("A0 over a different alphabet");
    for (const Word& x : a0->basis()) {
      if (!ctx.in_factor(x)) throw DomainError("A0 is not inside the factor");
    }
    if (forward(*a0) != *a0) throw InvarianceError("supplied A0 is not invariant");
    if (!subgroup_growth(alpha, *a0, bounds.horizon).non_exponential()) {
      throw DomainError("supplied A0 does not grow polynomially");
    }
    ctx.a0 = std::move(*a0);
    ctx.a0_supplied = true;
  } else {
    std::vector<Word> keep;
    for (const Word& x : enumerate_words(ctx.factor, 1, bounds.radius)) {
      if (classify_element(alpha, x, Metric::word(), bounds.horizon).non_exponential()) {
        keep.push_back(x);
      }
    }
    ctx.a0 = stabilize(fold_words(n, keep), forward, backward);
    if (!ctx.a0.is_trivial() &&
        !subgroup_growth(alpha, ctx.a0, bounds.horizon).non_exponential()) {
      ctx.a0 = SubgroupGraph::trivial(n);
    }
    ctx.a0_radius = bounds.radius;
  }
  ctx.k = solve_K(ctx, bounds.radius);
  ctx.b0 = compute_B0(ctx);
  ctx.b0_radius = ctx.k.status == KStatus::found ? 0 : bounds.radius;
  return ctx;
}

Word syllable_word(const HnnContext& ctx, const Syllable& syl) {
  const Word s = Word::letter(ctx.stable);
  switch (syl.kind) {
    case 1:
      return s * syl.content * s.inverse();
    case 2:
      return s * syl.content;
    case 3:
      return syl.content * s.inverse();
    default:
      return syl.content;
  }
}

SyllableParse syllable_decompose(const HnnContext& ctx, const Word& g) {
  SyllableParse p;
  const Letter s = ctx.stable;
  auto red = cyclic_reduce(g);
  Word core = red.cyclic.core();
  const Word& conj = red.conjugator;  // g = conj core conj^-1
  const auto letters = core.letters();
  const auto stable_count = static_cast<std::size_t>(std::count_if(
      letters.begin(), letters.end(), [&](Letter x) { return x == s || x == -s; }));
  if (stable_count == 0) {
    p.route = Route::in_factor;
    p.normalized = core;
    p.conjugator = conj;
    return p;
  }
  if (stable_count == core.size()) {
    p.route = Route::stable_power;
    p.stable_power = core.front() == s ? static_cast<long>(core.size())
                                       : -static_cast<long>(core.size());
    p.normalized = core;
    p.conjugator = conj;
    return p;
  }
  if (std::find(letters.begin(), letters.end(), s) == letters.end()) {
    // Only s^-1 occurs: work with the inverse, whose core is core^-1.
    p.inverted = true;
    core = core.inverse();
  }
  // Rotate to the start of a block of s letters.
  const std::size_t len = core.size();
  std::size_t start = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (core[i] == s && core[(i + len - 1) % len] != s) {
      start = i;
      break;
    }
  }
  const Word head = core.subword(0, start);
  p.normalized = core.subword(start, len - start) * head;
  // normalized = head^-1 core head, and core = conj^-1 g' conj.
  p.conjugator = conj * head;

  const auto nl = p.normalized.letters();
  std::size_t i = 0;
  bool expect_s = true;  // true: types 1/2 next, false: types 3/4 next
  auto read_segment = [&]() {
    const std::size_t from = i;
    while (i < nl.size() && nl[i] != s && nl[i] != -s) ++i;
    return p.normalized.subword(from, i - from);
  };
  while (i < nl.size()) {
    if (expect_s) {
      ++i;  // s
      Word a = read_segment();
      if (i < nl.size() && nl[i] == -s) {
        ++i;
        p.syllables.push_back({1, std::move(a)});
        expect_s = false;
      } else {
        p.syllables.push_back({2, std::move(a)});
      }
    } else {
      Word a = read_segment();
      if (i < nl.size() && nl[i] == -s) {
        ++i;
        p.syllables.push_back({3, std::move(a)});
      } else if (!a.empty()) {
        p.syllables.push_back({4, std::move(a)});
        expect_s = true;
      }
    }
  }
  return p;
}

bool is_admissible(const HnnContext& ctx, const Syllable& syl) {
  const bool found = ctx.k.status == KStatus::found;
  switch (syl.kind) {
    case 1:
      return ctx.b0.contains(syl.content);
    case 2:
      return found && ctx.a0.contains(ctx.k.k0.inverse() * syl.content);
    case 3:
      return found && ctx.a0.contains(syl.content * ctx.k.k0);
    case 4:
      return ctx.a0.contains(syl.content);
    default:
      throw DomainError("syllable kind outside 1..4");
  }
}

ElementVerdict is_polynomial_element(const HnnContext& ctx, const Word& g,
                                     const std::vector<SubgroupGraph>* h_structure) {
  ElementVerdict v;
  const SyllableParse p = syllable_decompose(ctx, g);
  v.route = p.route;
  switch (p.route) {
    case Route::in_factor: {
      if (p.normalized.empty()) {
        v.polynomial = true;
        v.reason = "identity";
      } else if (h_structure) {
        for (const SubgroupGraph& e : *h_structure) {
          if (conjugate_into(e, g)) {
            v.polynomial = true;
            break;
          }
        }
        v.reason = v.polynomial ? "conjugate into a factor entry"
                                : "not conjugate into any factor entry";
      } else {
        v.polynomial = conjugate_into(ctx.a0, g).has_value();
        v.reason = v.polynomial ? "conjugate into A0" : "not conjugate into A0";
      }
      return v;
    }
    case Route::stable_power:
      v.polynomial = ctx.a0.contains(ctx.h);
      v.reason = v.polynomial ? "power of the stable letter, h in A0"
                              : "power of the stable letter, h not in A0";
      return v;
    case Route::syllables:
      break;
  }
  for (std::size_t i = 0; i < p.syllables.size(); ++i) {
    if (!is_admissible(ctx, p.syllables[i])) {
      v.failing = i;
      v.reason = "syllable " + std::to_string(i) + " of type " +
                 std::to_string(p.syllables[i].kind) + " is not admissible";
      return v;
    }
  }
  v.polynomial = true;
  v.reason = "all syllables admissible";
  return v;
}

PeripheralStructure hnn_peripheral_structure(const HnnContext& ctx,
                                             const PeripheralStructure& h_structure) {
  PeripheralStructure out;
  for (std::size_t i = 0; i < h_structure.entries.size(); ++i) {
    const SubgroupGraph& e = h_structure.entries[i];
    if (subgroups_conjugate(e, ctx.a0)) continue;
    out.add(e, h_structure.provenance[i]);
  }
  std::vector<Word> gens = ctx.a0.basis();
  const Word s = Word::letter(ctx.stable);
  std::string why;
  if (ctx.k.status == KStatus::found) {
    gens.push_back(s * ctx.k.k0);
    why = "A0 with s k0";
  } else {
    for (const Word& b : ctx.b0.basis()) gens.push_back(s * b * s.inverse());
    why = "A0 with s B0 s^-1";
  }
  auto entry = SubgroupGraph::fold(ctx.basis.rank(), gens);
  if (!entry.is_trivial()) out.add(std::move(entry), std::move(why));
  return out;
}

}  // namespace mtl
