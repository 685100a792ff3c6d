#include <algorithm>

#include "mtl/error.hpp"
#include "mtl/subgroups.hpp"

namespace mtl {

namespace {

Letter slot_letter(std::size_t l) {
  return l % 2 == 0 ? static_cast<Letter>(l / 2 + 1)
                    : -static_cast<Letter>(l / 2 + 1);
}

}  // namespace

std::vector<PullbackComponent> pullback(const SubgroupGraph& a,
                                        const SubgroupGraph& b) {
  if (a.alphabet() != b.alphabet()) {
    throw DomainError("pullback of graphs over different alphabets");
  }
  const std::size_t n2 = 2 * a.alphabet();
  const std::size_t va = a.vertex_count();
  const std::size_t vb = b.vertex_count();
  const std::size_t total = va * vb;
  auto pair_target = [&](std::size_t p, std::size_t l) -> std::int64_t {
    const Letter x = slot_letter(l);
    auto ta = a.target(p / vb, x);
    auto tb = b.target(p % vb, x);
    if (ta < 0 || tb < 0) return -1;
    return static_cast<std::int64_t>(ta) * static_cast<std::int64_t>(vb) + tb;
  };

  std::vector<std::int64_t> component(total, -1);
  std::vector<PullbackComponent> out;
  for (std::size_t start = 0; start < total; ++start) {
    if (component[start] >= 0) continue;
    // Breadth-first search from `start`, collecting a loop basis.
    std::vector<std::size_t> order{start};
    std::vector<Word> paths{Word()};
    const auto cid = static_cast<std::int64_t>(start);
    component[start] = cid;
    std::size_t edges = 0;
    std::vector<Word> loops;
    // First pass: discover vertices and tree words.
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t p = order[k];
      for (std::size_t l = 0; l < n2; ++l) {
        auto t = pair_target(p, l);
        if (t < 0) continue;
        auto tu = static_cast<std::size_t>(t);
        if (component[tu] < 0) {
          component[tu] = cid;
          order.push_back(tu);
          paths.push_back(paths[k] * Word::letter(slot_letter(l)));
        }
      }
    }
    // Second pass: non-tree positive edges give the loop basis.
    std::vector<std::size_t> sorted(order);
    std::vector<std::size_t> perm(order.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t x, std::size_t y) { return order[x] < order[y]; });
    std::sort(sorted.begin(), sorted.end());
    auto index_of = [&](std::size_t p) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
      return perm[static_cast<std::size_t>(it - sorted.begin())];
    };
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t p = order[k];
      for (std::size_t l = 0; l < n2; l += 2) {
        auto t = pair_target(p, l);
        if (t < 0) continue;
        ++edges;
        const std::size_t j = index_of(static_cast<std::size_t>(t));
        Word loop = paths[k] * Word::letter(slot_letter(l)) *
                    paths[j].inverse();
        // Tree edges produce the identity here.
        if (!loop.empty()) loops.push_back(std::move(loop));
      }
    }
    const std::size_t rank = edges + 1 - order.size();
    const bool based = start == 0;
    if (!based && rank == 0) continue;

    // Pick the vertex whose double coset representative is shortlex least.
    std::size_t best = 0;
    Word best_rep;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t p = order[k];
      Word rep = a.path_word(p / vb) * b.path_word(p % vb).inverse();
      if (k == 0 || rep < best_rep) {
        best = k;
        best_rep = std::move(rep);
      }
    }
    // Loops based at order[best]: conjugate the ones at `start` along the
    // tree path, then transport into A by the A-side path.
    const Word& to_best = paths[best];
    const Word ga = a.path_word(order[best] / vb);
    std::vector<Word> gens;
    gens.reserve(loops.size());
    for (const Word& loop : loops) {
      gens.push_back(ga * to_best.inverse() * loop * to_best * ga.inverse());
    }
    PullbackComponent comp;
    comp.intersection = SubgroupGraph::fold(a.alphabet(), gens);
    comp.representative = std::move(best_rep);
    comp.rank = rank;
    comp.based = based;
    if (based) {
      out.insert(out.begin(), std::move(comp));
    } else {
      out.push_back(std::move(comp));
    }
  }
  return out;
}

SubgroupGraph intersect(const SubgroupGraph& a, const SubgroupGraph& b) {
  return pullback(a, b).front().intersection;
}

namespace {

struct CyclicCore {
  std::vector<bool> in_core;
  std::size_t root = 0;
  Word hair;  // path word from the basepoint to root
};

CyclicCore cyclic_core(const SubgroupGraph& g) {
  const std::size_t n2 = 2 * g.alphabet();
  CyclicCore c;
  c.in_core.assign(g.vertex_count(), true);
  std::size_t v = 0;
  std::size_t deg = g.degree(0);
  while (deg == 1) {
    std::size_t l = 0;
    while (g.target(v, slot_letter(l)) < 0 || !c.in_core[static_cast<std::size_t>(
                                                  g.target(v, slot_letter(l)))]) {
      ++l;
    }
    const Letter x = slot_letter(l);
    c.in_core[v] = false;
    c.hair *= Word::letter(x);
    v = static_cast<std::size_t>(g.target(v, x));
    deg = 0;
    for (std::size_t k = 0; k < n2; ++k) {
      auto t = g.target(v, slot_letter(k));
      if (t >= 0 && c.in_core[static_cast<std::size_t>(t)]) ++deg;
    }
  }
  c.root = v;
  return c;
}

// Label-preserving bijection of cores sending ra to rb?
bool cores_match(const SubgroupGraph& a, const CyclicCore& ca,
                 const SubgroupGraph& b, const CyclicCore& cb, std::size_t rb) {
  const std::size_t n2 = 2 * a.alphabet();
  std::vector<std::int64_t> map_ab(a.vertex_count(), -1);
  std::vector<std::int64_t> map_ba(b.vertex_count(), -1);
  std::vector<std::size_t> queue{ca.root};
  map_ab[ca.root] = static_cast<std::int64_t>(rb);
  map_ba[rb] = static_cast<std::int64_t>(ca.root);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const std::size_t u = queue[k];
    const auto v = static_cast<std::size_t>(map_ab[u]);
    for (std::size_t l = 0; l < n2; ++l) {
      const Letter x = slot_letter(l);
      auto ta = a.target(u, x);
      auto tb = b.target(v, x);
      const bool ea = ta >= 0 && ca.in_core[static_cast<std::size_t>(ta)];
      const bool eb = tb >= 0 && cb.in_core[static_cast<std::size_t>(tb)];
      if (ea != eb) return false;
      if (!ea) continue;
      auto ua = static_cast<std::size_t>(ta);
      auto ub = static_cast<std::size_t>(tb);
      if (map_ab[ua] < 0 && map_ba[ub] < 0) {
        map_ab[ua] = static_cast<std::int64_t>(ub);
        map_ba[ub] = static_cast<std::int64_t>(ua);
        queue.push_back(ua);
      } else if (map_ab[ua] != static_cast<std::int64_t>(ub) ||
                 map_ba[ub] != static_cast<std::int64_t>(ua)) {
        return false;
      }
    }
  }
  return true;
}

bool conjugates_to(const SubgroupGraph& a, const SubgroupGraph& b,
                   const Word& g) {
  const Word gi = g.inverse();
  for (const Word& x : a.basis()) {
    if (!b.contains(gi * x * g)) return false;
  }
  for (const Word& y : b.basis()) {
    if (!a.contains(g * y * gi)) return false;
  }
  return true;
}

}  // namespace

std::optional<Word> subgroups_conjugate(const SubgroupGraph& a,
                                        const SubgroupGraph& b) {
  if (a.alphabet() != b.alphabet()) return std::nullopt;
  if (a.is_trivial() || b.is_trivial()) {
    if (a.is_trivial() && b.is_trivial()) return Word();
    return std::nullopt;
  }
  if (a.rank() != b.rank()) return std::nullopt;
  if (a == b) return Word();
  const CyclicCore ca = cyclic_core(a);
  const CyclicCore cb = cyclic_core(b);
  const auto count = [](const CyclicCore& c) {
    return std::count(c.in_core.begin(), c.in_core.end(), true);
  };
  if (count(ca) != count(cb)) return std::nullopt;
  for (std::size_t q = 0; q < b.vertex_count(); ++q) {
    if (!cb.in_core[q]) continue;
    if (!cores_match(a, ca, b, cb, q)) continue;
    Word g = ca.hair * b.path_word(q).inverse();
    if (!conjugates_to(a, b, g)) {
      throw InconsistencyError("core isomorphism produced a bad conjugator");
    }
    return g;
  }
  return std::nullopt;
}

std::optional<Word> conjugate_into(const SubgroupGraph& q, const Word& w) {
  if (w.empty()) return Word();
  if (q.is_trivial()) return std::nullopt;
  auto red = cyclic_reduce(w);
  const Word& core = red.cyclic.core();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    auto end = q.read(v, core);
    if (end && *end == v) {
      return q.path_word(v) * red.conjugator.inverse();
    }
  }
  return std::nullopt;
}

MalnormalityReport is_malnormal_family(std::span<const SubgroupGraph> family) {
  MalnormalityReport report;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].is_trivial()) continue;
    for (std::size_t j = i; j < family.size(); ++j) {
      if (family[j].is_trivial()) continue;
      for (const PullbackComponent& c : pullback(family[i], family[j])) {
        if (c.intersection.is_trivial()) continue;
        if (i == j && c.based) continue;
        report.malnormal = false;
        report.witness = MalnormalityWitness{
            i, j, c.representative, c.intersection.basis().front()};
        return report;
      }
    }
  }
  return report;
}

}  // namespace mtl
