#include <algorithm>
#include <deque>
#include <sstream>

#include "mtl/error.hpp"
#include "mtl/subgroups.hpp"

namespace mtl {

// Stallings folding with a weighted union-find.
//
// Every vertex v of the unfolded graph has a potential pi(v) in the free
// group (the word read from the basepoint along the petal that created it);
// every edge u -x-> v carries an expression `label` over the generators
// evaluating to pi(u) x pi(v)^-1.  When two classes merge, the offset of the
// absorbed root is recorded as an expression evaluating to
// pi(new root) pi(old root)^-1, so edge expressions never need rewriting.
class GraphFolder {
 public:
  explicit GraphFolder(std::size_t alphabet) : slots_(2 * alphabet) {
    new_vertex();
  }

  void add_generator(const Word& w, Letter generator_symbol) {
    if (w.empty()) return;
    std::size_t cur = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const bool last = i + 1 == w.size();
      const std::size_t next = last ? 0 : new_vertex();
      add_edge(cur, w[i], next,
               last ? Word::letter(generator_symbol) : Word());
      cur = next;
    }
  }

  void fold() {
    while (!pending_.empty()) {
      auto [o1, o2] = pending_.front();
      pending_.pop_front();
      merge(o1, o2);
    }
  }

  SubgroupGraph finish(std::vector<Word> generators) {
    const std::size_t n2 = slots_;
    const std::size_t nv = parent_.size();
    std::vector<std::size_t> degree(nv, 0);
    std::vector<bool> alive(nv, false);
    for (std::size_t v = 0; v < nv; ++v) {
      if (find(v) != v) continue;
      alive[v] = true;
      for (std::size_t l = 0; l < n2; ++l) {
        if (slot(v, l) >= 0) ++degree[v];
      }
    }
    const std::size_t base = find(0);

    // Prune to the core.
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < nv; ++v) {
      if (alive[v] && v != base && degree[v] <= 1) stack.push_back(v);
    }
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      if (!alive[v]) continue;
      alive[v] = false;
      for (std::size_t l = 0; l < n2; ++l) {
        int o = slot(v, l);
        if (o < 0) continue;
        std::size_t t = find(target_of(o));
        slot(v, l) = -1;
        std::size_t back = l ^ 1u;
        slot(t, back) = -1;
        --degree[t];
        if (t != base && alive[t] && degree[t] <= 1) stack.push_back(t);
      }
    }

    // Breadth-first renumbering.
    std::vector<std::int32_t> id(nv, -1);
    std::vector<std::size_t> order{base};
    id[base] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      std::size_t v = order[k];
      for (std::size_t l = 0; l < n2; ++l) {
        int o = slot(v, l);
        if (o < 0) continue;
        std::size_t t = find(target_of(o));
        if (id[t] < 0) {
          id[t] = static_cast<std::int32_t>(order.size());
          order.push_back(t);
        }
      }
    }

    const Word shift = potential(0);
    const Word shift_inv = shift.inverse();
    std::vector<std::int32_t> targets(order.size() * n2, -1);
    std::vector<Word> labels(order.size() * n2);
    for (std::size_t k = 0; k < order.size(); ++k) {
      std::size_t v = order[k];
      for (std::size_t l = 0; l < n2; l += 2) {  // positive letters
        int o = slot(v, l);
        if (o < 0) continue;
        std::size_t t = find(target_of(o));
        Word lab = shift_inv * rep_label(o) * shift;
        const std::size_t tk = static_cast<std::size_t>(id[t]);
        targets[k * n2 + l] = static_cast<std::int32_t>(tk);
        targets[tk * n2 + l + 1] = static_cast<std::int32_t>(k);
        labels[tk * n2 + l + 1] = lab.inverse();
        labels[k * n2 + l] = std::move(lab);
      }
    }
    return SubgroupGraph(n2 / 2, std::move(targets), std::move(labels),
                         std::move(generators));
  }

 private:
  struct Edge {
    std::size_t from;
    std::size_t to;
    Letter letter;  // positive
    Word label;
  };

  std::size_t new_vertex() {
    parent_.push_back(parent_.size());
    offset_.emplace_back();
    size_.push_back(1);
    slot_table_.insert(slot_table_.end(), slots_, -1);
    return parent_.size() - 1;
  }

  int& slot(std::size_t v, std::size_t l) { return slot_table_[v * slots_ + l]; }

  // Oriented edge o = 2 * edge + direction (0 forward, 1 backward).
  std::size_t source_of(int o) const {
    const Edge& e = edges_[o / 2];
    return o % 2 == 0 ? e.from : e.to;
  }
  std::size_t target_of(int o) const {
    const Edge& e = edges_[o / 2];
    return o % 2 == 0 ? e.to : e.from;
  }
  Word label_of(int o) const {
    const Edge& e = edges_[o / 2];
    return o % 2 == 0 ? e.label : e.label.inverse();
  }

  void add_edge(std::size_t u, Letter x, std::size_t v, Word label) {
    if (x < 0) {
      add_edge(v, -x, u, label.inverse());
      return;
    }
    edges_.push_back(Edge{u, v, x, std::move(label)});
    const int fwd = static_cast<int>(2 * (edges_.size() - 1));
    attach(find(u), static_cast<std::size_t>(letter_rank(x)), fwd);
    attach(find(v), static_cast<std::size_t>(letter_rank(-x)), fwd + 1);
  }

  void attach(std::size_t root, std::size_t l, int o) {
    int& s = slot(root, l);
    if (s < 0) {
      s = o;
    } else {
      pending_.emplace_back(s, o);
    }
  }

  std::size_t find(std::size_t v) {
    potential(v);
    return parent_[v];
  }

  // Expression evaluating to pi(root(v)) pi(v)^-1; compresses the path.
  Word potential(std::size_t v) {
    if (parent_[v] == v) return Word();
    std::size_t p = parent_[v];
    if (parent_[p] == p) return offset_[v];
    Word up = potential(p);
    offset_[v] = up * offset_[v];
    parent_[v] = parent_[p];
    return offset_[v];
  }

  // Expression for the edge between the current roots of its endpoints.
  Word rep_label(int o) {
    return potential(source_of(o)) * label_of(o) *
           potential(target_of(o)).inverse();
  }

  void merge(int o1, int o2) {
    std::size_t t1 = find(target_of(o1));
    std::size_t t2 = find(target_of(o2));
    if (t1 == t2) return;
    // pi(t1) pi(t2)^-1
    Word delta = rep_label(o1).inverse() * rep_label(o2);
    if (size_[t1] < size_[t2]) {
      std::swap(t1, t2);
      delta = delta.inverse();
    }
    parent_[t2] = t1;
    offset_[t2] = std::move(delta);
    size_[t1] += size_[t2];
    for (std::size_t l = 0; l < slots_; ++l) {
      int o = slot(t2, l);
      if (o < 0) continue;
      slot(t2, l) = -1;
      attach(t1, l, o);
    }
  }

  std::size_t slots_;
  std::vector<std::size_t> parent_;
  std::vector<Word> offset_;
  std::vector<std::size_t> size_;
  std::vector<int> slot_table_;
  std::vector<Edge> edges_;
  std::deque<std::pair<int, int>> pending_;
};

SubgroupGraph::SubgroupGraph(std::size_t alphabet,
                             std::vector<std::int32_t> targets,
                             std::vector<Word> labels,
                             std::vector<Word> generators)
    : alphabet_(alphabet),
      targets_(std::move(targets)),
      labels_(std::move(labels)),
      generators_(std::move(generators)) {
  const std::size_t n2 = 2 * alphabet_;
  const std::size_t nv = vertex_count();
  if (alphabet_ == 0) {
    tree_words_.assign(1, Word());
    return;
  }
  std::size_t filled = 0;
  for (auto t : targets_) filled += t >= 0 ? 1 : 0;
  edges_ = filled / 2;

  // Vertex numbering is already breadth-first in slot order, so the first
  // edge reaching each vertex in that order is its tree edge.
  tree_words_.assign(nv, Word());
  std::vector<bool> seen(nv, false);
  std::vector<std::vector<bool>> tree_edge(nv, std::vector<bool>(n2, false));
  seen[0] = true;
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t l = 0; l < n2; ++l) {
      auto t = targets_[v * n2 + l];
      if (t < 0 || seen[t]) continue;
      seen[t] = true;
      const Letter x = l % 2 == 0 ? static_cast<Letter>(l / 2 + 1)
                                  : -static_cast<Letter>(l / 2 + 1);
      tree_words_[t] = tree_words_[v] * Word::letter(x);
      tree_edge[v][l] = true;
      tree_edge[t][l ^ 1u] = true;
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t l = 0; l < n2; l += 2) {
      auto t = targets_[v * n2 + l];
      if (t < 0 || tree_edge[v][l]) continue;
      const Letter x = static_cast<Letter>(l / 2 + 1);
      basis_.push_back(tree_words_[v] * Word::letter(x) *
                       tree_words_[t].inverse());
    }
  }
}

SubgroupGraph SubgroupGraph::fold(std::size_t alphabet,
                                  std::span<const Word> generators) {
  for (const Word& g : generators) {
    if (static_cast<std::size_t>(g.max_generator()) > alphabet) {
      throw DomainError("generator uses a letter outside the alphabet");
    }
  }
  if (alphabet == 0) return trivial(0);
  GraphFolder folder(alphabet);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    folder.add_generator(generators[i], static_cast<Letter>(i + 1));
  }
  folder.fold();
  return folder.finish(
      std::vector<Word>(generators.begin(), generators.end()));
}

SubgroupGraph SubgroupGraph::trivial(std::size_t alphabet) {
  return SubgroupGraph(alphabet,
                       std::vector<std::int32_t>(2 * alphabet, -1), {}, {});
}

SubgroupGraph SubgroupGraph::free_factor(std::size_t alphabet,
                                         std::span<const Letter> letters) {
  std::vector<Word> gens;
  for (Letter x : letters) gens.push_back(Word::letter(x));
  return fold(alphabet, gens);
}

bool SubgroupGraph::is_whole_group() const noexcept {
  if (vertex_count() != 1) return false;
  return std::all_of(targets_.begin(), targets_.end(),
                     [](std::int32_t t) { return t == 0; });
}

std::size_t SubgroupGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t l = 0; l < 2 * alphabet_; ++l) {
    d += targets_[v * 2 * alphabet_ + l] >= 0 ? 1 : 0;
  }
  return d;
}

std::optional<std::size_t> SubgroupGraph::read(std::size_t start,
                                               const Word& w) const {
  std::size_t v = start;
  for (Letter x : w.letters()) {
    if (static_cast<std::size_t>(x > 0 ? x : -x) > alphabet_) {
      return std::nullopt;
    }
    auto t = target(v, x);
    if (t < 0) return std::nullopt;
    v = static_cast<std::size_t>(t);
  }
  return v;
}

bool SubgroupGraph::contains(const Word& w) const {
  auto end = read(0, w);
  return end && *end == 0;
}

Membership SubgroupGraph::member(const Word& w) const {
  Membership m;
  std::size_t v = 0;
  WordBuilder expr;
  for (Letter x : w.letters()) {
    if (static_cast<std::size_t>(x > 0 ? x : -x) > alphabet_) return m;
    const std::size_t idx = v * 2 * alphabet_ + letter_rank(x);
    auto t = targets_[idx];
    if (t < 0) return m;
    expr.append(labels_[idx]);
    v = static_cast<std::size_t>(t);
  }
  if (v != 0) return m;
  m.member = true;
  m.expression = std::move(expr).build();
  return m;
}

Word SubgroupGraph::evaluate(const Word& expression) const {
  WordBuilder b;
  for (Letter y : expression.letters()) {
    const std::size_t i = static_cast<std::size_t>(y > 0 ? y : -y) - 1;
    if (i >= generators_.size()) {
      throw DomainError("expression refers to an unknown generator");
    }
    if (y > 0) {
      b.append(generators_[i]);
    } else {
      b.append_inverse(generators_[i]);
    }
  }
  return std::move(b).build();
}

SubgroupGraph SubgroupGraph::conjugate(const Word& g) const {
  std::vector<Word> gens;
  gens.reserve(basis_.size());
  const Word gi = g.inverse();
  for (const Word& b : basis_) gens.push_back(gi * b * g);
  return fold(alphabet_, gens);
}

std::string SubgroupGraph::to_dot(const FreeBasis& basis) const {
  std::ostringstream out;
  out << "digraph subgroup {\n";
  const std::size_t nv = vertex_count();
  for (std::size_t v = 0; v < nv; ++v) out << "  " << v << ";\n";
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t g = 1; g <= alphabet_; ++g) {
      auto t = target(v, static_cast<Letter>(g));
      if (t < 0) continue;
      out << "  " << v << " -> " << t << " [label=\""
          << basis.name(static_cast<Letter>(g)) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace mtl
