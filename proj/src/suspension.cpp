#include "mtl/suspension.hpp"

#include "mtl/error.hpp"

namespace mtl {

namespace {

// alpha^n for signed n.
Word power(const TorusPresentation& p, const Word& w, long n) {
  if (n >= 0) return p.alpha.apply_power(w, static_cast<std::size_t>(n));
  return p.alpha_inverse.apply_power(w, static_cast<std::size_t>(-n));
}

std::string letter_set(const FreeBasis& basis, const std::vector<Letter>& letters) {
  std::string out = "{";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ",";
    out += basis.name(letters[i]);
  }
  return out + "}";
}

}  // namespace

FreeBasis TorusPresentation::extended() const {
  std::string names(base.names().begin(), base.names().end());
  names += stable;
  return FreeBasis::from_string(names);
}

std::vector<std::string> TorusPresentation::relators() const {
  std::vector<std::string> out;
  const std::string t(1, stable);
  for (Letter x = 1; static_cast<std::size_t>(x) <= base.rank(); ++x) {
    out.push_back(t + base.name(x) + t + "^-1 = " + base.format(alpha.image(x)));
  }
  return out;
}

TorusPresentation torus_presentation(const FreeBasis& base, const Automorphism& alpha) {
  char stable = 't';
  while (base.contains(stable)) {
    if (++stable > 'z') stable = 'a';
    if (stable == 't') throw ConfigurationError("no free letter for the stable generator");
  }
  return TorusPresentation{base, stable, alpha, invert(alpha)};
}

TorusElement normal_form(const TorusPresentation& p, const Word& w) {
  const Letter t = p.stable_letter();
  TorusElement x;
  WordBuilder tail;
  for (Letter l : w.letters()) {
    if (l == t || l == -t) {
      // tail t = t alpha^-1(tail), tail t^-1 = t^-1 alpha(tail).
      Word cur = std::move(tail).build();
      tail = WordBuilder(power(p, cur, l == t ? -1 : 1));
      x.m += l == t ? 1 : -1;
    } else {
      if ((l > 0 ? l : -l) > t) throw DomainError("letter outside the mapping torus");
      tail.push(l);
    }
  }
  x.tail = std::move(tail).build();
  return x;
}

TorusElement multiply(const TorusPresentation& p, const TorusElement& x,
                      const TorusElement& y) {
  // (t^m u)(t^k v) = t^(m+k) alpha^-k(u) v
  return {x.m + y.m, power(p, x.tail, -y.m) * y.tail};
}

TorusElement inverse(const TorusPresentation& p, const TorusElement& x) {
  return {-x.m, power(p, x.tail.inverse(), x.m)};
}

Word to_word(const TorusPresentation& p, const TorusElement& x) {
  std::vector<Letter> ls;
  const Letter t = x.m >= 0 ? p.stable_letter() : -p.stable_letter();
  for (long i = 0; i < (x.m >= 0 ? x.m : -x.m); ++i) ls.push_back(t);
  ls.insert(ls.end(), x.tail.letters().begin(), x.tail.letters().end());
  return Word::reduce(ls);
}

std::string format(const TorusPresentation& p, const TorusElement& x) {
  return p.extended().format(to_word(p, x));
}

bool relators_hold(const TorusPresentation& p) {
  const Letter t = p.stable_letter();
  for (Letter x = 1; x < t; ++x) {
    const Word rel = Word::reduce({t, x, -t}) * p.alpha.image(x).inverse();
    if (!(normal_form(p, rel) == TorusElement{})) return false;
  }
  return true;
}

bool normalizes(const TorusPresentation& p, const TorusElement& u, const SubgroupGraph& q) {
  const TorusElement ui = inverse(p, u);
  for (const Word& g : q.basis()) {
    const TorusElement e{0, g};
    for (const auto& [l, r] : {std::pair{u, ui}, std::pair{ui, u}}) {
      const TorusElement c = multiply(p, multiply(p, l, e), r);
      if (c.m != 0 || !q.contains(c.tail)) return false;
    }
  }
  return true;
}

SuspensionData suspend_subgroup(const TorusPresentation& p, const SubgroupGraph& q,
                                std::size_t max_exp) {
  SuspensionData d;
  d.subgroup = q;
  SubgroupGraph image = q;
  std::string scan;
  for (std::size_t k = 1; k <= max_exp; ++k) {
    image = image_subgroup(p.alpha, image);
    auto g = subgroups_conjugate(q, image);
    if (!g) {
      scan += (scan.empty() ? "" : ", ") + std::to_string(k);
      continue;
    }
    const long kl = static_cast<long>(k);
    d.exponent = k;
    d.conjugator = *g;
    d.stable = {kl, power(p, *g, -kl)};
    d.verified = normalizes(p, d.stable, q);
    d.literal = {kl, g->inverse()};
    d.literal_verified = normalizes(p, d.literal, q);
    if (!d.verified) {
      throw InconsistencyError("stable element " + format(p, d.stable) +
                               " does not normalize the subgroup");
    }
    if (!d.literal_verified) {
      d.discrepancy = "t^k g^-1 = " + format(p, d.literal) +
                      " does not normalize the subgroup; using g t^k = " +
                      format(p, d.stable);
    }
    return d;
  }
  throw BoundedFailure("no power alpha^k, k <= " + std::to_string(max_exp) +
                       ", maps the subgroup to a conjugate (tried k = " + scan + ")");
}

RelHypStructure relhyp_structure(const TorusPresentation& p,
                                 const DecompositionResult& decomposition,
                                 const Bounds& bounds) {
  RelHypStructure r;
  r.bounds = bounds;
  r.case_label = decomposition.root_case;
  const auto& entries = decomposition.structure.entries;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    r.entries.push_back(suspend_subgroup(p, entries[i], bounds.max_exp));
    r.provenance.push_back(decomposition.structure.provenance[i]);
  }
  r.degenerate = entries.size() == 1 && entries.front().is_whole_group();

  const FreeBasis ext = p.extended();
  const Letter t = p.stable_letter();
  const std::string ts(1, p.stable);
  for (const NodeReport& node : decomposition.nodes) {
    if (node.kind == NodeReport::Kind::hnn) {
      const HnnContext& ctx = *node.hnn;
      const Word lhs = Word::reduce({-ctx.stable, t, ctx.stable});
      const Word rhs = ctx.h.inverse() * Word::letter(t);
      r.identities.push_back("hnn over " + letter_set(p.base, ctx.factor) + ", stable " +
                             p.base.name(ctx.stable) + ": " + ext.format(lhs) +
                             " = " + ext.format(rhs) + " (" + node.case_label + ")");
    } else if (node.kind == NodeReport::Kind::product) {
      const auto& left = decomposition.nodes[node.children[0]].letters;
      const auto& right = decomposition.nodes[node.children[1]].letters;
      r.identities.push_back("product " + letter_set(p.base, left) + " * " +
                             letter_set(p.base, right) + ": (F" + letter_set(p.base, left) +
                             " x| <" + ts + ">) *_<" + ts + "> (F" +
                             letter_set(p.base, right) + " x| <" + ts + ">) (" +
                             node.case_label + ")");
    }
  }
  if (r.degenerate) {
    r.identities.push_back("the structure is the whole group, so its suspension is the whole mapping torus");
  }
  return r;
}

}  // namespace mtl
