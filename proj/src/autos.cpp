#include "mtl/autos.hpp"

#include <mutex>
#include <unordered_map>

namespace mtl {

struct Automorphism::PowerCache {
  std::mutex mutex;
  // levels[k][i] = alpha^(2^k)(x_{i+1})
  std::vector<std::vector<Word>> levels;
};

std::optional<Word> substitute(std::span<const Word> images, const Word& g,
                               std::size_t cap) {
  WordBuilder b;
  for (Letter x : g.letters()) {
    const std::size_t i = static_cast<std::size_t>(x > 0 ? x : -x) - 1;
    if (i >= images.size()) throw DomainError("letter outside the basis");
    if (x > 0) {
      b.append(images[i]);
    } else {
      b.append_inverse(images[i]);
    }
    if (b.size() > cap) return std::nullopt;
  }
  return std::move(b).build();
}

Automorphism::Automorphism(FreeBasis basis, std::vector<Word> images)
    : basis_(std::move(basis)),
      images_(std::move(images)),
      cache_(std::make_shared<PowerCache>()) {
  cache_->levels.push_back(images_);
}

Automorphism Automorphism::validate(FreeBasis basis, std::vector<Word> images) {
  if (images.size() != basis.rank()) {
    throw DomainError("expected one image per generator");
  }
  for (const Word& w : images) {
    if (static_cast<std::size_t>(w.max_generator()) > basis.rank()) {
      throw DomainError("image uses a letter outside the basis");
    }
  }
  const auto graph = SubgroupGraph::fold(basis.rank(), images);
  if (!graph.is_whole_group()) {
    for (Letter x = 1; static_cast<std::size_t>(x) <= basis.rank(); ++x) {
      if (!graph.contains(Word::letter(x))) {
        throw NotSurjectiveError(
            basis.name(x), std::string("endomorphism is not surjective: ") +
                               basis.name(x) + " is not in the image");
      }
    }
  }
  return Automorphism(std::move(basis), std::move(images));
}

Automorphism Automorphism::identity(FreeBasis basis) {
  std::vector<Word> images;
  for (Letter x = 1; static_cast<std::size_t>(x) <= basis.rank(); ++x) {
    images.push_back(Word::letter(x));
  }
  return Automorphism(std::move(basis), std::move(images));
}

Word Automorphism::apply(const Word& g) const {
  return *substitute(images_, g, static_cast<std::size_t>(-1));
}

Word Automorphism::apply_power(const Word& g, std::size_t n) const {
  Word w = g;
  std::size_t k = 0;
  while (n != 0) {
    if (n & 1u) {
      std::vector<Word> level;
      {
        std::lock_guard lock(cache_->mutex);
        while (cache_->levels.size() <= k) {
          const auto& prev = cache_->levels.back();
          std::vector<Word> next;
          next.reserve(prev.size());
          for (const Word& img : prev) {
            next.push_back(*substitute(prev, img, static_cast<std::size_t>(-1)));
          }
          cache_->levels.push_back(std::move(next));
        }
        level = cache_->levels[k];
      }
      w = *substitute(level, w, static_cast<std::size_t>(-1));
    }
    n >>= 1u;
    ++k;
  }
  return w;
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  if (!(basis_ == other.basis_)) {
    throw DomainError("composition of automorphisms on different bases");
  }
  std::vector<Word> images;
  images.reserve(rank());
  for (const Word& w : other.images_) images.push_back(apply(w));
  return Automorphism(basis_, std::move(images));
}

Automorphism Automorphism::inverse() const { return invert(*this); }

Automorphism validate(const FreeBasis& basis, std::vector<Word> images) {
  return Automorphism::validate(basis, std::move(images));
}

Word apply_power(const Automorphism& alpha, const Word& g, std::size_t n) {
  return alpha.apply_power(g, n);
}

Automorphism invert(const Automorphism& alpha) {
  const auto graph = SubgroupGraph::fold(alpha.rank(), alpha.images());
  std::vector<Word> images;
  images.reserve(alpha.rank());
  for (Letter x = 1; static_cast<std::size_t>(x) <= alpha.rank(); ++x) {
    Membership m = graph.member(Word::letter(x));
    if (!m.member) throw InconsistencyError("validated map is not surjective");
    // Expression letter i stands for alpha(x_i), so read as a word in x_i it
    // is the preimage of x.
    images.push_back(std::move(m.expression));
  }
  Automorphism beta = Automorphism::validate(alpha.basis(), std::move(images));
  for (Letter x = 1; static_cast<std::size_t>(x) <= alpha.rank(); ++x) {
    const Word g = Word::letter(x);
    if (alpha.apply(beta.apply(g)) != g || beta.apply(alpha.apply(g)) != g) {
      throw InconsistencyError("inverse automorphism failed verification");
    }
  }
  return beta;
}

SubgroupGraph image_subgroup(const Automorphism& alpha, const SubgroupGraph& a) {
  std::vector<Word> gens;
  gens.reserve(a.basis().size());
  for (const Word& b : a.basis()) gens.push_back(alpha.apply(b));
  return SubgroupGraph::fold(a.alphabet(), gens);
}

std::optional<OrbitCertificate> orbit_period(const Automorphism& alpha,
                                             const Word& g, std::size_t bound,
                                             OrbitKind kind, std::size_t cap) {
  const bool exact = kind == OrbitKind::exact;
  // A repeat needs equal lengths, so keys are only computed on collisions.
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_length;
  std::unordered_map<std::size_t, Word> keys;
  std::vector<Word> iterates;
  auto key_of = [&](std::size_t i) -> const Word& {
    auto it = keys.find(i);
    if (it == keys.end()) {
      it = keys.emplace(i, exact ? iterates[i] : conjugacy_class_key(iterates[i])).first;
    }
    return it->second;
  };
  Word w = exact ? g : cyclic_core(g);
  for (std::size_t n = 0; n <= bound; ++n) {
    if (n > 0) {
      auto next = substitute(alpha.images(), w, cap);
      if (!next) return std::nullopt;
      w = exact ? std::move(*next) : cyclic_core(*next);
    }
    iterates.push_back(w);
    auto& same = by_length[w.size()];
    for (std::size_t earlier : same) {
      if (key_of(earlier) != key_of(n)) continue;
      OrbitCertificate cert;
      cert.start = earlier;
      cert.period = n - earlier;
      cert.exact = exact;
      cert.conjugator = exact ? Word() : *find_conjugator(iterates[earlier], w);
      return cert;
    }
    same.push_back(n);
  }
  return std::nullopt;
}

bool verify_certificate(const Automorphism& alpha, const Word& g,
                        const OrbitCertificate& cert) {
  if (cert.period == 0) return false;
  Word first = alpha.apply_power(g, cert.start);
  Word second = first;
  for (std::size_t i = 0; i < cert.period; ++i) second = alpha.apply(second);
  if (cert.exact) return first == second && cert.conjugator.empty();
  first = cyclic_reduce(first).cyclic.core();
  second = cyclic_reduce(second).cyclic.core();
  return conjugacy_class_key(first) == conjugacy_class_key(second) &&
         cert.conjugator.inverse() * first * cert.conjugator == second;
}

}  // namespace mtl
