#pragma once

// Automorphisms of free groups given by generator images.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "mtl/error.hpp"
#include "mtl/subgroups.hpp"
#include "mtl/words.hpp"

namespace mtl {

/// The images do not generate the whole group.
class NotSurjectiveError : public Error {
 public:
  NotSurjectiveError(char missing, const std::string& what)
      : Error(what), missing_(missing) {}
  /// A basis generator outside the image subgroup.
  char missing_generator() const noexcept { return missing_; }

 private:
  char missing_;
};

class Automorphism {
 public:
  /// Checks that the images generate the free group; by Hopficity this makes
  /// the endomorphism bijective.  Throws NotSurjectiveError with a missing
  /// generator, or DomainError on a malformed image list.
  static Automorphism validate(FreeBasis basis, std::vector<Word> images);
  static Automorphism identity(FreeBasis basis);

  const FreeBasis& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return images_.size(); }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(Letter generator) const { return images_.at(generator - 1); }

  Word apply(const Word& g) const;
  /// alpha^n(g), using cached images of generators under alpha^(2^k).
  Word apply_power(const Word& g, std::size_t n) const;

  /// (this o other)(x) = this(other(x)).
  Automorphism compose(const Automorphism& other) const;
  Automorphism inverse() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.basis_ == b.basis_ && a.images_ == b.images_;
  }

 private:
  Automorphism(FreeBasis basis, std::vector<Word> images);

  struct PowerCache;

  FreeBasis basis_;
  std::vector<Word> images_;
  // Shared between copies; holds alpha^(2^k)(x) and is safe for concurrent
  // use.  Results never depend on its state.
  std::shared_ptr<PowerCache> cache_;
};

/// Substitutes generator images into g with free reduction.  Stops early
/// and returns nullopt once the partial result exceeds `cap` letters.
std::optional<Word> substitute(std::span<const Word> images, const Word& g,
                               std::size_t cap);

Automorphism validate(const FreeBasis& basis, std::vector<Word> images);
Word apply_power(const Automorphism& alpha, const Word& g, std::size_t n);
/// Inverse built from membership witnesses in the graph folded from the
/// images; verified on generators in both orders.
Automorphism invert(const Automorphism& alpha);
/// The fold of the images of a basis of A.
SubgroupGraph image_subgroup(const Automorphism& alpha, const SubgroupGraph& a);

/// Certificate that the orbit of g is eventually periodic: the cyclic cores
/// of alpha^start(g) and alpha^(start+period)(g) have the same canonical
/// form, and conjugator^-1 * first core * conjugator == second core.
/// `exact` certificates have the two words letter-for-letter equal.
struct OrbitCertificate {
  std::size_t period = 1;
  std::size_t start = 0;
  Word conjugator;
  bool exact = false;
};

enum class OrbitKind { conjugacy, exact };

/// Searches alpha^0(g), ..., alpha^bound(g) for the first repeated conjugacy
/// class (or repeated word, for OrbitKind::exact).  Conjugacy mode iterates
/// cyclic cores.  Gives up when an iterate exceeds `cap` letters.
std::optional<OrbitCertificate> orbit_period(const Automorphism& alpha,
                                             const Word& g, std::size_t bound,
                                             OrbitKind kind = OrbitKind::conjugacy,
                                             std::size_t cap = 1u << 18);

/// Recomputes the iterates and checks the certificate.
bool verify_certificate(const Automorphism& alpha, const Word& g,
                        const OrbitCertificate& cert);

}  // namespace mtl
