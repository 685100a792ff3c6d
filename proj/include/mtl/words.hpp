#pragma once

// Reduced words in a free group, cyclic reduction and the length functions
// used by the growth machinery.
//
// Letters are signed generator numbers: +i is the i-th basis element
// (1-based), -i its inverse.  Words are basis-agnostic; a FreeBasis only
// matters for text I/O, so the same Word type also serves for words in
// abstract generating sets (expressions over subgroup generators).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mtl {

using Letter = std::int32_t;

/// Total order on letters: a < A < b < B < ...
constexpr int letter_rank(Letter x) noexcept {
  return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
}

class Word {
 public:
  Word() = default;

  /// Freely reduces an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> letters);
  static Word reduce(std::initializer_list<Letter> letters) {
    return reduce(std::span<const Letter>(letters.begin(), letters.size()));
  }
  /// The word consisting of the single letter `x` (x != 0).
  static Word letter(Letter x);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;
  /// Largest absolute letter value (0 for the identity).
  Letter max_generator() const noexcept;
  /// Subword [pos, pos+len); the result is reduced because the input is.
  Word subword(std::size_t pos, std::size_t len) const;

  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v);

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex order, using letter_rank on letters.
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}

  std::vector<Letter> letters_;

  friend class WordBuilder;
};

/// Incremental free reduction: letters are pushed one at a time and cancel
/// against the current tail.  Used by substitution kernels.
class WordBuilder {
 public:
  WordBuilder() = default;
  explicit WordBuilder(Word start) : letters_(std::move(start.letters_)) {}

  void reserve(std::size_t n) { letters_.reserve(n); }
  void push(Letter x) {
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
  void append(const Word& w) {
    for (Letter x : w.letters()) push(x);
  }
  void append_inverse(const Word& w) {
    auto ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(-*it);
  }
  std::size_t size() const noexcept { return letters_.size(); }
  Word build() && { return Word(std::move(letters_)); }

 private:
  std::vector<Letter> letters_;
};

/// Ordered list of distinct lowercase single-character generator names.
class FreeBasis {
 public:
  FreeBasis() = default;
  /// Throws DomainError on an empty list, a non-lowercase name or a repeat.
  explicit FreeBasis(std::vector<char> names);
  /// Convenience: FreeBasis("abs") has generators a, b, s.
  static FreeBasis from_string(std::string_view names);

  std::size_t rank() const noexcept { return names_.size(); }
  const std::vector<char>& names() const noexcept { return names_; }
  char name(Letter generator) const { return names_.at(generator - 1); }
  /// 1-based generator number of `name`, or nullopt.
  std::optional<Letter> index_of(char name) const;
  bool contains(char name) const { return index_of(name).has_value(); }

  /// Parses the external syntax: lowercase x is x, uppercase X is x^-1.
  /// Throws AlphabetError on letters outside the basis.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

  friend bool operator==(const FreeBasis&, const FreeBasis&) = default;

 private:
  std::vector<char> names_;
};

/// A cyclically reduced word together with the index of its canonical
/// (lexicographically least) rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  /// `core` must be cyclically reduced.
  explicit CyclicWord(Word core);

  const Word& core() const noexcept { return core_; }
  std::size_t rotation() const noexcept { return rotation_; }
  /// The least rotation; equal for two words iff they are conjugate.
  Word canonical() const;
  std::size_t size() const noexcept { return core_.size(); }

 private:
  Word core_;
  std::size_t rotation_ = 0;
};

struct CyclicReduction {
  CyclicWord cyclic;
  /// conjugator * core * conjugator^-1 == input.
  Word conjugator;
};

CyclicReduction cyclic_reduce(const Word& w);
/// The cyclically reduced core alone (no canonical rotation).
Word cyclic_core(const Word& w);
/// Canonical representative of the conjugacy class of w.
Word conjugacy_class_key(const Word& w);
bool is_cyclically_reduced(const Word& w);
/// Some c with c^-1 u c == v, if u and v are conjugate.
std::optional<Word> find_conjugator(const Word& u, const Word& v);

/// Length functions.  A tree length is the number of stable letters in the
/// cyclic core, i.e. the translation length in the Bass-Serre tree of the
/// splitting whose vertex group is generated by the other letters.
class Metric {
 public:
  enum class Kind { word_length, conjugacy_length, tree_length };

  static Metric word() { return Metric(Kind::word_length, {}); }
  static Metric conjugacy() { return Metric(Kind::conjugacy_length, {}); }
  /// Throws ConfigurationError when `stable_letters` is empty.
  static Metric tree(std::vector<Letter> stable_letters);
  /// A tree metric whose splitting is not attached yet; length() on it
  /// throws ConfigurationError.
  static Metric unattached_tree() { return Metric(Kind::tree_length, {}); }

  Kind kind() const noexcept { return kind_; }
  const std::vector<Letter>& stable_letters() const noexcept {
    return stable_;
  }
  std::string_view name() const noexcept;

  friend bool operator==(const Metric&, const Metric&) = default;

 private:
  Metric(Kind kind, std::vector<Letter> stable)
      : kind_(kind), stable_(std::move(stable)) {}

  Kind kind_;
  std::vector<Letter> stable_;
};

std::size_t length(const Word& w, const Metric& m);

/// All reduced words over the given generators (and inverses) with
/// min_length <= |w| <= max_length, in shortlex order.
std::vector<Word> enumerate_words(std::span<const Letter> generators,
                                  std::size_t min_length,
                                  std::size_t max_length);

}  // namespace mtl

template <>
struct std::hash<mtl::Word> {
  std::size_t operator()(const mtl::Word& w) const noexcept;
};
