#include "mtl/words.hpp"

#include <algorithm>
#include <cctype>

#include "mtl/error.hpp"

namespace mtl {

Word Word::reduce(std::span<const Letter> letters) {
  WordBuilder b;
  b.reserve(letters.size());
  for (Letter x : letters) {
    if (x == 0) throw DomainError("letter 0 is not a generator");
    b.push(x);
  }
  return std::move(b).build();
}

Word Word::letter(Letter x) {
  if (x == 0) throw DomainError("letter 0 is not a generator");
  return Word(std::vector<Letter>{x});
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& x : out) x = -x;
  return Word(std::move(out));
}

Letter Word::max_generator() const noexcept {
  Letter m = 0;
  for (Letter x : letters_) m = std::max(m, x > 0 ? x : -x);
  return m;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

Word operator*(const Word& u, const Word& v) {
  Word out = u;
  out *= v;
  return out;
}

Word& Word::operator*=(const Word& v) {
  auto vs = v.letters();
  std::size_t k = 0;
  while (k < vs.size() && !letters_.empty() && letters_.back() == -vs[k]) {
    letters_.pop_back();
    ++k;
  }
  letters_.insert(letters_.end(), vs.begin() + k, vs.end());
  return *this;
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (auto c = letter_rank(u[i]) <=> letter_rank(v[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

FreeBasis::FreeBasis(std::vector<char> names) : names_(std::move(names)) {
  if (names_.empty()) throw DomainError("free basis must be nonempty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    char c = names_[i];
    if (c < 'a' || c > 'z') {
      throw DomainError(std::string("generator name '") + c +
                        "' is not a lowercase ASCII letter");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[j] == c) {
        throw DomainError(std::string("duplicate generator '") + c + "'");
      }
    }
  }
}

FreeBasis FreeBasis::from_string(std::string_view names) {
  return FreeBasis(std::vector<char>(names.begin(), names.end()));
}

std::optional<Letter> FreeBasis::index_of(char name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Letter>(it - names_.begin()) + 1;
}

Word FreeBasis::parse(std::string_view text) const {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool upper = c >= 'A' && c <= 'Z';
    char lower = upper ? static_cast<char>(c - 'A' + 'a') : c;
    auto idx = (upper || (c >= 'a' && c <= 'z')) ? index_of(lower)
                                                  : std::nullopt;
    if (!idx) throw AlphabetError(c, i);
    raw.push_back(upper ? -*idx : *idx);
  }
  return Word::reduce(raw);
}

std::string FreeBasis::format(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (Letter x : w.letters()) {
    if (x > 0) {
      out.push_back(name(x));
    } else {
      out.push_back(static_cast<char>(name(-x) - 'a' + 'A'));
    }
  }
  return out;
}

namespace {

// Booth's least-rotation algorithm under letter_rank.
std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return letter_rank(s[i % n]); };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    int sj = at(j);
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = fail[i];
    }
    if (sj != at(k + i + 1)) {  // i == -1
      if (sj < at(k)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

}  // namespace

CyclicWord::CyclicWord(Word core) : core_(std::move(core)) {
  if (!is_cyclically_reduced(core_)) {
    throw DomainError("CyclicWord core must be cyclically reduced");
  }
  rotation_ = least_rotation(core_.letters());
}

Word CyclicWord::canonical() const {
  const auto ls = core_.letters();
  std::vector<Letter> out;
  out.reserve(ls.size());
  out.insert(out.end(), ls.begin() + rotation_, ls.end());
  out.insert(out.end(), ls.begin(), ls.begin() + rotation_);
  return Word::reduce(out);
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.front() != -w.back();
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t i = 0;
  std::size_t j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return {CyclicWord(w.subword(i, j - i)), w.subword(0, i)};
}

Word cyclic_core(const Word& w) {
  std::size_t i = 0;
  std::size_t j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return i == 0 ? w : w.subword(i, j - i);
}

Word conjugacy_class_key(const Word& w) {
  return cyclic_reduce(w).cyclic.canonical();
}

std::optional<Word> find_conjugator(const Word& u, const Word& v) {
  auto cu = cyclic_reduce(u);
  auto cv = cyclic_reduce(v);
  if (cu.cyclic.size() != cv.cyclic.size()) return std::nullopt;
  const std::size_t n = cu.cyclic.size();
  if (n == 0) return cu.conjugator * cv.conjugator.inverse();
  // U = xy rotated by r is V = yx = x^-1 U x.
  const std::size_t ru = cu.cyclic.rotation();
  const std::size_t rv = cv.cyclic.rotation();
  if (cu.cyclic.canonical() != cv.cyclic.canonical()) return std::nullopt;
  // Rotating U by ru gives the canonical form; the same for V by rv.  So V is
  // U rotated by (ru - rv) mod n.
  const std::size_t r = (ru + n - rv) % n;
  Word x = cu.cyclic.core().subword(0, r);
  return cu.conjugator * x * cv.conjugator.inverse();
}

Metric Metric::tree(std::vector<Letter> stable_letters) {
  if (stable_letters.empty()) {
    throw ConfigurationError("tree length needs at least one stable letter");
  }
  for (Letter& s : stable_letters) s = s > 0 ? s : -s;
  std::sort(stable_letters.begin(), stable_letters.end());
  stable_letters.erase(
      std::unique(stable_letters.begin(), stable_letters.end()),
      stable_letters.end());
  return Metric(Kind::tree_length, std::move(stable_letters));
}

std::string_view Metric::name() const noexcept {
  switch (kind_) {
    case Kind::word_length:
      return "word";
    case Kind::conjugacy_length:
      return "conjugacy";
    case Kind::tree_length:
      return "tree";
  }
  return "word";
}

std::size_t length(const Word& w, const Metric& m) {
  switch (m.kind()) {
    case Metric::Kind::word_length:
      return w.size();
    case Metric::Kind::conjugacy_length: {
      std::size_t i = 0;
      std::size_t j = w.size();
      while (j - i >= 2 && w[i] == -w[j - 1]) {
        ++i;
        --j;
      }
      return j - i;
    }
    case Metric::Kind::tree_length: {
      if (m.stable_letters().empty()) {
        throw ConfigurationError("tree length requires an attached splitting");
      }
      const auto& stable = m.stable_letters();
      std::size_t i = 0;
      std::size_t j = w.size();
      while (j - i >= 2 && w[i] == -w[j - 1]) {
        ++i;
        --j;
      }
      std::size_t count = 0;
      for (std::size_t k = i; k < j; ++k) {
        Letter g = w[k] > 0 ? w[k] : -w[k];
        if (std::binary_search(stable.begin(), stable.end(), g)) ++count;
      }
      return count;
    }
  }
  return 0;
}

std::vector<Word> enumerate_words(std::span<const Letter> generators,
                                  std::size_t min_length,
                                  std::size_t max_length) {
  std::vector<Letter> alphabet;
  for (Letter g : generators) {
    alphabet.push_back(g);
    alphabet.push_back(-g);
  }
  std::sort(alphabet.begin(), alphabet.end(), [](Letter x, Letter y) {
    return letter_rank(x) < letter_rank(y);
  });
  std::vector<Word> out;
  std::vector<Word> layer{Word()};
  if (min_length == 0) out.push_back(Word());
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (Letter x : alphabet) {
        if (!w.empty() && w.back() == -x) continue;
        next.push_back(w * Word::letter(x));
      }
    }
    layer = std::move(next);
    if (len >= min_length) out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace mtl

std::size_t std::hash<mtl::Word>::operator()(
    const mtl::Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (mtl::Letter x : w.letters()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
    h *= 1099511628211ull;
  }
  return h;
}
