#pragma once

// Naive reference implementations over strings in the external syntax
// (lowercase generator, uppercase inverse).  Deliberately independent of the
// library: no shared code paths, quadratic algorithms everywhere.

#include <cctype>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline char inv(char c) {
  return std::islower(static_cast<unsigned char>(c))
             ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
             : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

inline std::string reduce(const std::string& w) {
  std::string out;
  bool changed = true;
  out = w;
  // Repeated single-pair deletion, not a stack.
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i + 1] == inv(out[i])) {
        out.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return out;
}

inline std::string inverse(const std::string& w) {
  std::string out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
  return out;
}

inline std::string mul(const std::string& u, const std::string& v) {
  return reduce(u + v);
}

inline std::string cyclic_core(std::string w) {
  w = reduce(w);
  while (w.size() >= 2 && w.back() == inv(w.front())) {
    w = w.substr(1, w.size() - 2);
  }
  return w;
}

/// Image of w under the substitution x -> images[x], x^-1 -> images[x]^-1.
inline std::string substitute(const std::map<char, std::string>& images,
                              const std::string& w) {
  std::string out;
  for (char c : w) {
    if (std::islower(static_cast<unsigned char>(c))) {
      out += images.at(c);
    } else {
      out += inverse(images.at(inv(c)));
    }
  }
  return reduce(out);
}

inline std::string power(const std::map<char, std::string>& images,
                         std::string w, int n) {
  for (int i = 0; i < n; ++i) w = substitute(images, w);
  return w;
}

/// All reduced words over `gens` (lowercase) of length <= n.
inline std::vector<std::string> words(const std::string& gens, std::size_t n) {
  std::string alphabet;
  for (char g : gens) {
    alphabet.push_back(g);
    alphabet.push_back(inv(g));
  }
  std::vector<std::string> out{""};
  std::vector<std::string> layer{""};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      for (char c : alphabet) {
        std::string x = w + c;
        if (reduce(x) == x) next.push_back(x);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// Is there c with |c| <= n and c^-1 u c == v?
inline bool conjugate_within(const std::string& gens, const std::string& u,
                             const std::string& v, std::size_t n) {
  for (const auto& c : words(gens, n)) {
    if (reduce(inverse(c) + u + c) == reduce(v)) return true;
  }
  return false;
}

/// All products of at most `k` factors from gens and their inverses.
inline std::set<std::string> products(const std::vector<std::string>& gens,
                                      int k) {
  std::vector<std::string> pool;
  for (const auto& g : gens) {
    pool.push_back(reduce(g));
    pool.push_back(inverse(reduce(g)));
  }
  std::set<std::string> out{""};
  std::set<std::string> layer{""};
  for (int i = 0; i < k; ++i) {
    std::set<std::string> next;
    for (const auto& w : layer) {
      for (const auto& g : pool) next.insert(mul(w, g));
    }
    out.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline std::string random_word(std::mt19937_64& rng, const std::string& gens,
                               std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, 2 * gens.size() - 1);
  std::string w;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = pick(rng);
    w.push_back(j % 2 == 0 ? gens[j / 2] : inv(gens[j / 2]));
  }
  return reduce(w);
}

}  // namespace oracle
