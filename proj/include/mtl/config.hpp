#pragma once

// Line-oriented job description:
//
//   group a b s
//   auto
//   a -> ab
//   ...
//   end
//   split hnn factor=a,b stable=s
//   split product left=a right=b
//   subgroup P = abAB,ba
//   bounds horizon=40 radius=4 maxExp=4 maxConj=4 seed=0
//   element x = ab
//
// `#` starts a comment.  emit() writes the canonical form of a config.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mtl/autos.hpp"
#include "mtl/error.hpp"
#include "mtl/splittings.hpp"
#include "mtl/words.hpp"

namespace mtl {

class ParseError : public ConfigurationError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : ConfigurationError("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NamedElement {
  std::string name;
  Word word;

  friend bool operator==(const NamedElement&, const NamedElement&) = default;
};

struct JobConfig {
  FreeBasis basis;
  Automorphism alpha;
  std::vector<SplitSpec> splits;
  std::vector<NamedSubgroup> subgroups;
  Bounds bounds;
  std::vector<NamedElement> elements;

  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

/// Throws ParseError with the position of the offending token.
JobConfig parse_config(std::string_view text);
std::string emit(const JobConfig& config);

}  // namespace mtl
