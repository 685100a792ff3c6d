#include "mtl/config.hpp"

#include <charconv>
#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace mtl {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool is_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  JobConfig run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t nl = text_.find('\n', pos);
      if (nl == std::string_view::npos) nl = text_.size();
      ++line_;
      directive(tokenize(text_.substr(pos, nl - pos)));
      pos = nl + 1;
    }
    if (in_auto_) fail(auto_line_, 1, "automorphism block is not closed by 'end'");
    if (!basis_) fail(1, 1, "missing 'group' directive");
    if (!alpha_) fail(line_, 1, "missing 'auto' block");
    return JobConfig{*basis_, *alpha_, splits_, subgroups_, bounds_, elements_};
  }

 private:
  [[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& what) {
    throw ParseError(line, column, what);
  }
  [[noreturn]] void fail(const Token& t, const std::string& what) {
    fail(line_, t.column, what);
  }

  Word word(std::string_view text, std::size_t column) {
    try {
      return basis_->parse(text);
    } catch (const AlphabetError& e) {
      fail(line_, column + e.position(),
           std::string("undefined generator '") + e.letter() + "'");
    }
  }

  char generator(std::string_view text, std::size_t column) {
    if (text.size() != 1 || !basis_->contains(text[0])) {
      fail(line_, column, "undefined generator '" + std::string(text) + "'");
    }
    return text[0];
  }

  std::vector<char> letter_list(std::string_view text, std::size_t column) {
    std::vector<char> out;
    std::size_t i = 0;
    while (i <= text.size()) {
      std::size_t comma = text.find(',', i);
      if (comma == std::string_view::npos) comma = text.size();
      out.push_back(generator(text.substr(i, comma - i), column + i));
      i = comma + 1;
    }
    return out;
  }

  std::map<std::string, Token> key_values(const std::vector<Token>& tokens, std::size_t from) {
    std::map<std::string, Token> out;
    for (std::size_t i = from; i < tokens.size(); ++i) {
      const auto eq = tokens[i].text.find('=');
      if (eq == std::string::npos || eq == 0) fail(tokens[i], "expected key=value");
      const std::string key = tokens[i].text.substr(0, eq);
      if (out.count(key)) fail(tokens[i], "repeated key '" + key + "'");
      out[key] = {tokens[i].text.substr(eq + 1), tokens[i].column + eq + 1};
    }
    return out;
  }

  void need_group(const Token& t) {
    if (!basis_) fail(t, "'group' must come first");
  }

  void directive(const std::vector<Token>& tokens) {
    if (tokens.empty()) return;
    const Token& head = tokens[0];
    if (in_auto_) {
      if (head.text == "end") {
        if (tokens.size() > 1) fail(tokens[1], "unexpected text after 'end'");
        close_auto(head);
        return;
      }
      mapping(tokens);
      return;
    }
    if (head.text == "group") {
      group(tokens);
    } else if (head.text == "auto") {
      need_group(head);
      if (alpha_) fail(head, "second 'auto' block");
      if (tokens.size() > 1) fail(tokens[1], "unexpected text after 'auto'");
      in_auto_ = true;
      auto_line_ = line_;
      images_.assign(basis_->rank(), std::nullopt);
    } else if (head.text == "split") {
      need_group(head);
      split(tokens);
    } else if (head.text == "subgroup") {
      need_group(head);
      subgroup(tokens);
    } else if (head.text == "bounds") {
      need_group(head);
      bounds(tokens);
    } else if (head.text == "element") {
      need_group(head);
      element(tokens);
    } else if (head.text == "end") {
      fail(head, "'end' outside an automorphism block");
    } else {
      fail(head, "unknown directive '" + head.text + "'");
    }
  }

  void group(const std::vector<Token>& tokens) {
    if (basis_) fail(tokens[0], "second 'group' directive");
    if (tokens.size() < 2) fail(tokens[0], "'group' needs at least one generator");
    std::string names;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const std::string& t = tokens[i].text;
      if (t.size() != 1 || t[0] < 'a' || t[0] > 'z') {
        fail(tokens[i], "generator names are single lowercase letters");
      }
      if (names.find(t[0]) != std::string::npos) {
        fail(tokens[i], "repeated generator '" + t + "'");
      }
      names += t;
    }
    basis_ = FreeBasis::from_string(names);
  }

  void mapping(const std::vector<Token>& tokens) {
    if (tokens.size() < 2 || tokens[1].text != "->") {
      fail(tokens.size() < 2 ? tokens[0] : tokens[1], "expected '<generator> -> <word>'");
    }
    if (tokens.size() > 3) fail(tokens[3], "unexpected text after the image");
    const char x = generator(tokens[0].text, tokens[0].column);
    auto& slot = images_[static_cast<std::size_t>(*basis_->index_of(x)) - 1];
    if (slot) fail(tokens[0], std::string("second image for '") + x + "'");
    slot = tokens.size() == 3 ? word(tokens[2].text, tokens[2].column) : Word();
  }

  void close_auto(const Token& end) {
    std::vector<Word> images;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (!images_[i]) {
        fail(end, std::string("no image for '") +
                      basis_->name(static_cast<Letter>(i) + 1) + "'");
      }
      images.push_back(*images_[i]);
    }
    try {
      alpha_ = Automorphism::validate(*basis_, std::move(images));
    } catch (const Error& e) {
      fail(auto_line_, 1, std::string("not an automorphism: ") + e.what());
    }
    in_auto_ = false;
  }

  void split(const std::vector<Token>& tokens) {
    if (tokens.size() < 2) fail(tokens[0], "expected 'hnn' or 'product'");
    auto kv = key_values(tokens, 2);
    auto take = [&](const char* key) {
      auto it = kv.find(key);
      if (it == kv.end()) fail(tokens[1], std::string("missing '") + key + "='");
      Token t = it->second;
      kv.erase(it);
      return t;
    };
    SplitSpec s;
    if (tokens[1].text == "hnn") {
      s.kind = SplitSpec::Kind::hnn;
      const Token f = take("factor");
      const Token st = take("stable");
      s.factor = letter_list(f.text, f.column);
      s.stable = generator(st.text, st.column);
    } else if (tokens[1].text == "product") {
      s.kind = SplitSpec::Kind::product;
      const Token l = take("left");
      const Token r = take("right");
      s.factor = letter_list(l.text, l.column);
      s.right = letter_list(r.text, r.column);
    } else {
      fail(tokens[1], "expected 'hnn' or 'product'");
    }
    if (!kv.empty()) {
      const Token& t = kv.begin()->second;
      fail(line_, t.column - kv.begin()->first.size() - 1,
           "unknown key '" + kv.begin()->first + "'");
    }
    splits_.push_back(std::move(s));
  }

  std::string defined_name(const std::vector<Token>& tokens, const char* what) {
    if (tokens.size() < 3 || tokens[2].text != "=") {
      fail(tokens.size() < 3 ? tokens.back() : tokens[2],
           std::string("expected '") + what + " <name> = ...'");
    }
    if (!is_name(tokens[1].text)) fail(tokens[1], "bad name '" + tokens[1].text + "'");
    if (!names_.insert(tokens[1].text).second) {
      fail(tokens[1], "name '" + tokens[1].text + "' is already defined");
    }
    return tokens[1].text;
  }

  void subgroup(const std::vector<Token>& tokens) {
    NamedSubgroup s;
    s.name = defined_name(tokens, "subgroup");
    for (std::size_t i = 3; i < tokens.size(); ++i) {
      const std::string& t = tokens[i].text;
      std::size_t j = 0;
      while (j <= t.size()) {
        std::size_t comma = t.find(',', j);
        if (comma == std::string::npos) comma = t.size();
        if (comma > j) s.generators.push_back(word(t.substr(j, comma - j), tokens[i].column + j));
        j = comma + 1;
      }
    }
    if (s.generators.empty()) fail(tokens[2], "subgroup needs at least one generator");
    subgroups_.push_back(std::move(s));
  }

  void bounds(const std::vector<Token>& tokens) {
    for (const auto& [key, value] : key_values(tokens, 1)) {
      std::uint64_t v = 0;
      const char* b = value.text.data();
      const char* e = b + value.text.size();
      auto [p, ec] = std::from_chars(b, e, v);
      if (ec != std::errc() || p != e || value.text.empty()) {
        fail(line_, value.column, "expected a non-negative integer for '" + key + "'");
      }
      if (key == "horizon") {
        bounds_.horizon = v;
      } else if (key == "radius") {
        bounds_.radius = v;
      } else if (key == "maxExp") {
        bounds_.max_exp = v;
      } else if (key == "maxConj") {
        bounds_.max_conj = v;
      } else if (key == "seed") {
        bounds_.seed = v;
      } else {
        fail(line_, value.column - key.size() - 1, "unknown bound '" + key + "'");
      }
    }
  }

  void element(const std::vector<Token>& tokens) {
    NamedElement e;
    e.name = defined_name(tokens, "element");
    if (tokens.size() > 4) fail(tokens[4], "unexpected text after the word");
    if (tokens.size() == 4) e.word = word(tokens[3].text, tokens[3].column);
    elements_.push_back(std::move(e));
  }

  std::string_view text_;
  std::size_t line_ = 0;
  std::optional<FreeBasis> basis_;
  std::optional<Automorphism> alpha_;
  bool in_auto_ = false;
  std::size_t auto_line_ = 0;
  std::vector<std::optional<Word>> images_;
  std::vector<SplitSpec> splits_;
  std::vector<NamedSubgroup> subgroups_;
  Bounds bounds_;
  std::vector<NamedElement> elements_;
  std::set<std::string> names_;
};

std::string join(const std::vector<char>& letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += letters[i];
  }
  return out;
}

}  // namespace

JobConfig parse_config(std::string_view text) { return Parser(text).run(); }

std::string emit(const JobConfig& c) {
  std::string out = "group";
  for (char x : c.basis.names()) {
    out += ' ';
    out += x;
  }
  out += "\nauto\n";
  for (Letter x = 1; static_cast<std::size_t>(x) <= c.basis.rank(); ++x) {
    out += std::string(1, c.basis.name(x)) + " -> " + c.basis.format(c.alpha.image(x)) + "\n";
  }
  out += "end\n";
  for (const SplitSpec& s : c.splits) {
    if (s.kind == SplitSpec::Kind::hnn) {
      out += "split hnn factor=" + join(s.factor) + " stable=" + s.stable + "\n";
    } else {
      out += "split product left=" + join(s.factor) + " right=" + join(s.right) + "\n";
    }
  }
  for (const NamedSubgroup& s : c.subgroups) {
    out += "subgroup " + s.name + " =";
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
      out += (i ? "," : " ") + c.basis.format(s.generators[i]);
    }
    out += "\n";
  }
  const Bounds& b = c.bounds;
  out += "bounds horizon=" + std::to_string(b.horizon) + " radius=" + std::to_string(b.radius) +
         " maxExp=" + std::to_string(b.max_exp) + " maxConj=" + std::to_string(b.max_conj) +
         " seed=" + std::to_string(b.seed) + "\n";
  for (const NamedElement& e : c.elements) {
    out += "element " + e.name + " = " + c.basis.format(e.word) + "\n";
  }
  return out;
}

}  // namespace mtl
