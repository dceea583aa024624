#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "synlat/alphabet.hpp"
#include "synlat/dfa.hpp"
#include "synlat/error.hpp"

namespace synlat {

enum class RegexKind { EmptySet, EmptyWord, Letter, Concat, Union, Star, Plus, Optional };

struct RegexNode;
using RegexPtr = std::shared_ptr<const RegexNode>;

struct RegexNode {
  RegexKind kind;
  char letter = 0;
  std::vector<RegexPtr> children;
};

struct RegexAst {
  RegexPtr root;
  Alphabet alphabet;
};

inline RegexPtr make_regex(RegexKind kind, std::vector<RegexPtr> children = {}, char letter = 0) {
  return std::make_shared<const RegexNode>(RegexNode{kind, letter, std::move(children)});
}

/// Structural dump, e.g. "Concat(Plus(a),Plus(b))".
inline std::string to_string(const RegexNode& n) {
  auto list = [&](const char* name) {
    std::string s = std::string(name) + "(";
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i) s += ",";
      s += to_string(*n.children[i]);
    }
    return s + ")";
  };
  switch (n.kind) {
    case RegexKind::EmptySet: return "EmptySet";
    case RegexKind::EmptyWord: return "EmptyWord";
    case RegexKind::Letter: return std::string(1, n.letter);
    case RegexKind::Concat: return list("Concat");
    case RegexKind::Union: return list("Union");
    case RegexKind::Star: return list("Star");
    case RegexKind::Plus: return list("Plus");
    case RegexKind::Optional: return list("Optional");
  }
  return {};
}

inline std::size_t node_count(const RegexNode& n) {
  std::size_t c = 1;
  for (const auto& k : n.children) c += node_count(*k);
  return c;
}

/// Renders an AST back into the regex grammar accepted by `parse_regex`.
inline std::string to_pattern(const RegexNode& n) {
  auto atom = [](const RegexNode& k) {
    std::string s = to_pattern(k);
    bool simple = k.kind == RegexKind::Letter || k.kind == RegexKind::EmptySet ||
                  k.kind == RegexKind::EmptyWord || k.kind == RegexKind::Star ||
                  k.kind == RegexKind::Plus || k.kind == RegexKind::Optional;
    return simple ? s : "(" + s + ")";
  };
  switch (n.kind) {
    case RegexKind::EmptySet: return "%0";
    case RegexKind::EmptyWord: return "%e";
    case RegexKind::Letter: return std::string(1, n.letter);
    case RegexKind::Concat: {
      std::string s;
      for (const auto& k : n.children) s += k->kind == RegexKind::Union ? "(" + to_pattern(*k) + ")" : to_pattern(*k);
      return s;
    }
    case RegexKind::Union: {
      std::string s;
      for (std::size_t i = 0; i < n.children.size(); ++i) s += (i ? "|" : "") + to_pattern(*n.children[i]);
      return s;
    }
    case RegexKind::Star: return atom(*n.children[0]) + "*";
    case RegexKind::Plus: return atom(*n.children[0]) + "+";
    case RegexKind::Optional: return atom(*n.children[0]) + "?";
  }
  return {};
}

namespace detail {

class RegexParser {
 public:
  RegexParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  RegexPtr parse() {
    if (text_.empty())
      throw ParseError("empty pattern (write %e for the empty word, %0 for the empty language)", 0);
    RegexPtr r = expr();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  RegexPtr expr() {
    std::vector<RegexPtr> alts{term()};
    while (!at_end() && peek() == '|') {
      ++pos_;
      alts.push_back(term());
    }
    return alts.size() == 1 ? alts.front() : make_regex(RegexKind::Union, std::move(alts));
  }

  bool starts_base() const { return !at_end() && peek() != '|' && peek() != ')'; }

  RegexPtr term() {
    if (!starts_base()) fail("expected an expression");
    std::vector<RegexPtr> factors;
    while (starts_base()) factors.push_back(factor());
    return factors.size() == 1 ? factors.front() : make_regex(RegexKind::Concat, std::move(factors));
  }

  RegexPtr factor() {
    RegexPtr r = base();
    while (!at_end()) {
      char c = peek();
      RegexKind k;
      if (c == '*') k = RegexKind::Star;
      else if (c == '+') k = RegexKind::Plus;
      else if (c == '?') k = RegexKind::Optional;
      else break;
      ++pos_;
      r = make_regex(k, {r});
    }
    return r;
  }

  RegexPtr base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RegexPtr r = expr();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (c == '%') {
      if (pos_ + 1 >= text_.size()) fail("dangling '%'");
      char e = text_[pos_ + 1];
      if (e != 'e' && e != '0') fail("unknown escape '%" + std::string(1, e) + "'");
      pos_ += 2;
      return make_regex(e == 'e' ? RegexKind::EmptyWord : RegexKind::EmptySet);
    }
    if (c == '*' || c == '+' || c == '?') fail("postfix operator without operand");
    if (!alphabet_.contains(c)) fail("letter '" + std::string(1, c) + "' is outside the alphabet");
    ++pos_;
    return make_regex(RegexKind::Letter, {}, c);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

// Derivative-side representation: union is a sorted duplicate-free set,
// concatenation a flat list, and the unit/annihilator laws are applied eagerly.
// `key` is a fully bracketed canonical spelling used for interning.
struct Re;
using ReP = std::shared_ptr<const Re>;

enum class ReKind { Empty, Eps, Letter, Concat, Union, Star };

struct Re {
  ReKind kind;
  char letter = 0;
  std::vector<ReP> kids;
  bool nullable = false;
  std::string key;
  std::string text;
};

class ReFactory {
 public:
  ReP empty() { return empty_; }
  ReP eps() { return eps_; }

  ReP letter(char c) {
    std::string s(1, c);
    return intern(Re{ReKind::Letter, c, {}, false, s, s});
  }

  ReP cat(const ReP& x, const ReP& y) {
    if (x->kind == ReKind::Empty || y->kind == ReKind::Empty) return empty_;
    if (x->kind == ReKind::Eps) return y;
    if (y->kind == ReKind::Eps) return x;
    std::vector<ReP> kids;
    for (const ReP& r : {x, y}) {
      if (r->kind == ReKind::Concat) kids.insert(kids.end(), r->kids.begin(), r->kids.end());
      else kids.push_back(r);
    }
    std::string key = "(", text;
    bool nullable = true;
    for (const ReP& k : kids) {
      key += k->key + ".";
      text += k->kind == ReKind::Union ? "(" + k->text + ")" : k->text;
      nullable = nullable && k->nullable;
    }
    key += ")";
    return intern(Re{ReKind::Concat, 0, std::move(kids), nullable, std::move(key), std::move(text)});
  }

  ReP cat(const std::vector<ReP>& parts, std::size_t from) {
    ReP r = eps_;
    for (std::size_t i = parts.size(); i-- > from;) r = cat(parts[i], r);
    return r;
  }

  ReP alt(const ReP& x, const ReP& y) {
    std::map<std::string, ReP> members;
    for (const ReP& r : {x, y}) {
      if (r->kind == ReKind::Empty) continue;
      if (r->kind == ReKind::Union)
        for (const ReP& k : r->kids) members.emplace(k->key, k);
      else
        members.emplace(r->key, r);
    }
    if (members.empty()) return empty_;
    if (members.size() == 1) return members.begin()->second;
    std::vector<ReP> kids;
    std::string key = "{", text;
    bool nullable = false;
    for (auto& [k, r] : members) {
      key += k + "|";
      if (!text.empty()) text += "|";
      text += r->text;
      nullable = nullable || r->nullable;
      kids.push_back(r);
    }
    key += "}";
    return intern(Re{ReKind::Union, 0, std::move(kids), nullable, std::move(key), std::move(text)});
  }

  ReP star(const ReP& x) {
    if (x->kind == ReKind::Star) return x;
    if (x->kind == ReKind::Empty || x->kind == ReKind::Eps) return eps_;
    bool atomic = x->kind == ReKind::Letter;
    return intern(Re{ReKind::Star, 0, {x}, true, "[" + x->key + "]*",
                     (atomic ? x->text : "(" + x->text + ")") + "*"});
  }

  ReP from_ast(const RegexNode& n) {
    switch (n.kind) {
      case RegexKind::EmptySet: return empty_;
      case RegexKind::EmptyWord: return eps_;
      case RegexKind::Letter: return letter(n.letter);
      case RegexKind::Concat: {
        ReP r = eps_;
        for (std::size_t i = n.children.size(); i-- > 0;) r = cat(from_ast(*n.children[i]), r);
        return r;
      }
      case RegexKind::Union: {
        ReP r = empty_;
        for (const auto& k : n.children) r = alt(r, from_ast(*k));
        return r;
      }
      case RegexKind::Star: return star(from_ast(*n.children[0]));
      case RegexKind::Plus: {
        ReP x = from_ast(*n.children[0]);
        return cat(x, star(x));
      }
      case RegexKind::Optional: return alt(from_ast(*n.children[0]), eps_);
    }
    return empty_;
  }

  ReP derive(const ReP& r, char a) {
    auto memo_key = r->key;
    memo_key.push_back('\x01');
    memo_key.push_back(a);
    if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;
    ReP d;
    switch (r->kind) {
      case ReKind::Empty:
      case ReKind::Eps: d = empty_; break;
      case ReKind::Letter: d = r->letter == a ? eps_ : empty_; break;
      case ReKind::Union: {
        d = empty_;
        for (const ReP& k : r->kids) d = alt(d, derive(k, a));
        break;
      }
      case ReKind::Concat: {
        ReP rest = cat(r->kids, 1);
        d = cat(derive(r->kids[0], a), rest);
        if (r->kids[0]->nullable) d = alt(d, derive(rest, a));
        break;
      }
      case ReKind::Star: d = cat(derive(r->kids[0], a), r); break;
    }
    memo_.emplace(std::move(memo_key), d);
    return d;
  }

 private:
  ReP intern(Re&& re) {
    auto it = pool_.find(re.key);
    if (it != pool_.end()) return it->second;
    auto key = re.key;
    auto p = std::make_shared<const Re>(std::move(re));
    pool_.emplace(std::move(key), p);
    return p;
  }

  ReP empty_ = std::make_shared<const Re>(Re{ReKind::Empty, 0, {}, false, "%0", "%0"});
  ReP eps_ = std::make_shared<const Re>(Re{ReKind::Eps, 0, {}, true, "%e", "%e"});
  std::unordered_map<std::string, ReP> pool_;
  std::unordered_map<std::string, ReP> memo_;
};

}  // namespace detail

inline RegexAst parse_regex(std::string_view text, const Alphabet& alphabet) {
  if (alphabet.empty()) throw std::invalid_argument("alphabet must be non-empty");
  return RegexAst{detail::RegexParser(text, alphabet).parse(), alphabet};
}

/// Brzozowski derivative automaton (derivatives identified up to
/// associativity, commutativity and idempotence of union plus the unit and
/// annihilator laws), then Hopcroft-minimized. States are labelled with the
/// first derivative found for each residual.
inline Dfa compile_canonical_dfa(const RegexAst& ast, std::size_t max_states = Budgets{}.states) {
  detail::ReFactory f;
  const Alphabet& sigma = ast.alphabet;
  std::vector<detail::ReP> states{f.from_ast(*ast.root)};
  std::unordered_map<std::string, std::size_t> id{{states[0]->key, 0}};
  Dfa d;
  d.alphabet = sigma;
  d.initial = state_id(0);
  for (std::size_t i = 0; i < states.size(); ++i) {
    d.delta.emplace_back(sigma.size());
    d.finals.push_back(states[i]->nullable);
    d.labels.push_back(states[i]->text);
    for (std::size_t a = 0; a < sigma.size(); ++a) {
      detail::ReP r = f.derive(states[i], sigma.letter(a));
      auto [it, fresh] = id.emplace(r->key, states.size());
      if (fresh) {
        if (states.size() >= max_states)
          throw BudgetExceeded("canonical automaton exceeds " + std::to_string(max_states) + " states");
        states.push_back(r);
      }
      d.delta[i][a] = state_id(it->second);
    }
  }
  return minimize(d);
}

inline Dfa compile_canonical_dfa(std::string_view pattern, const Alphabet& alphabet,
                                 std::size_t max_states = Budgets{}.states) {
  return compile_canonical_dfa(parse_regex(pattern, alphabet), max_states);
}

}  // namespace synlat
