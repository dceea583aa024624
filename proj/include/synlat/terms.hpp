#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "synlat/alphabet.hpp"
#include "synlat/atoms.hpp"
#include "synlat/dfa.hpp"
#include "synlat/error.hpp"

namespace synlat {

// ---------------------------------------------------------------------------
// Terms of the absolutely free algebras over {·, λ}, {·, λ, ∧, ⊤} and
// {·, λ, ∧, ⊤, ∨, ⊥}.

enum class TermKind { Letter, Lambda, Top, Bottom, Dot, Meet, Join };

/// Smallest signature a term lives in.
enum class Signature { Monoid = 0, Semiring = 1, Lattice = 2 };

class Term {
 public:
  static Term letter(char c) { return Term(TermKind::Letter, c, {}, {}); }
  static Term lambda() { return Term(TermKind::Lambda, 0, {}, {}); }
  static Term top() { return Term(TermKind::Top, 0, {}, {}); }
  static Term bottom() { return Term(TermKind::Bottom, 0, {}, {}); }
  static Term dot(Term l, Term r) { return Term(TermKind::Dot, 0, std::move(l), std::move(r)); }
  static Term meet(Term l, Term r) { return Term(TermKind::Meet, 0, std::move(l), std::move(r)); }
  static Term join(Term l, Term r) { return Term(TermKind::Join, 0, std::move(l), std::move(r)); }

  /// Right-combed product of the letters of `w`; λ for the empty word.
  static Term word(std::string_view w) {
    if (w.empty()) return lambda();
    Term t = letter(w.back());
    for (std::size_t i = w.size() - 1; i-- > 0;) t = dot(letter(w[i]), t);
    return t;
  }

  TermKind kind() const noexcept { return node_->kind; }
  char letter_char() const noexcept { return node_->letter; }
  const Term& left() const { return *node_->left; }
  const Term& right() const { return *node_->right; }

  std::size_t node_count() const {
    std::size_t c = 1;
    if (node_->left) c += node_->left->node_count();
    if (node_->right) c += node_->right->node_count();
    return c;
  }

  Signature signature() const {
    switch (kind()) {
      case TermKind::Letter:
      case TermKind::Lambda: return Signature::Monoid;
      case TermKind::Top: return Signature::Semiring;
      case TermKind::Bottom: return Signature::Lattice;
      case TermKind::Dot:
      case TermKind::Meet:
      case TermKind::Join: {
        auto own = kind() == TermKind::Dot    ? Signature::Monoid
                   : kind() == TermKind::Meet ? Signature::Semiring
                                              : Signature::Lattice;
        return std::max({own, left().signature(), right().signature()});
      }
    }
    return Signature::Lattice;
  }

  friend Term operator*(Term l, Term r) { return dot(std::move(l), std::move(r)); }
  friend Term operator&(Term l, Term r) { return meet(std::move(l), std::move(r)); }
  friend Term operator|(Term l, Term r) { return join(std::move(l), std::move(r)); }

 private:
  struct Node {
    TermKind kind;
    char letter;
    std::shared_ptr<const Term> left, right;
  };

  Term(TermKind k, char c, std::optional<Term> l, std::optional<Term> r)
      : node_(std::make_shared<const Node>(
            Node{k, c, l ? std::make_shared<const Term>(std::move(*l)) : nullptr,
                 r ? std::make_shared<const Term>(std::move(*r)) : nullptr})) {}

  std::shared_ptr<const Node> node_;
};

/// Text form: letters, juxtaposition or '.' for ·, '^' for ∧, 'v' for ∨,
/// 'T' for ⊤, '_' for ⊥, "%e" for λ. Precedence: · over ∧ over ∨.
inline std::string to_string(const Term& t) {
  auto wrap = [](const Term& k, TermKind parent) {
    std::string s = to_string(k);
    int prec_k = k.kind() == TermKind::Join ? 0 : k.kind() == TermKind::Meet ? 1 : k.kind() == TermKind::Dot ? 2 : 3;
    int prec_p = parent == TermKind::Join ? 0 : parent == TermKind::Meet ? 1 : 2;
    return prec_k < prec_p ? "(" + s + ")" : s;
  };
  switch (t.kind()) {
    case TermKind::Letter: return std::string(1, t.letter_char());
    case TermKind::Lambda: return "%e";
    case TermKind::Top: return "T";
    case TermKind::Bottom: return "_";
    case TermKind::Dot: {
      // keep a right-nested product distinguishable from a left-nested one
      std::string r = wrap(t.right(), TermKind::Dot);
      if (t.right().kind() == TermKind::Dot) r = "(" + r + ")";
      return wrap(t.left(), TermKind::Dot) + "." + r;
    }
    case TermKind::Meet: return wrap(t.left(), TermKind::Meet) + "^" + wrap(t.right(), TermKind::Meet);
    case TermKind::Join: return wrap(t.left(), TermKind::Join) + "v" + wrap(t.right(), TermKind::Join);
  }
  return {};
}

namespace detail {

class TermParser {
 public:
  TermParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Term parse() {
    skip();
    if (at_end()) throw ParseError("empty term", 0);
    Term t = join_level();
    skip();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Term join_level() {
    Term t = meet_level();
    while (accept('v')) t = Term::join(t, meet_level());
    return t;
  }

  Term meet_level() {
    Term t = product_level();
    while (accept('^')) t = Term::meet(t, product_level());
    return t;
  }

  bool starts_atom() {
    skip();
    if (at_end()) return false;
    char c = peek();
    return c == '(' || c == '%' || c == 'T' || c == '_' || (c != 'v' && alphabet_.contains(c));
  }

  Term product_level() {
    Term t = atom();
    while (true) {
      if (accept('.')) {
        t = Term::dot(t, atom());
      } else if (starts_atom()) {
        t = Term::dot(t, atom());
      } else {
        break;
      }
    }
    return t;
  }

  Term atom() {
    skip();
    if (at_end()) fail("expected a term");
    char c = peek();
    if (c == '(') {
      ++pos_;
      Term t = join_level();
      if (!accept(')')) fail("expected ')'");
      return t;
    }
    if (c == '%') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == 'e') {
        pos_ += 2;
        return Term::lambda();
      }
      fail("unknown escape");
    }
    if (c == 'T') {
      ++pos_;
      return Term::top();
    }
    if (c == '_') {
      ++pos_;
      return Term::bottom();
    }
    if (c == 'v' || !alphabet_.contains(c)) fail("letter '" + std::string(1, c) + "' is outside the alphabet");
    ++pos_;
    return Term::letter(c);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Letters 'v' and 'T' of the alphabet cannot be written in term syntax.
inline Term parse_term(std::string_view text, const Alphabet& alphabet) {
  return detail::TermParser(text, alphabet).parse();
}

/// The action of a term on a language: λ fixes it, a letter takes the left
/// quotient, a product acts left factor first, ∧/∨ act as ∩/∪ of the two
/// images, ⊤ gives A* and ⊥ gives ∅.
inline AtomSet eval_term(const ProfileTable& pt, const AtomSet& x, const Term& t) {
  switch (t.kind()) {
    case TermKind::Letter: return quotient_letter(pt, x, t.letter_char());
    case TermKind::Lambda: detail::require_table(pt, x); return x;
    case TermKind::Top: return top(pt);
    case TermKind::Bottom: return bottom(pt);
    case TermKind::Dot: return eval_term(pt, eval_term(pt, x, t.left()), t.right());
    case TermKind::Meet: return meet(eval_term(pt, x, t.left()), eval_term(pt, x, t.right()));
    case TermKind::Join: return join(eval_term(pt, x, t.left()), eval_term(pt, x, t.right()));
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Normal forms: A*, finite word sets (A^□) and antichains of finite word sets (A^◇).

/// Word-list order: shortlex on the first differing word, shorter list first on a common prefix.
inline bool word_list_less(std::span<const Word> a, std::span<const Word> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Word& x, const Word& y) { return shortlex_less(x, y); });
}

/// An element u1 ∧ ... ∧ uk of the free idempotent semiring: a finite set of
/// words in shortlex order. The empty set is ⊤.
struct MeetForm {
  std::vector<Word> words;

  static MeetForm of(std::vector<Word> ws) {
    std::sort(ws.begin(), ws.end(), [](const Word& x, const Word& y) { return shortlex_less(x, y); });
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return MeetForm{std::move(ws)};
  }
  static MeetForm top() { return {}; }
  static MeetForm word(Word w) { return MeetForm{{std::move(w)}}; }

  bool is_top() const noexcept { return words.empty(); }

  /// Inclusion of word sets (a larger set is a smaller semiring element).
  bool subset_of(const MeetForm& o) const {
    return std::includes(o.words.begin(), o.words.end(), words.begin(), words.end(),
                         [](const Word& x, const Word& y) { return shortlex_less(x, y); });
  }

  bool operator==(const MeetForm&) const = default;
  friend bool operator<(const MeetForm& a, const MeetForm& b) { return word_list_less(a.words, b.words); }
};

/// An element of the free bounded distributive lattice over A*: a join of
/// meets whose inner word sets are pairwise incomparable under inclusion.
/// The empty join is ⊥; the single empty meet {∅} is ⊤.
struct LatticeForm {
  std::vector<MeetForm> terms;

  /// Drops every inner set that contains another one, deduplicates and sorts.
  static LatticeForm of(std::vector<MeetForm> ts) {
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<MeetForm> kept;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      bool absorbed = false;
      for (std::size_t j = 0; j < ts.size() && !absorbed; ++j)
        absorbed = j != i && ts[j].subset_of(ts[i]);
      if (!absorbed) kept.push_back(ts[i]);
    }
    return LatticeForm{std::move(kept)};
  }
  static LatticeForm bottom() { return {}; }
  static LatticeForm top() { return LatticeForm{{MeetForm::top()}}; }
  static LatticeForm word(Word w) { return LatticeForm{{MeetForm::word(std::move(w))}}; }
  static LatticeForm meet_of(MeetForm m) { return LatticeForm{{std::move(m)}}; }

  bool is_bottom() const noexcept { return terms.empty(); }
  bool is_top() const noexcept { return terms.size() == 1 && terms[0].is_top(); }

  std::size_t word_count() const {
    std::size_t c = 0;
    for (const auto& m : terms) c += m.words.size();
    return c;
  }

  bool operator==(const LatticeForm&) const = default;
  friend bool operator<(const LatticeForm& a, const LatticeForm& b) {
    return std::lexicographical_compare(a.terms.begin(), a.terms.end(), b.terms.begin(), b.terms.end());
  }
};

/// Witness order: fewer words, then fewer letters, then the form order.
inline bool witness_less(const MeetForm& a, const MeetForm& b) {
  auto key = [](const MeetForm& m) {
    std::size_t letters = 0;
    for (const auto& w : m.words) letters += w.size();
    return std::pair{m.words.size(), letters};
  };
  auto ka = key(a), kb = key(b);
  return ka != kb ? ka < kb : a < b;
}

inline bool witness_less(const LatticeForm& a, const LatticeForm& b) {
  auto key = [](const LatticeForm& f) {
    std::size_t letters = 0;
    for (const auto& m : f.terms)
      for (const auto& w : m.words) letters += w.size();
    return std::pair{f.word_count(), letters};
  };
  auto ka = key(a), kb = key(b);
  return ka != kb ? ka < kb : a < b;
}

inline std::string to_string(const MeetForm& m) {
  if (m.is_top()) return "T";
  std::string s;
  for (std::size_t i = 0; i < m.words.size(); ++i) s += (i ? "^" : "") + word_text(m.words[i]);
  return s;
}

inline std::string to_string(const LatticeForm& f) {
  if (f.is_bottom()) return "_";
  std::string s;
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    const auto& m = f.terms[i];
    std::string inner = to_string(m);
    if (f.terms.size() > 1 && m.words.size() > 1) inner = "(" + inner + ")";
    s += (i ? "v" : "") + inner;
  }
  return s;
}

inline LatticeForm lattice_join(const LatticeForm& u, const LatticeForm& v) {
  std::vector<MeetForm> ts = u.terms;
  ts.insert(ts.end(), v.terms.begin(), v.terms.end());
  return LatticeForm::of(std::move(ts));
}

/// Distributes ∧ over ∨: (∨ Ui) ∧ (∨ Vj) = ∨ (Ui ∪ Vj).
inline LatticeForm lattice_meet(const LatticeForm& u, const LatticeForm& v) {
  std::vector<MeetForm> ts;
  for (const auto& a : u.terms)
    for (const auto& b : v.terms) {
      std::vector<Word> ws = a.words;
      ws.insert(ws.end(), b.words.begin(), b.words.end());
      ts.push_back(MeetForm::of(std::move(ws)));
    }
  return LatticeForm::of(std::move(ts));
}

/// 𝒰·w: a word on the right distributes through ∨ and ∧ down to concatenation.
inline LatticeForm multiply_by_word(const LatticeForm& u, std::string_view w) {
  std::vector<MeetForm> ts;
  for (const auto& m : u.terms) {
    std::vector<Word> ws;
    for (const auto& x : m.words) ws.push_back(x + std::string(w));
    ts.push_back(MeetForm::of(std::move(ws)));
  }
  return LatticeForm::of(std::move(ts));
}

/// 𝒰·𝒱 = ∨_k ∧_l (𝒰·v_kl). The right factor is always expanded down to its
/// words: left multiplication distributes over ∧ and ∨, right multiplication
/// only by words.
inline LatticeForm multiply_lattice_forms(const LatticeForm& u, const LatticeForm& v) {
  LatticeForm out = LatticeForm::bottom();
  for (const auto& m : v.terms) {
    LatticeForm prod = LatticeForm::top();
    for (const auto& w : m.words) prod = lattice_meet(prod, multiply_by_word(u, w));
    out = lattice_join(out, prod);
  }
  return out;
}

/// Semiring product {u v : u in U, v in V}; ⊤ (the empty set) is a zero.
inline MeetForm multiply_meet_forms(const MeetForm& u, const MeetForm& v) {
  std::vector<Word> ws;
  for (const auto& a : u.words)
    for (const auto& b : v.words) ws.push_back(a + b);
  return MeetForm::of(std::move(ws));
}

inline Word normalize_monoid(const Term& t) {
  switch (t.kind()) {
    case TermKind::Letter: return Word(1, t.letter_char());
    case TermKind::Lambda: return {};
    case TermKind::Dot: return normalize_monoid(t.left()) + normalize_monoid(t.right());
    default: throw std::invalid_argument("term is outside the monoid signature: " + to_string(t));
  }
}

inline MeetForm normalize_semiring(const Term& t) {
  switch (t.kind()) {
    case TermKind::Letter: return MeetForm::word(Word(1, t.letter_char()));
    case TermKind::Lambda: return MeetForm::word({});
    case TermKind::Top: return MeetForm::top();
    case TermKind::Dot: return multiply_meet_forms(normalize_semiring(t.left()), normalize_semiring(t.right()));
    case TermKind::Meet: {
      auto a = normalize_semiring(t.left());
      auto b = normalize_semiring(t.right());
      a.words.insert(a.words.end(), b.words.begin(), b.words.end());
      return MeetForm::of(std::move(a.words));
    }
    default: throw std::invalid_argument("term is outside the semiring signature: " + to_string(t));
  }
}

inline LatticeForm normalize_lattice(const Term& t) {
  switch (t.kind()) {
    case TermKind::Letter: return LatticeForm::word(Word(1, t.letter_char()));
    case TermKind::Lambda: return LatticeForm::word({});
    case TermKind::Top: return LatticeForm::top();
    case TermKind::Bottom: return LatticeForm::bottom();
    case TermKind::Dot: return multiply_lattice_forms(normalize_lattice(t.left()), normalize_lattice(t.right()));
    case TermKind::Meet: return lattice_meet(normalize_lattice(t.left()), normalize_lattice(t.right()));
    case TermKind::Join: return lattice_join(normalize_lattice(t.left()), normalize_lattice(t.right()));
  }
  throw std::logic_error("unreachable");
}

inline Term embed(const MeetForm& m) {
  if (m.is_top()) return Term::top();
  Term t = Term::word(m.words.back());
  for (std::size_t i = m.words.size() - 1; i-- > 0;) t = Term::meet(Term::word(m.words[i]), t);
  return t;
}

/// Right-combed term denoting the form.
inline Term embed(const LatticeForm& f) {
  if (f.is_bottom()) return Term::bottom();
  Term t = embed(f.terms.back());
  for (std::size_t i = f.terms.size() - 1; i-- > 0;) t = Term::join(embed(f.terms[i]), t);
  return t;
}

/// X∘(∧ U) = ∩_{u in U} u^-1 X.
inline AtomSet eval_form(const ProfileTable& pt, const AtomSet& x, const MeetForm& m) {
  AtomSet out = top(pt);
  for (const auto& w : m.words) out = meet(out, quotient_word(pt, x, w));
  return out;
}

/// X∘𝒰 = ∪_i ∩_j u_ij^-1 X. Agrees with `eval_term(pt, x, embed(f))`.
inline AtomSet eval_form(const ProfileTable& pt, const AtomSet& x, const LatticeForm& f) {
  AtomSet out = bottom(pt);
  for (const auto& m : f.terms) out = join(out, eval_form(pt, x, m));
  return out;
}

/// A finite language L whose membership of λ in L∘n1 and in L∘n2 differ.
/// Take an inner set U of one form missing from the other and L = U; if the
/// other form still puts λ in its image, it has an inner set V ⊆ U and L = V
/// separates instead.
inline std::vector<Word> separating_language(const LatticeForm& n1, const LatticeForm& n2) {
  if (n1 == n2) throw std::invalid_argument("forms are equal; no separating language exists");
  auto missing = [](const LatticeForm& a, const LatticeForm& b) -> std::optional<MeetForm> {
    for (const auto& m : a.terms)
      if (std::find(b.terms.begin(), b.terms.end(), m) == b.terms.end()) return m;
    return std::nullopt;
  };
  auto u = missing(n1, n2);
  const LatticeForm& other = u ? n2 : n1;
  if (!u) u = missing(n2, n1);
  for (const auto& v : other.terms)
    if (v.subset_of(*u)) return v.words;
  return u->words;
}

/// A finite language packaged with its canonical automaton and profile table,
/// for evaluating terms on it.
struct FiniteLanguage {
  Dfa dfa;
  ProfileTable table;
  AtomSet language;
};

inline FiniteLanguage finite_language(const Alphabet& alphabet, std::span<const Word> words) {
  Dfa d = finite_language_dfa(alphabet, words);
  ProfileTable pt = build_profile_table(d);
  AtomSet x = residual_atoms(pt, d.initial);
  return FiniteLanguage{std::move(d), std::move(pt), std::move(x)};
}

}  // namespace synlat
