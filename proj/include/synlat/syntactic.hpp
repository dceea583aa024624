#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "synlat/atoms.hpp"
#include "synlat/canonical.hpp"
#include "synlat/dfa.hpp"
#include "synlat/error.hpp"
#include "synlat/terms.hpp"

namespace synlat {

namespace detail {

template <class T>
struct VectorHash {
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::size_t h = v.size();
    for (const auto& x : v) h = h * 0x100000001b3ull ^ static_cast<std::size_t>(x);
    return h;
  }
};

inline void check_table_budget(std::size_t n, std::size_t cells) {
  if (n != 0 && n > cells / n)
    throw BudgetExceeded("operation table for " + std::to_string(n) + " elements exceeds " +
                         std::to_string(cells) + " cells");
}

inline void check_element_budget(std::size_t n, std::size_t budget) {
  if (n > budget) throw BudgetExceeded("algebra exceeds " + std::to_string(budget) + " elements");
}

using Table = std::vector<std::vector<std::uint32_t>>;

}  // namespace detail

// ---------------------------------------------------------------------------
// Syntactic monoid: the transformation monoid of the canonical automaton.

struct DfaTransformation {
  std::vector<StateId> map;
  Word witness;  // shortlex-least word realizing `map`
};

struct SyntacticMonoid {
  std::vector<DfaTransformation> elements;
  std::size_t identity = 0;
  detail::Table cayley;                  // cayley[e][f] = e·f (e acts first)
  std::vector<std::size_t> generators;  // letter index -> element

  std::size_t size() const noexcept { return elements.size(); }

  std::size_t multiply(std::size_t e, std::size_t f) const { return cayley[e][f]; }

  std::optional<std::size_t> find(const std::vector<StateId>& map) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i].map == map) return i;
    return std::nullopt;
  }

  /// Class of a word (letters must be in the alphabet).
  std::size_t element_of(std::string_view w, const Alphabet& alphabet) const {
    std::size_t e = identity;
    for (char c : w) e = multiply(e, generators[alphabet.index_or_throw(c)]);
    return e;
  }
};

/// Closure of the identity under right multiplication by letters, in BFS
/// order with letters in alphabet order, so witnesses come out shortlex-least.
inline SyntacticMonoid syntactic_monoid(const Dfa& dfa, const Budgets& budgets = {}) {
  validate(dfa);
  const std::size_t n = dfa.size(), k = dfa.alphabet.size();
  SyntacticMonoid m;
  std::unordered_map<std::vector<StateId>, std::size_t, detail::VectorHash<StateId>> pos;
  std::vector<StateId> id(n);
  for (std::size_t q = 0; q < n; ++q) id[q] = state_id(q);
  pos.emplace(id, 0);
  m.elements.push_back({id, {}});
  std::vector<std::vector<std::size_t>> right(1);
  for (std::size_t i = 0; i < m.elements.size(); ++i) {
    right.resize(m.elements.size());
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<StateId> next(n);
      for (std::size_t q = 0; q < n; ++q) next[q] = dfa.next(m.elements[i].map[q], a);
      auto [it, fresh] = pos.emplace(next, m.elements.size());
      if (fresh) {
        detail::check_element_budget(m.elements.size() + 1, budgets.elements);
        m.elements.push_back({std::move(next), m.elements[i].witness + dfa.alphabet.letter(a)});
      }
      right[i].push_back(it->second);
    }
  }
  for (std::size_t a = 0; a < k; ++a) m.generators.push_back(right[0][a]);

  const std::size_t size = m.size();
  detail::check_table_budget(size, budgets.table_cells);
  m.cayley.assign(size, std::vector<std::uint32_t>(size));
  for (std::size_t e = 0; e < size; ++e)
    for (std::size_t f = 0; f < size; ++f) {
      std::vector<StateId> comp(n);
      for (std::size_t q = 0; q < n; ++q) comp[q] = m.elements[f].map[index(m.elements[e].map[q])];
      m.cayley[e][f] = static_cast<std::uint32_t>(pos.at(comp));
    }
  return m;
}

/// The idempotent among the powers of `e`.
inline std::size_t omega_power(const SyntacticMonoid& m, std::size_t e) {
  std::size_t p = e;
  for (std::size_t k = 0; k <= m.size(); ++k) {
    if (m.multiply(p, p) == p) return p;
    p = m.multiply(p, e);
  }
  throw InconsistencyError("no idempotent power found");
}

// ---------------------------------------------------------------------------
// Shared machinery for the semiring and the lattice algebra: elements are maps
// from canonical-automaton states to interned image languages.

namespace detail {

class ImagePool {
 public:
  explicit ImagePool(const ProfileTable& pt) : pt_(&pt) {}

  std::uint32_t intern(const AtomSet& x) {
    auto [it, fresh] = ids_.emplace(x, static_cast<std::uint32_t>(atoms_.size()));
    if (fresh) atoms_.push_back(x);
    return it->second;
  }

  const AtomSet& operator[](std::uint32_t id) const { return atoms_[id]; }
  const std::vector<AtomSet>& atoms() const noexcept { return atoms_; }

  std::uint32_t quotient(std::uint32_t x, std::size_t letter) {
    std::uint64_t key = (std::uint64_t{x} << 16) | letter;
    if (auto it = quot_.find(key); it != quot_.end()) return it->second;
    std::uint32_t r = intern(quotient_letter(*pt_, atoms_[x], letter));
    quot_.emplace(key, r);
    return r;
  }

  std::uint32_t meet(std::uint32_t x, std::uint32_t y) { return binary(meet_, x, y, true); }
  std::uint32_t join(std::uint32_t x, std::uint32_t y) { return binary(join_, x, y, false); }

 private:
  std::uint32_t binary(std::unordered_map<std::uint64_t, std::uint32_t>& cache, std::uint32_t x,
                       std::uint32_t y, bool is_meet) {
    if (x > y) std::swap(x, y);
    std::uint64_t key = (std::uint64_t{x} << 32) | y;
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    AtomSet r = is_meet ? synlat::meet(atoms_[x], atoms_[y]) : synlat::join(atoms_[x], atoms_[y]);
    std::uint32_t id = intern(r);
    cache.emplace(key, id);
    return id;
  }

  const ProfileTable* pt_;
  std::vector<AtomSet> atoms_;
  std::unordered_map<AtomSet, std::uint32_t, AtomSetHash> ids_;
  std::unordered_map<std::uint64_t, std::uint32_t> quot_, meet_, join_;
};

using ElementMap = std::vector<std::uint32_t>;

}  // namespace detail

/// Elements of a syntactic algebra, each a map from residual states to
/// languages together with one witness form that realizes it.
template <class Witness>
struct ActionElements {
  ProfileTable table;
  std::vector<AtomSet> image_pool;        // distinct image languages
  std::vector<detail::ElementMap> maps;   // maps[e][q] = index into image_pool
  std::vector<Witness> witnesses;

  std::size_t size() const noexcept { return maps.size(); }
  std::size_t state_count() const noexcept { return table.base().size(); }

  const AtomSet& image(std::size_t e, StateId q) const { return image_pool[maps[e][index(q)]]; }

  std::vector<AtomSet> images(std::size_t e) const {
    std::vector<AtomSet> out;
    for (auto id : maps[e]) out.push_back(image_pool[id]);
    return out;
  }

  /// Element whose images are `imgs` (one per residual), if any.
  std::optional<std::size_t> find(const std::vector<AtomSet>& imgs) const {
    for (std::size_t e = 0; e < size(); ++e)
      if (images(e) == imgs) return e;
    return std::nullopt;
  }

  /// Element denoted by a term: its images are the term's action on each residual.
  std::optional<std::size_t> element_of(const Term& t) const {
    std::vector<AtomSet> imgs;
    for (std::size_t q = 0; q < state_count(); ++q)
      imgs.push_back(eval_term(table, residual_atoms(table, state_id(q)), t));
    return find(imgs);
  }
};

namespace detail {

/// Worklist closure. For each element in index order: right products with
/// every letter, then meets (and joins) with every element up to itself. A
/// map found again keeps the smaller of the two witnesses.
template <class Witness, class LetterWitness, class MeetWitness, class JoinWitness>
void close_elements(ActionElements<Witness>& alg, ImagePool& pool, std::vector<ElementMap> seeds,
                    std::vector<Witness> seed_witnesses, bool with_join, std::size_t budget,
                    LetterWitness&& times_letter, MeetWitness&& meet_w, JoinWitness&& join_w) {
  const std::size_t n = alg.state_count(), k = alg.table.alphabet().size();
  std::unordered_map<ElementMap, std::size_t, VectorHash<std::uint32_t>> pos;
  auto add = [&](const ElementMap& m, auto&& make_witness) {
    if (auto it = pos.find(m); it != pos.end()) {
      Witness w = make_witness();
      if (witness_less(w, alg.witnesses[it->second])) alg.witnesses[it->second] = std::move(w);
      return;
    }
    check_element_budget(alg.maps.size() + 1, budget);
    pos.emplace(m, alg.maps.size());
    alg.maps.push_back(m);
    alg.witnesses.push_back(make_witness());
  };
  for (std::size_t i = 0; i < seeds.size(); ++i) add(seeds[i], [&] { return seed_witnesses[i]; });

  for (std::size_t i = 0; i < alg.maps.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      ElementMap m(n);
      for (std::size_t q = 0; q < n; ++q) m[q] = pool.quotient(alg.maps[i][q], a);
      add(m, [&] { return times_letter(alg.witnesses[i], a); });
    }
    for (std::size_t j = 0; j <= i; ++j) {
      ElementMap m(n);
      for (std::size_t q = 0; q < n; ++q) m[q] = pool.meet(alg.maps[i][q], alg.maps[j][q]);
      add(m, [&] { return meet_w(alg.witnesses[j], alg.witnesses[i]); });
      if (!with_join) continue;
      for (std::size_t q = 0; q < n; ++q) m[q] = pool.join(alg.maps[i][q], alg.maps[j][q]);
      add(m, [&] { return join_w(alg.witnesses[j], alg.witnesses[i]); });
    }
  }
  alg.image_pool = pool.atoms();
}

template <class Witness>
Table pointwise_table(const ActionElements<Witness>& alg, ImagePool& pool, bool is_meet) {
  std::unordered_map<ElementMap, std::uint32_t, VectorHash<std::uint32_t>> pos;
  for (std::size_t e = 0; e < alg.size(); ++e) pos.emplace(alg.maps[e], static_cast<std::uint32_t>(e));
  const std::size_t n = alg.state_count();
  Table t(alg.size(), std::vector<std::uint32_t>(alg.size()));
  ElementMap m(n);
  for (std::size_t e = 0; e < alg.size(); ++e)
    for (std::size_t f = 0; f <= e; ++f) {
      for (std::size_t q = 0; q < n; ++q)
        m[q] = is_meet ? pool.meet(alg.maps[e][q], alg.maps[f][q]) : pool.join(alg.maps[e][q], alg.maps[f][q]);
      auto it = pos.find(m);
      if (it == pos.end()) throw InconsistencyError("element set is not closed under pointwise operations");
      t[e][f] = t[f][e] = it->second;
    }
  return t;
}

template <class Witness>
std::vector<std::size_t> seed_indices(const ActionElements<Witness>& alg, const std::vector<ElementMap>& seeds) {
  std::vector<std::size_t> out;
  for (const auto& s : seeds)
    for (std::size_t e = 0; e < alg.size(); ++e)
      if (alg.maps[e] == s) {
        out.push_back(e);
        break;
      }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Syntactic semiring.

struct SyntacticSemiring : ActionElements<MeetForm> {
  detail::Table meet_table;
  detail::Table mul_table;  // mul_table[e][f] = e·f
  std::size_t one = 0;
  std::size_t top = 0;
  std::vector<std::size_t> generators;  // letter index -> element
  HasseDiagram order;                   // e ≤ f iff e ∧ f = e
};

/// Image of an arbitrary intersection of residuals X under element `e`:
/// X = ∩{ r : X ⊆ r } and X∘U = ∩ r∘U over those residuals r.
inline AtomSet semiring_image(const SyntacticSemiring& s, std::size_t e, const AtomSet& x) {
  AtomSet out = top(s.table);
  for (std::size_t r = 0; r < s.state_count(); ++r)
    if (leq(x, residual_atoms(s.table, state_id(r)))) out = meet(out, s.image(e, state_id(r)));
  return out;
}

/// Elements are the distinct residual maps of finite word sets, generated from
/// λ, the letters and ⊤ by right letter products and meets. The product table
/// extends the right factor to intersections of residuals.
inline SyntacticSemiring syntactic_semiring(const ProfileTable& pt, const Dfa& dfa, const Budgets& budgets = {}) {
  if (!(pt.base() == dfa)) throw std::invalid_argument("profile table was built from a different automaton");
  SyntacticSemiring s;
  s.table = pt;
  detail::ImagePool pool(s.table);
  const std::size_t n = dfa.size(), k = dfa.alphabet.size();

  std::vector<std::uint32_t> residual_ids(n);
  for (std::size_t q = 0; q < n; ++q) residual_ids[q] = pool.intern(residual_atoms(s.table, state_id(q)));
  const std::uint32_t top_id = pool.intern(top(s.table));

  std::vector<detail::ElementMap> seeds{residual_ids};
  std::vector<MeetForm> seed_w{MeetForm::word({})};
  for (std::size_t a = 0; a < k; ++a) {
    detail::ElementMap m(n);
    for (std::size_t q = 0; q < n; ++q) m[q] = residual_ids[index(dfa.next(state_id(q), a))];
    seeds.push_back(m);
    seed_w.push_back(MeetForm::word(Word(1, dfa.alphabet.letter(a))));
  }
  seeds.push_back(detail::ElementMap(n, top_id));
  seed_w.push_back(MeetForm::top());

  detail::close_elements(
      s, pool, seeds, seed_w, false, budgets.elements,
      [&](const MeetForm& w, std::size_t a) {
        return multiply_meet_forms(w, MeetForm::word(Word(1, dfa.alphabet.letter(a))));
      },
      [](const MeetForm& x, const MeetForm& y) {
        std::vector<Word> ws = x.words;
        ws.insert(ws.end(), y.words.begin(), y.words.end());
        return MeetForm::of(std::move(ws));
      },
      [](const MeetForm&, const MeetForm&) { return MeetForm::top(); });

  auto idx = detail::seed_indices(s, seeds);
  s.one = idx[0];
  s.generators.assign(idx.begin() + 1, idx.begin() + 1 + static_cast<std::ptrdiff_t>(k));
  s.top = idx.back();

  detail::check_table_budget(s.size(), budgets.table_cells);
  s.meet_table = detail::pointwise_table(s, pool, true);

  // For every image language, the residuals containing it.
  std::vector<std::vector<std::size_t>> above(s.image_pool.size());
  for (std::size_t x = 0; x < s.image_pool.size(); ++x)
    for (std::size_t r = 0; r < n; ++r)
      if (leq(s.image_pool[x], s.image_pool[residual_ids[r]])) above[x].push_back(r);

  std::unordered_map<detail::ElementMap, std::uint32_t, detail::VectorHash<std::uint32_t>> pos;
  for (std::size_t e = 0; e < s.size(); ++e) pos.emplace(s.maps[e], static_cast<std::uint32_t>(e));
  s.mul_table.assign(s.size(), std::vector<std::uint32_t>(s.size()));
  detail::ElementMap m(n);
  for (std::size_t e = 0; e < s.size(); ++e)
    for (std::size_t f = 0; f < s.size(); ++f) {
      for (std::size_t q = 0; q < n; ++q) {
        std::uint32_t acc = top_id;
        for (std::size_t r : above[s.maps[e][q]]) acc = pool.meet(acc, s.maps[f][r]);
        m[q] = acc;
      }
      auto it = pos.find(m);
      if (it == pos.end()) throw InconsistencyError("semiring product left the element set");
      s.mul_table[e][f] = it->second;
    }
  s.image_pool = pool.atoms();
  s.order = hasse_by(s.size(), [&](std::size_t e, std::size_t f) { return s.meet_table[e][f] == e; });
  return s;
}

// ---------------------------------------------------------------------------
// Syntactic lattice algebra.

struct SyntacticLatticeAlgebra : ActionElements<LatticeForm> {
  detail::Table meet_table;
  detail::Table join_table;
  detail::Table mul_table;  // mul_table[e][f] = e·f computed from f's witness
  std::size_t one = 0;
  std::size_t top = 0;
  std::size_t bottom = 0;
  std::vector<std::size_t> generators;  // P: letter index -> element
  HasseDiagram order;
};

/// Image of a language X (any union of intersections of residuals) under the
/// witness of `e`. On residuals this is the element map; elsewhere it can
/// depend on which witness was kept.
inline AtomSet witness_image(const SyntacticLatticeAlgebra& alg, std::size_t e, const AtomSet& x) {
  return eval_form(alg.table, x, alg.witnesses[e]);
}

/// Element of the product of the two witnesses, evaluated on each residual.
inline std::size_t multiply_lattice_elements(const SyntacticLatticeAlgebra& alg, std::size_t e1, std::size_t e2) {
  LatticeForm prod = multiply_lattice_forms(alg.witnesses[e1], alg.witnesses[e2]);
  std::vector<AtomSet> imgs;
  for (std::size_t q = 0; q < alg.state_count(); ++q)
    imgs.push_back(eval_form(alg.table, residual_atoms(alg.table, state_id(q)), prod));
  auto e = alg.find(imgs);
  if (!e) throw InconsistencyError("product of witnesses is not an element of the algebra");
  return *e;
}

/// Elements are the distinct residual maps of lattice forms, generated from
/// λ, the letters, ⊤ and ⊥ by right letter products, meets and joins. Each
/// element keeps the witness it was discovered with.
inline SyntacticLatticeAlgebra syntactic_lattice_algebra(const ProfileTable& pt, const Dfa& dfa,
                                                         const Budgets& budgets = {}) {
  if (!(pt.base() == dfa)) throw std::invalid_argument("profile table was built from a different automaton");
  SyntacticLatticeAlgebra alg;
  alg.table = pt;
  detail::ImagePool pool(alg.table);
  const std::size_t n = dfa.size(), k = dfa.alphabet.size();

  std::vector<std::uint32_t> residual_ids(n);
  for (std::size_t q = 0; q < n; ++q) residual_ids[q] = pool.intern(residual_atoms(alg.table, state_id(q)));

  std::vector<detail::ElementMap> seeds{residual_ids};
  std::vector<LatticeForm> seed_w{LatticeForm::word({})};
  for (std::size_t a = 0; a < k; ++a) {
    detail::ElementMap m(n);
    for (std::size_t q = 0; q < n; ++q) m[q] = residual_ids[index(dfa.next(state_id(q), a))];
    seeds.push_back(m);
    seed_w.push_back(LatticeForm::word(Word(1, dfa.alphabet.letter(a))));
  }
  seeds.push_back(detail::ElementMap(n, pool.intern(top(alg.table))));
  seed_w.push_back(LatticeForm::top());
  seeds.push_back(detail::ElementMap(n, pool.intern(bottom(alg.table))));
  seed_w.push_back(LatticeForm::bottom());

  detail::close_elements(
      alg, pool, seeds, seed_w, true, budgets.elements,
      [&](const LatticeForm& w, std::size_t a) { return multiply_by_word(w, Word(1, dfa.alphabet.letter(a))); },
      [](const LatticeForm& x, const LatticeForm& y) { return lattice_meet(x, y); },
      [](const LatticeForm& x, const LatticeForm& y) { return lattice_join(x, y); });

  auto idx = detail::seed_indices(alg, seeds);
  alg.one = idx[0];
  alg.generators.assign(idx.begin() + 1, idx.begin() + 1 + static_cast<std::ptrdiff_t>(k));
  alg.top = idx[k + 1];
  alg.bottom = idx[k + 2];

  detail::check_table_budget(alg.size(), budgets.table_cells);
  alg.meet_table = detail::pointwise_table(alg, pool, true);
  alg.join_table = detail::pointwise_table(alg, pool, false);

  // (e·f)(q) = e(q)∘W(f): evaluate each witness once per distinct image language.
  std::unordered_map<detail::ElementMap, std::uint32_t, detail::VectorHash<std::uint32_t>> pos;
  for (std::size_t e = 0; e < alg.size(); ++e) pos.emplace(alg.maps[e], static_cast<std::uint32_t>(e));
  std::vector<std::uint32_t> used;
  {
    std::vector<bool> seen(pool.atoms().size(), false);
    for (const auto& m : alg.maps)
      for (auto id : m)
        if (!seen[id]) {
          seen[id] = true;
          used.push_back(id);
        }
  }
  std::vector<std::vector<std::uint32_t>> act(alg.size(), std::vector<std::uint32_t>(pool.atoms().size(), 0));
  for (std::size_t f = 0; f < alg.size(); ++f)
    for (auto id : used) act[f][id] = pool.intern(eval_form(alg.table, pool[id], alg.witnesses[f]));

  alg.mul_table.assign(alg.size(), std::vector<std::uint32_t>(alg.size()));
  detail::ElementMap m(n);
  for (std::size_t e = 0; e < alg.size(); ++e)
    for (std::size_t f = 0; f < alg.size(); ++f) {
      for (std::size_t q = 0; q < n; ++q) m[q] = act[f][alg.maps[e][q]];
      auto it = pos.find(m);
      if (it == pos.end()) throw InconsistencyError("lattice product left the element set");
      alg.mul_table[e][f] = it->second;
    }
  alg.image_pool = pool.atoms();
  alg.order = hasse_by(alg.size(), [&](std::size_t e, std::size_t f) { return alg.meet_table[e][f] == e; });
  return alg;
}

inline HasseDiagram hasse_of_elements(const SyntacticSemiring& s) { return s.order; }
inline HasseDiagram hasse_of_elements(const SyntacticLatticeAlgebra& a) { return a.order; }

// ---------------------------------------------------------------------------
// Lattice-algebra axioms, checked on the operation tables.

struct AxiomViolation {
  std::string axiom;
  std::vector<std::size_t> operands;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;  // first few per axiom
  std::size_t violation_count = 0;
  std::size_t instances_checked = 0;

  bool ok() const noexcept { return violation_count == 0; }

  bool failed(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }
};

/// Checks (K, ∧, ∨, ·, P, ⊥, ⊤, 1): a bounded distributive lattice; a monoid
/// with right zeros ⊥ and ⊤; ⊤·p = ⊤ and ⊥·p = ⊥ for p in P; left
/// distributivity of · over ∧ and ∨ for all elements; right distributivity
/// over P; and K generated as a lattice by the products of elements of P.
inline AxiomReport check_lattice_algebra_axioms(const SyntacticLatticeAlgebra& alg) {
  AxiomReport rep;
  std::unordered_map<std::string, std::size_t> per_axiom;
  auto check = [&](bool holds, const char* axiom, std::initializer_list<std::size_t> ops) {
    ++rep.instances_checked;
    if (holds) return;
    ++rep.violation_count;
    if (per_axiom[axiom]++ < 8) rep.violations.push_back({axiom, std::vector<std::size_t>(ops)});
  };
  const auto& M = alg.meet_table;
  const auto& J = alg.join_table;
  const auto& X = alg.mul_table;
  const std::size_t n = alg.size();
  const std::size_t one = alg.one, top = alg.top, bot = alg.bottom;

  for (std::size_t x = 0; x < n; ++x) {
    check(M[x][x] == x, "meet idempotent", {x});
    check(J[x][x] == x, "join idempotent", {x});
    check(M[x][top] == x && M[top][x] == x, "top is meet unit", {x});
    check(J[x][bot] == x && J[bot][x] == x, "bottom is join unit", {x});
    check(X[x][one] == x && X[one][x] == x, "one is multiplicative unit", {x});
    check(X[x][bot] == bot, "bottom is right zero", {x});
    check(X[x][top] == top, "top is right zero", {x});
    for (std::size_t y = 0; y < n; ++y) {
      check(M[x][y] == M[y][x], "meet commutative", {x, y});
      check(J[x][y] == J[y][x], "join commutative", {x, y});
      check(M[x][J[x][y]] == x, "absorption meet-join", {x, y});
      check(J[x][M[x][y]] == x, "absorption join-meet", {x, y});
      for (std::size_t z = 0; z < n; ++z) {
        check(M[M[x][y]][z] == M[x][M[y][z]], "meet associative", {x, y, z});
        check(J[J[x][y]][z] == J[x][J[y][z]], "join associative", {x, y, z});
        check(M[x][J[y][z]] == J[M[x][y]][M[x][z]], "meet distributes over join", {x, y, z});
        check(J[x][M[y][z]] == M[J[x][y]][J[x][z]], "join distributes over meet", {x, y, z});
        check(X[X[x][y]][z] == X[x][X[y][z]], "multiplication associative", {x, y, z});
        check(X[x][M[y][z]] == M[X[x][y]][X[x][z]], "left distributive over meet", {x, y, z});
        check(X[x][J[y][z]] == J[X[x][y]][X[x][z]], "left distributive over join", {x, y, z});
      }
    }
  }
  for (std::size_t p : alg.generators) {
    check(X[top][p] == top, "top times generator", {p});
    check(X[bot][p] == bot, "bottom times generator", {p});
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        check(X[M[x][y]][p] == M[X[x][p]][X[y][p]], "right distributive over meet by generator", {x, y, p});
        check(X[J[x][y]][p] == J[X[x][p]][X[y][p]], "right distributive over join by generator", {x, y, p});
      }
  }

  // Products of generators, then their lattice closure together with ⊤ and ⊥.
  std::vector<bool> in(n, false);
  std::vector<std::size_t> list;
  auto push = [&](std::size_t e) {
    if (!in[e]) {
      in[e] = true;
      list.push_back(e);
    }
  };
  push(one);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t p : alg.generators) push(X[list[i]][p]);
  push(top);
  push(bot);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      push(M[list[i]][list[j]]);
      push(J[list[i]][list[j]]);
    }
  check(list.size() == n, "generated by products of generators", {list.size(), n});
  return rep;
}

}  // namespace synlat
