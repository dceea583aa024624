#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "synlat/bitset.hpp"
#include "synlat/dfa.hpp"
#include "synlat/error.hpp"

namespace synlat {

/// The profile of a word w is the set of states from which w is accepted. Two
/// words with the same profile lie in exactly the same residuals, so every
/// union of intersections of residuals is a union of profile classes. The
/// table holds the realized profiles, i.e. the closure of the final-state set
/// under the letter preimages pre_a(P) = { q : delta(q, a) in P }.
class ProfileTable {
 public:
  const Dfa& base() const noexcept { return dfa_; }
  const Alphabet& alphabet() const noexcept { return dfa_.alphabet; }
  std::size_t size() const noexcept { return profiles_.size(); }
  const Bitset& profile(std::size_t i) const { return profiles_.at(i); }
  const std::vector<Bitset>& profiles() const noexcept { return profiles_; }

  /// Index of pre_a(profile i).
  std::size_t pre(std::size_t letter, std::size_t profile) const { return pre_[letter][profile]; }

  /// Index of profile(λ), the final-state set.
  std::size_t lambda_profile() const noexcept { return 0; }

  /// Index of the profile of `w`.
  std::size_t profile_of(std::string_view w) const {
    std::size_t p = lambda_profile();
    for (std::size_t i = w.size(); i-- > 0;) p = pre(alphabet().index_or_throw(w[i]), p);
    return p;
  }

  std::uint64_t id() const noexcept { return id_; }

  friend ProfileTable build_profile_table(const Dfa& dfa, std::size_t max_profiles);

 private:
  Dfa dfa_;
  std::vector<Bitset> profiles_;
  std::vector<std::vector<std::size_t>> pre_;
  std::uint64_t id_ = 0;
};

inline ProfileTable build_profile_table(const Dfa& dfa, std::size_t max_profiles = Budgets{}.profiles) {
  validate(dfa);
  static std::atomic<std::uint64_t> next_id{1};
  ProfileTable pt;
  pt.dfa_ = dfa;
  pt.id_ = next_id++;
  const std::size_t n = dfa.size();
  const std::size_t k = dfa.alphabet.size();

  Bitset finals(n);
  for (std::size_t q = 0; q < n; ++q) finals.set(q, dfa.finals[q]);

  std::unordered_map<Bitset, std::size_t> index_of{{finals, 0}};
  pt.profiles_.push_back(finals);
  pt.pre_.assign(k, {});
  for (std::size_t i = 0; i < pt.profiles_.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      Bitset pre(n);
      for (std::size_t q = 0; q < n; ++q)
        if (pt.profiles_[i].test(index(dfa.delta[q][a]))) pre.set(q);
      auto [it, fresh] = index_of.emplace(pre, pt.profiles_.size());
      if (fresh) {
        if (pt.profiles_.size() >= max_profiles)
          throw BudgetExceeded("profile table exceeds " + std::to_string(max_profiles) + " profiles");
        pt.profiles_.push_back(std::move(pre));
      }
      pt.pre_[a].push_back(it->second);
    }
  }
  return pt;
}

/// A language in the positive Boolean closure of the residuals, stored as the
/// set of profile classes it contains. Equal languages have equal AtomSets.
struct AtomSet {
  std::uint64_t table = 0;
  Bitset bits;

  bool operator==(const AtomSet&) const = default;
  auto operator<=>(const AtomSet&) const = default;
};

struct AtomSetHash {
  std::size_t operator()(const AtomSet& x) const noexcept { return x.bits.hash() ^ (x.table << 1); }
};

namespace detail {

inline void require_same_table(const AtomSet& x, const AtomSet& y) {
  if (x.table != y.table) throw std::invalid_argument("atom sets belong to different profile tables");
}

inline void require_table(const ProfileTable& pt, const AtomSet& x) {
  if (x.table != pt.id()) throw std::invalid_argument("atom set does not belong to this profile table");
}

}  // namespace detail

inline AtomSet top(const ProfileTable& pt) { return {pt.id(), Bitset::full(pt.size())}; }
inline AtomSet bottom(const ProfileTable& pt) { return {pt.id(), Bitset(pt.size())}; }

inline AtomSet residual_atoms(const ProfileTable& pt, StateId q) {
  if (index(q) >= pt.base().size()) throw std::invalid_argument("state out of range");
  AtomSet x = bottom(pt);
  for (std::size_t i = 0; i < pt.size(); ++i)
    if (pt.profile(i).test(index(q))) x.bits.set(i);
  return x;
}

inline AtomSet meet(const AtomSet& x, const AtomSet& y) {
  detail::require_same_table(x, y);
  return {x.table, x.bits & y.bits};
}

inline AtomSet join(const AtomSet& x, const AtomSet& y) {
  detail::require_same_table(x, y);
  return {x.table, x.bits | y.bits};
}

/// Language inclusion.
inline bool leq(const AtomSet& x, const AtomSet& y) {
  detail::require_same_table(x, y);
  return x.bits.subset_of(y.bits);
}

/// a^-1 X = { P : pre_a(P) in X }.
inline AtomSet quotient_letter(const ProfileTable& pt, const AtomSet& x, std::size_t letter) {
  detail::require_table(pt, x);
  if (letter >= pt.alphabet().size()) throw std::invalid_argument("letter index out of range");
  AtomSet out = bottom(pt);
  for (std::size_t i = 0; i < pt.size(); ++i)
    if (x.bits.test(pt.pre(letter, i))) out.bits.set(i);
  return out;
}

inline AtomSet quotient_letter(const ProfileTable& pt, const AtomSet& x, char letter) {
  return quotient_letter(pt, x, pt.alphabet().index_or_throw(letter));
}

/// w^-1 X, one letter at a time from the left.
inline AtomSet quotient_word(const ProfileTable& pt, const AtomSet& x, std::string_view w) {
  AtomSet out = x;
  for (char c : w) out = quotient_letter(pt, out, c);
  return out;
}

inline bool contains_lambda(const ProfileTable& pt, const AtomSet& x) {
  detail::require_table(pt, x);
  return x.bits.test(pt.lambda_profile());
}

inline bool contains_word(const ProfileTable& pt, const AtomSet& x, std::string_view w) {
  detail::require_table(pt, x);
  return x.bits.test(pt.profile_of(w));
}

}  // namespace synlat
