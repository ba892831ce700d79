#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxfaces/golden.hpp"

namespace coxfaces {

/// Largest rank the type grammar produces (A8, E8).
inline constexpr int kMaxRank = 8;

/// Default bound on how many group elements may be materialized at once.
inline constexpr std::size_t kDefaultElementCap = 50000;

/// Enumeration cap after applying the COXFACES_CAP environment override.
std::size_t element_cap_from_env();

/// Image of a positive root under a group element: root index plus sign.
///
/// Encoded as (index << 1) | negative so that tables stay int16.
class SignedRoot {
 public:
  constexpr SignedRoot() = default;
  constexpr SignedRoot(int index, bool negative)
      : code_(static_cast<std::int16_t>((index << 1) | (negative ? 1 : 0))) {}
  static constexpr SignedRoot from_code(std::int16_t code) {
    SignedRoot r;
    r.code_ = code;
    return r;
  }

  constexpr int index() const { return code_ >> 1; }
  constexpr bool negative() const { return (code_ & 1) != 0; }
  constexpr std::int16_t code() const { return code_; }
  constexpr SignedRoot negated() const { return from_code(static_cast<std::int16_t>(code_ ^ 1)); }
  /// Applies a sign flip when `flip` is set.
  constexpr SignedRoot flipped_if(bool flip) const {
    return from_code(static_cast<std::int16_t>(code_ ^ (flip ? 1 : 0)));
  }

  friend constexpr bool operator==(SignedRoot, SignedRoot) = default;

 private:
  std::int16_t code_ = 0;
};

/// Bitset over the positive roots {0, ..., N-1}.
class RootSubset {
 public:
  RootSubset() = default;
  explicit RootSubset(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return universe_; }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  int count() const;
  bool empty() const;
  bool is_subset_of(const RootSubset& other) const;
  std::vector<int> indices() const;

  RootSubset& operator|=(const RootSubset& other);
  RootSubset& operator&=(const RootSubset& other);
  friend RootSubset operator|(RootSubset a, const RootSubset& b) { return a |= b; }
  friend RootSubset operator&(RootSubset a, const RootSubset& b) { return a &= b; }
  RootSubset complement() const;

  friend bool operator==(const RootSubset&, const RootSubset&) = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Finite sequence of simple-reflection indices (0-based internally).
struct Word {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// Comma-separated 1-based letters, e.g. "1,2,1"; the empty word is "".
std::string format_word(const Word& word);
/// Inverse of format_word; throws ContractViolation on malformed input.
Word parse_word(std::string_view text, int rank);

/// Subset J of the simple reflections.
class ParabolicSet {
 public:
  constexpr ParabolicSet() = default;
  static constexpr ParabolicSet from_mask(std::uint32_t mask) {
    ParabolicSet j;
    j.mask_ = mask;
    return j;
  }
  static ParabolicSet of(std::initializer_list<int> simples);
  static constexpr ParabolicSet full(int rank) { return from_mask((std::uint32_t{1} << rank) - 1); }
  /// S \ {s}, written <s>.
  static constexpr ParabolicSet all_but(int s, int rank) {
    return from_mask(full(rank).mask_ & ~(std::uint32_t{1} << s));
  }

  constexpr bool contains(int s) const { return (mask_ >> s) & 1U; }
  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  void insert(int s) { mask_ |= std::uint32_t{1} << s; }
  constexpr bool is_subset_of(ParabolicSet other) const { return (mask_ & ~other.mask_) == 0; }

  friend constexpr bool operator==(ParabolicSet, ParabolicSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Images of the simple roots; determines an element uniquely.
struct ElementKey {
  std::array<std::int16_t, kMaxRank> images{};
  friend bool operator==(const ElementKey&, const ElementKey&) = default;
};

struct ElementKeyHash {
  std::size_t operator()(const ElementKey& key) const noexcept;
};

class CoxeterSystem;

/// Group element stored as its signed action on positive-root indices.
///
/// `image[i]` is w(beta_i); `inverse_image[i]` is w^{-1}(beta_i). Length is
/// the number of negative entries in `image`.
class GroupElement {
 public:
  GroupElement() = default;

  int length() const { return length_; }
  std::uint32_t system_id() const { return system_id_; }
  SignedRoot image(int root) const { return SignedRoot::from_code(image_[root]); }
  SignedRoot inverse_image(int root) const { return SignedRoot::from_code(inverse_[root]); }
  bool is_identity() const { return length_ == 0; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.system_id_ == b.system_id_ && a.image_ == b.image_;
  }

 private:
  friend class CoxeterSystem;
  std::uint32_t system_id_ = 0;
  int length_ = 0;
  std::vector<std::int16_t> image_;
  std::vector<std::int16_t> inverse_;
};

enum class CoefficientRing {
  kRational,       ///< integral Cartan matrix
  kGolden,         ///< Q(sqrt 5), stored as Z[phi]
  kCombinatorial,  ///< dihedral I2(m) without coordinates
};

/// A finite Coxeter system with its positive roots and reflection tables.
///
/// Immutable after construction and safe to share between threads.
class CoxeterSystem {
 public:
  const std::string& type_id() const { return type_id_; }
  int rank() const { return rank_; }
  int num_positive_roots() const { return num_roots_; }
  int coxeter_m(int s, int t) const { return coxeter_matrix_[s][t]; }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxeter_matrix_; }
  CoefficientRing coefficient_ring() const { return ring_; }
  /// Root coordinates in the simple-root basis; empty for the combinatorial dihedral model.
  const std::vector<std::vector<Golden>>& positive_roots() const { return roots_; }
  int highest_root() const { return highest_root_; }
  std::uint32_t id() const { return id_; }
  /// Image of positive root `root` under simple reflection `s`.
  SignedRoot simple_action(int s, int root) const { return SignedRoot::from_code(simple_action_[s][root]); }
  /// Simple roots always occupy indices 0..rank-1.
  static constexpr int simple_root_index(int s) { return s; }
  /// Simple reflections whose root appears in the support of `root`.
  ParabolicSet root_support(int root) const { return ParabolicSet::from_mask(support_[root]); }
  bool commute(int s, int t) const { return coxeter_matrix_[s][t] == 2; }

  GroupElement identity() const;
  GroupElement simple(int s) const;
  const GroupElement& longest() const { return longest_; }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  /// b a b^{-1}
  GroupElement conjugate(const GroupElement& a, const GroupElement& b) const;
  GroupElement left_multiply(int s, const GroupElement& w) const;
  GroupElement right_multiply(const GroupElement& w, int s) const;
  void left_multiply_in_place(int s, GroupElement& w) const;
  void right_multiply_in_place(GroupElement& w, int s) const;

  /// l(sw) < l(w)
  bool is_left_descent(const GroupElement& w, int s) const;
  /// l(ws) < l(w)
  bool is_right_descent(const GroupElement& w, int s) const;
  ParabolicSet left_descents(const GroupElement& w) const;
  ParabolicSet right_descents(const GroupElement& w) const;

  /// Left inversion set: positive roots sent negative by w^{-1}.
  RootSubset inversion_set(const GroupElement& w) const;
  /// Right weak order: l(u) + l(u^{-1} v) = l(v).
  bool weak_leq(const GroupElement& u, const GroupElement& v) const;
  /// w = w_J * w^J with w^J free of left descents in J.
  std::pair<GroupElement, GroupElement> parabolic_decompose(const GroupElement& w, ParabolicSet j) const;
  /// First component of parabolic_decompose.
  GroupElement parabolic_component(const GroupElement& w, ParabolicSet j) const;
  /// Minimal representative of the left coset w W_J (no right descents in J).
  GroupElement min_coset_representative(const GroupElement& w, ParabolicSet j) const;
  /// Least upper bound in the right weak order.
  GroupElement weak_join(const GroupElement& u, const GroupElement& v) const;

  Word reduced_word(const GroupElement& w) const;
  GroupElement element_of(const Word& word) const;
  bool is_reduced(const Word& word) const;

  /// Positive roots of the standard parabolic W_J.
  RootSubset parabolic_roots(ParabolicSet j) const;
  bool in_parabolic(const GroupElement& w, ParabolicSet j) const;

  /// Smallest closed superset of `roots`.
  RootSubset closure(const RootSubset& roots) const;
  bool is_closed(const RootSubset& roots) const;
  /// Rebuilds the element whose inversion set is `roots`, if there is one.
  std::optional<GroupElement> element_from_inversion_set(const RootSubset& roots) const;

  ElementKey key(const GroupElement& w) const;

  /// All of W in breadth-first order from e; throws CapExceeded above `cap`.
  std::vector<GroupElement> enumerate_elements(std::size_t cap) const;

  /// Throws ContractViolation unless `w` belongs to this system.
  void require_member(const GroupElement& w) const;

 private:
  friend CoxeterSystem build_coxeter_system(std::string_view type_id);
  CoxeterSystem() = default;
  void finish_construction();
  GroupElement make_element() const;
  void check_simple(int s) const;

  std::string type_id_;
  int rank_ = 0;
  int num_roots_ = 0;
  std::uint32_t id_ = 0;
  CoefficientRing ring_ = CoefficientRing::kRational;
  std::vector<std::vector<int>> coxeter_matrix_;
  std::vector<std::vector<Golden>> roots_;
  std::vector<std::vector<std::int16_t>> simple_action_;
  std::vector<std::uint32_t> support_;
  // between_[i][j] (i < j): roots a*beta_i + b*beta_j with a, b > 0.
  std::vector<std::vector<std::vector<std::int16_t>>> between_;
  int highest_root_ = 0;
  GroupElement longest_;
};

/// Parses and builds "A3", "B4", "D5", "E8", "F4", "G2", "H3", "H4", "I2(7)", ...
CoxeterSystem build_coxeter_system(std::string_view type_id);

/// Join computed directly from an enumerated W (minimal common upper bound).
GroupElement weak_join_by_enumeration(const CoxeterSystem& sys, const GroupElement& u,
                                      const GroupElement& v, const std::vector<GroupElement>& all);

}  // namespace coxfaces
