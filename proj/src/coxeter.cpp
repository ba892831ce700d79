#include "coxfaces/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <unordered_map>

#include "coxfaces/errors.hpp"

namespace coxfaces {

// ---------------------------------------------------------------- RootSubset

int RootSubset::count() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool RootSubset::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool RootSubset::is_subset_of(const RootSubset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

std::vector<int> RootSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < universe_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

RootSubset& RootSubset::operator|=(const RootSubset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

RootSubset& RootSubset::operator&=(const RootSubset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

RootSubset RootSubset::complement() const {
  RootSubset out(universe_);
  for (int i = 0; i < universe_; ++i)
    if (!test(i)) out.set(i);
  return out;
}

// ---------------------------------------------------------------- Word

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(word.letters[i] + 1);
  }
  return out;
}

Word parse_word(std::string_view text, int rank) {
  Word word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 1 || value > rank)
      throw ContractViolation("malformed word '" + std::string(text) + "'");
    word.letters.push_back(value - 1);
    pos = end + 1;
    if (end == text.size()) break;
    if (pos == text.size()) throw ContractViolation("malformed word '" + std::string(text) + "'");
  }
  return word;
}

ParabolicSet ParabolicSet::of(std::initializer_list<int> simples) {
  ParabolicSet j;
  for (int s : simples) j.insert(s);
  return j;
}

std::size_t ElementKeyHash::operator()(const ElementKey& key) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : key.images) {
    h ^= static_cast<std::uint16_t>(v);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- CoxeterSystem

void CoxeterSystem::finish_construction() {
  GroupElement w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int s = 0; s < rank_; ++s) {
      if (!is_right_descent(w, s)) {
        right_multiply_in_place(w, s);
        grew = true;
      }
    }
  }
  if (w.length() != num_roots_) throw InternalInvariant("longest element has wrong length");
  longest_ = std::move(w);
}

GroupElement CoxeterSystem::make_element() const {
  GroupElement w;
  w.system_id_ = id_;
  w.image_.resize(num_roots_);
  w.inverse_.resize(num_roots_);
  return w;
}

void CoxeterSystem::check_simple(int s) const {
  if (s < 0 || s >= rank_) throw ContractViolation("simple index out of range");
}

void CoxeterSystem::require_member(const GroupElement& w) const {
  if (w.system_id_ != id_) throw ContractViolation("element belongs to a different Coxeter system");
}

GroupElement CoxeterSystem::identity() const {
  GroupElement w = make_element();
  for (int i = 0; i < num_roots_; ++i) w.image_[i] = w.inverse_[i] = SignedRoot(i, false).code();
  return w;
}

GroupElement CoxeterSystem::simple(int s) const {
  check_simple(s);
  GroupElement w = make_element();
  w.image_ = simple_action_[s];
  w.inverse_ = simple_action_[s];
  w.length_ = 1;
  return w;
}

GroupElement CoxeterSystem::multiply(const GroupElement& a, const GroupElement& b) const {
  require_member(a);
  require_member(b);
  GroupElement w = make_element();
  int length = 0;
  for (int i = 0; i < num_roots_; ++i) {
    const SignedRoot bi = b.image(i);
    const SignedRoot r = a.image(bi.index()).flipped_if(bi.negative());
    w.image_[i] = r.code();
    length += r.negative() ? 1 : 0;
    const SignedRoot ai = a.inverse_image(i);
    w.inverse_[i] = b.inverse_image(ai.index()).flipped_if(ai.negative()).code();
  }
  w.length_ = length;
  return w;
}

GroupElement CoxeterSystem::inverse(const GroupElement& a) const {
  require_member(a);
  GroupElement w = a;
  std::swap(w.image_, w.inverse_);
  return w;
}

GroupElement CoxeterSystem::conjugate(const GroupElement& a, const GroupElement& b) const {
  return multiply(multiply(b, a), inverse(b));
}

void CoxeterSystem::left_multiply_in_place(int s, GroupElement& w) const {
  require_member(w);
  check_simple(s);
  const bool descent = is_left_descent(w, s);
  const auto& act = simple_action_[s];
  // (sw)(beta_i) = s(w beta_i)
  for (auto& code : w.image_) {
    const SignedRoot r = SignedRoot::from_code(code);
    code = SignedRoot::from_code(act[r.index()]).flipped_if(r.negative()).code();
  }
  // (sw)^{-1}(beta_i) = w^{-1}(s beta_i)
  thread_local std::vector<std::int16_t> scratch;
  scratch = w.inverse_;
  for (int i = 0; i < num_roots_; ++i) {
    const SignedRoot si = SignedRoot::from_code(act[i]);
    w.inverse_[i] = SignedRoot::from_code(scratch[si.index()]).flipped_if(si.negative()).code();
  }
  w.length_ += descent ? -1 : 1;
}

void CoxeterSystem::right_multiply_in_place(GroupElement& w, int s) const {
  require_member(w);
  check_simple(s);
  const bool descent = is_right_descent(w, s);
  const auto& act = simple_action_[s];
  // (ws)(beta_i) = w(s beta_i)
  thread_local std::vector<std::int16_t> scratch;
  scratch = w.image_;
  for (int i = 0; i < num_roots_; ++i) {
    const SignedRoot si = SignedRoot::from_code(act[i]);
    w.image_[i] = SignedRoot::from_code(scratch[si.index()]).flipped_if(si.negative()).code();
  }
  // (ws)^{-1}(beta_i) = s(w^{-1} beta_i)
  for (auto& code : w.inverse_) {
    const SignedRoot r = SignedRoot::from_code(code);
    code = SignedRoot::from_code(act[r.index()]).flipped_if(r.negative()).code();
  }
  w.length_ += descent ? -1 : 1;
}

GroupElement CoxeterSystem::left_multiply(int s, const GroupElement& w) const {
  GroupElement out = w;
  left_multiply_in_place(s, out);
  return out;
}

GroupElement CoxeterSystem::right_multiply(const GroupElement& w, int s) const {
  GroupElement out = w;
  right_multiply_in_place(out, s);
  return out;
}

bool CoxeterSystem::is_left_descent(const GroupElement& w, int s) const {
  return w.inverse_image(simple_root_index(s)).negative();
}

bool CoxeterSystem::is_right_descent(const GroupElement& w, int s) const {
  return w.image(simple_root_index(s)).negative();
}

ParabolicSet CoxeterSystem::left_descents(const GroupElement& w) const {
  ParabolicSet d;
  for (int s = 0; s < rank_; ++s)
    if (is_left_descent(w, s)) d.insert(s);
  return d;
}

ParabolicSet CoxeterSystem::right_descents(const GroupElement& w) const {
  ParabolicSet d;
  for (int s = 0; s < rank_; ++s)
    if (is_right_descent(w, s)) d.insert(s);
  return d;
}

RootSubset CoxeterSystem::inversion_set(const GroupElement& w) const {
  require_member(w);
  RootSubset out(num_roots_);
  for (int i = 0; i < num_roots_; ++i)
    if (w.inverse_image(i).negative()) out.set(i);
  return out;
}

bool CoxeterSystem::weak_leq(const GroupElement& u, const GroupElement& v) const {
  return u.length() + multiply(inverse(u), v).length() == v.length();
}

std::pair<GroupElement, GroupElement> CoxeterSystem::parabolic_decompose(const GroupElement& w,
                                                                         ParabolicSet j) const {
  require_member(w);
  GroupElement head = identity();
  GroupElement rest = w;
  for (;;) {
    int found = -1;
    for (int s = 0; s < rank_ && found < 0; ++s)
      if (j.contains(s) && is_left_descent(rest, s)) found = s;
    if (found < 0) break;
    left_multiply_in_place(found, rest);
    right_multiply_in_place(head, found);
  }
  return {std::move(head), std::move(rest)};
}

GroupElement CoxeterSystem::parabolic_component(const GroupElement& w, ParabolicSet j) const {
  return parabolic_decompose(w, j).first;
}

GroupElement CoxeterSystem::min_coset_representative(const GroupElement& w, ParabolicSet j) const {
  GroupElement r = w;
  for (;;) {
    int found = -1;
    for (int s = 0; s < rank_ && found < 0; ++s)
      if (j.contains(s) && is_right_descent(r, s)) found = s;
    if (found < 0) return r;
    right_multiply_in_place(r, found);
  }
}

GroupElement CoxeterSystem::weak_join(const GroupElement& u, const GroupElement& v) const {
  require_member(u);
  require_member(v);
  const RootSubset target = closure(inversion_set(u) | inversion_set(v));
  if (auto joined = element_from_inversion_set(target)) return *std::move(joined);
  // Closure of the union was not an inversion set; fall back to the Hasse join.
  const auto all = enumerate_elements(element_cap_from_env());
  return weak_join_by_enumeration(*this, u, v, all);
}

Word CoxeterSystem::reduced_word(const GroupElement& w) const {
  require_member(w);
  Word word;
  GroupElement rest = w;
  while (rest.length() > 0) {
    int s = 0;
    while (!is_left_descent(rest, s)) ++s;
    word.letters.push_back(s);
    left_multiply_in_place(s, rest);
  }
  return word;
}

GroupElement CoxeterSystem::element_of(const Word& word) const {
  GroupElement w = identity();
  for (int s : word.letters) right_multiply_in_place(w, s);
  return w;
}

bool CoxeterSystem::is_reduced(const Word& word) const {
  return element_of(word).length() == static_cast<int>(word.size());
}

RootSubset CoxeterSystem::parabolic_roots(ParabolicSet j) const {
  RootSubset out(num_roots_);
  for (int i = 0; i < num_roots_; ++i)
    if (root_support(i).is_subset_of(j)) out.set(i);
  return out;
}

bool CoxeterSystem::in_parabolic(const GroupElement& w, ParabolicSet j) const {
  for (int i = 0; i < num_roots_; ++i)
    if (w.inverse_image(i).negative() && !root_support(i).is_subset_of(j)) return false;
  return true;
}

RootSubset CoxeterSystem::closure(const RootSubset& roots) const {
  RootSubset out = roots;
  if (ring_ == CoefficientRing::kCombinatorial) {
    // Positive combinations of two lines are exactly the lines strictly between them.
    const int m = num_roots_;
    auto angle_of = [m](int idx) { return idx == 0 ? 0 : (idx == 1 ? m - 1 : idx - 1); };
    auto index_of = [m](int k) { return k == 0 ? 0 : (k == m - 1 ? 1 : k + 1); };
    int lo = m, hi = -1;
    for (int i : roots.indices()) {
      lo = std::min(lo, angle_of(i));
      hi = std::max(hi, angle_of(i));
    }
    for (int k = lo + 1; k < hi; ++k) out.set(index_of(k));
    return out;
  }
  std::vector<int> members = roots.indices();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const int i = std::min(members[a], members[b]);
      const int j = std::max(members[a], members[b]);
      for (int k : between_[i][j]) {
        if (!out.test(k)) {
          out.set(k);
          members.push_back(k);
        }
      }
    }
  }
  return out;
}

bool CoxeterSystem::is_closed(const RootSubset& roots) const { return closure(roots) == roots; }

std::optional<GroupElement> CoxeterSystem::element_from_inversion_set(const RootSubset& roots) const {
  RootSubset rest = roots;
  GroupElement w = identity();
  int remaining = rest.count();
  while (remaining > 0) {
    int s = 0;
    while (s < rank_ && !rest.test(simple_root_index(s))) ++s;
    if (s == rank_) return std::nullopt;
    RootSubset next(num_roots_);
    for (int i : rest.indices()) {
      if (i == simple_root_index(s)) continue;
      const SignedRoot r = simple_action(s, i);
      if (r.negative()) return std::nullopt;
      next.set(r.index());
    }
    rest = std::move(next);
    --remaining;
    right_multiply_in_place(w, s);
  }
  if (!(inversion_set(w) == roots)) return std::nullopt;
  return w;
}

ElementKey CoxeterSystem::key(const GroupElement& w) const {
  ElementKey key;
  for (int s = 0; s < rank_; ++s) key.images[s] = w.image_[simple_root_index(s)];
  return key;
}

std::vector<GroupElement> CoxeterSystem::enumerate_elements(std::size_t cap) const {
  std::vector<GroupElement> all;
  std::unordered_map<ElementKey, int, ElementKeyHash> seen;
  all.push_back(identity());
  seen.emplace(key(all.back()), 0);
  for (std::size_t head = 0; head < all.size(); ++head) {
    for (int s = 0; s < rank_; ++s) {
      GroupElement next = right_multiply(all[head], s);
      if (seen.emplace(key(next), static_cast<int>(all.size())).second) {
        if (all.size() >= cap)
          throw CapExceeded(type_id_ + " has more than " + std::to_string(cap) + " elements");
        all.push_back(std::move(next));
      }
    }
  }
  return all;
}

GroupElement weak_join_by_enumeration(const CoxeterSystem& sys, const GroupElement& u,
                                      const GroupElement& v, const std::vector<GroupElement>& all) {
  const RootSubset need = sys.inversion_set(u) | sys.inversion_set(v);
  const GroupElement* best = nullptr;
  std::vector<const GroupElement*> uppers;
  for (const auto& z : all) {
    if (!need.is_subset_of(sys.inversion_set(z))) continue;
    uppers.push_back(&z);
    if (best == nullptr || z.length() < best->length()) best = &z;
  }
  if (best == nullptr) throw InternalInvariant("no common upper bound; enumeration is incomplete");
  const RootSubset best_inv = sys.inversion_set(*best);
  for (const auto* z : uppers)
    if (!best_inv.is_subset_of(sys.inversion_set(*z)))
      throw InternalInvariant("weak order join is not unique");
  return *best;
}

}  // namespace coxfaces
