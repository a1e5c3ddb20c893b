#ifndef CLW_SETS_HPP
#define CLW_SETS_HPP

#include <cstdint>
#include <vector>

namespace clw {

using StateId = int;

/// A set of state ids. States 0..63 live in an inline word, so on
/// desk-scale carriers all set operations are branch-light single-word
/// arithmetic; larger carriers (unravelings) spill into `ext_`. The spill
/// is kept free of trailing zero words, which makes equality and the
/// ordering used to canonicalize families purely structural.
class StateSet {
 public:
  StateSet() = default;

  static StateSet single(StateId s) {
    StateSet r;
    r.insert(s);
    return r;
  }

  /// {0, ..., n_states-1}
  static StateSet full(int n_states) {
    StateSet r;
    for (StateId s = 0; s < n_states; ++s) r.insert(s);
    return r;
  }

  /// Interprets `bits` as membership of states 0..63.
  static StateSet from_word(std::uint64_t bits) {
    StateSet r;
    r.w0_ = bits;
    return r;
  }

  std::uint64_t word0() const { return w0_; }

  bool contains(StateId s) const {
    if (s < 64) return (w0_ >> s) & 1u;
    std::size_t w = static_cast<std::size_t>(s / 64) - 1;
    return w < ext_.size() && ((ext_[w] >> (s % 64)) & 1u);
  }

  void insert(StateId s) {
    if (s < 64) {
      w0_ |= std::uint64_t{1} << s;
      return;
    }
    std::size_t w = static_cast<std::size_t>(s / 64) - 1;
    if (ext_.size() <= w) ext_.resize(w + 1, 0);
    ext_[w] |= std::uint64_t{1} << (s % 64);
  }

  void erase(StateId s) {
    if (s < 64) {
      w0_ &= ~(std::uint64_t{1} << s);
      return;
    }
    std::size_t w = static_cast<std::size_t>(s / 64) - 1;
    if (w < ext_.size()) {
      ext_[w] &= ~(std::uint64_t{1} << (s % 64));
      normalize();
    }
  }

  bool empty() const { return w0_ == 0 && ext_.empty(); }

  int size() const {
    int n = popcount(w0_);
    for (auto w : ext_) n += popcount(w);
    return n;
  }

  bool is_singleton() const { return size() == 1; }

  StateSet united(const StateSet& o) const {
    StateSet r(*this);
    r.unite_in(o);
    return r;
  }

  void unite_in(const StateSet& o) {
    w0_ |= o.w0_;
    if (!o.ext_.empty()) {
      if (ext_.size() < o.ext_.size()) ext_.resize(o.ext_.size(), 0);
      for (std::size_t i = 0; i < o.ext_.size(); ++i) ext_[i] |= o.ext_[i];
    }
  }

  StateSet intersected(const StateSet& o) const {
    StateSet r;
    r.w0_ = w0_ & o.w0_;
    std::size_t n = ext_.size() < o.ext_.size() ? ext_.size() : o.ext_.size();
    if (n > 0) {
      r.ext_.resize(n);
      for (std::size_t i = 0; i < n; ++i) r.ext_[i] = ext_[i] & o.ext_[i];
      r.normalize();
    }
    return r;
  }

  StateSet minus(const StateSet& o) const {
    StateSet r(*this);
    r.w0_ &= ~o.w0_;
    std::size_t n = r.ext_.size() < o.ext_.size() ? r.ext_.size() : o.ext_.size();
    for (std::size_t i = 0; i < n; ++i) r.ext_[i] &= ~o.ext_[i];
    r.normalize();
    return r;
  }

  bool subset_of(const StateSet& o) const {
    if (w0_ & ~o.w0_) return false;
    if (ext_.size() > o.ext_.size()) return false;  // normalized
    for (std::size_t i = 0; i < ext_.size(); ++i)
      if (ext_[i] & ~o.ext_[i]) return false;
    return true;
  }

  bool intersects(const StateSet& o) const {
    if (w0_ & o.w0_) return true;
    std::size_t n = ext_.size() < o.ext_.size() ? ext_.size() : o.ext_.size();
    for (std::size_t i = 0; i < n; ++i)
      if (ext_[i] & o.ext_[i]) return true;
    return false;
  }

  std::vector<StateId> to_vector() const {
    std::vector<StateId> v;
    for_each([&](StateId s) { v.push_back(s); });
    return v;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    scan_word(w0_, 0, fn);
    for (std::size_t i = 0; i < ext_.size(); ++i)
      scan_word(ext_[i], 64 * (static_cast<int>(i) + 1), fn);
  }

  friend bool operator==(const StateSet& a, const StateSet& b) {
    return a.w0_ == b.w0_ && a.ext_ == b.ext_;
  }
  friend bool operator!=(const StateSet& a, const StateSet& b) {
    return !(a == b);
  }

  // Numeric order on the underlying bit string; any total order works for
  // canonicalizing families, this one is cheap and stable.
  friend bool operator<(const StateSet& a, const StateSet& b) {
    if (a.ext_.size() != b.ext_.size()) return a.ext_.size() < b.ext_.size();
    for (std::size_t i = a.ext_.size(); i-- > 0;)
      if (a.ext_[i] != b.ext_[i]) return a.ext_[i] < b.ext_[i];
    return a.w0_ < b.w0_;
  }

 private:
  static int popcount(std::uint64_t w) { return __builtin_popcountll(w); }

  template <class Fn>
  static void scan_word(std::uint64_t w, int base, Fn&& fn) {
    while (w) {
      int b = __builtin_ctzll(w);
      fn(base + b);
      w &= w - 1;
    }
  }

  void normalize() {
    while (!ext_.empty() && ext_.back() == 0) ext_.pop_back();
  }

  std::uint64_t w0_ = 0;
  std::vector<std::uint64_t> ext_;
};

/// A canonical (sorted, deduplicated) family of state sets. Structural
/// equality of two families then coincides with set-of-sets equality.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::vector<StateSet> members) : members_(std::move(members)) {
    canonicalize();
  }

  void insert(StateSet s) {
    auto it = lower_bound(s);
    if (it == members_.end() || !(*it == s)) members_.insert(it, std::move(s));
  }

  bool erase(const StateSet& s) {
    auto it = lower_bound(s);
    if (it != members_.end() && *it == s) {
      members_.erase(it);
      return true;
    }
    return false;
  }

  bool contains(const StateSet& s) const {
    auto it = lower_bound(s);
    return it != members_.end() && *it == s;
  }

  bool contains_empty_set() const {
    return !members_.empty() && members_.front().empty();
  }

  bool empty() const { return members_.empty(); }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<StateSet>& members() const { return members_; }

  StateSet union_all() const {
    StateSet u;
    for (const auto& m : members_) u.unite_in(m);
    return u;
  }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.members_ == b.members_;
  }
  friend bool operator!=(const SetFamily& a, const SetFamily& b) {
    return !(a == b);
  }

 private:
  std::vector<StateSet>::const_iterator lower_bound(const StateSet& s) const {
    auto lo = members_.begin(), hi = members_.end();
    while (lo != hi) {
      auto mid = lo + (hi - lo) / 2;
      if (*mid < s)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  }
  std::vector<StateSet>::iterator lower_bound(const StateSet& s) {
    auto c = static_cast<const SetFamily*>(this)->lower_bound(s);
    return members_.begin() + (c - members_.cbegin());
  }

  void canonicalize() {
    for (std::size_t i = 1; i < members_.size(); ++i)
      for (std::size_t j = i; j > 0 && members_[j] < members_[j - 1]; --j)
        std::swap(members_[j], members_[j - 1]);
    std::size_t out = 0;
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (out == 0 || !(members_[i] == members_[out - 1])) members_[out++] = members_[i];
    members_.resize(out);
  }

  std::vector<StateSet> members_;
};

}  // namespace clw

#endif
