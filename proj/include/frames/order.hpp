#pragma once

// Finite posets, lattices and frames.
//
// Elements are identified by index; labels are presentation only.  A Frame is
// a finite bounded distributive lattice: for finite carriers, arbitrary joins
// reduce to iterated binary joins plus the empty join (bottom), so the
// infinite distributive law collapses to x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z).

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "frames/errors.hpp"

namespace frames {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// True iff `a` is numerically smaller than `b` (bit i has weight 2^i).
bool numeric_less(const Bits& a, const Bits& b);

class Poset {
 public:
  Poset() = default;

  /// `leq[x][y]` is x <= y.  Throws InvalidInput unless the relation is a
  /// partial order and the labels are unique.
  Poset(std::vector<std::string> labels, const std::vector<Bits>& leq);

  std::size_t size() const noexcept { return labels_.size(); }
  bool leq(Element x, Element y) const { return down_[y].test(x); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }

  /// {y : y <= x}
  const Bits& down(Element x) const { return down_[x]; }
  /// {y : x <= y}
  const Bits& up(Element x) const { return up_[x]; }

  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> index_of(std::string_view label) const;

  /// Hasse edges (lower, upper), sorted.
  std::vector<std::pair<Element, Element>> covers() const;

  /// Deterministic linear extension: by number of elements below, then index.
  std::vector<Element> linear_extension() const;

  bool operator==(const Poset& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Bits> down_;
  std::vector<Bits> up_;
};

/// Reflexive-transitive closure of `edges` over `n` elements.  Throws
/// CycleDetected (named with `labels`) if the edges are not acyclic.
std::vector<Bits> order_closure(std::size_t n,
                                std::span<const std::pair<Element, Element>> edges,
                                std::span<const std::string> labels);

/// Poset with meet/join tables computed from its order.
class Lattice {
 public:
  /// Throws NotALattice with the offending pair.
  explicit Lattice(Poset poset);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  bool leq(Element x, Element y) const { return poset_.leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  const std::string& label(Element x) const { return poset_.label(x); }

 private:
  Poset poset_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

Lattice lattice_tables(Poset poset);

/// Lexicographically first triple (x, y, z) with x∧(y∨z) != (x∧y)∨(x∧z),
/// or nullopt if the lattice is distributive.
std::optional<std::array<Element, 3>> distributivity_violation(const Lattice& lattice);

/// A finite frame.  Immutable; copies share the underlying tables.
class Frame {
 public:
  /// Throws NotDistributive with a witness triple.
  explicit Frame(Lattice lattice);

  const Lattice& lattice() const noexcept { return *lattice_; }
  const Poset& poset() const noexcept { return lattice_->poset(); }
  std::size_t size() const noexcept { return lattice_->size(); }
  bool leq(Element x, Element y) const { return lattice_->leq(x, y); }
  bool less(Element x, Element y) const { return poset().less(x, y); }
  Element meet(Element x, Element y) const { return lattice_->meet(x, y); }
  Element join(Element x, Element y) const { return lattice_->join(x, y); }
  Element bottom() const noexcept { return lattice_->bottom(); }
  Element top() const noexcept { return lattice_->top(); }
  bool degenerate() const noexcept { return bottom() == top(); }
  const std::string& label(Element x) const { return lattice_->label(x); }
  std::optional<Element> index_of(std::string_view label) const {
    return poset().index_of(label);
  }

  /// Join of an arbitrary subset; the empty join is bottom.
  Element join_all(std::span<const Element> xs) const;
  Element join_all(const Bits& xs) const;
  /// Meet of an arbitrary subset; the empty meet is top.
  Element meet_all(std::span<const Element> xs) const;

  /// Same order and labels.
  bool operator==(const Frame& other) const;
  bool same_object(const Frame& other) const noexcept { return lattice_ == other.lattice_; }

 private:
  std::shared_ptr<const Lattice> lattice_;
};

/// Frame whose order is the reflexive-transitive closure of `covers`.
Frame frame_from_covers(std::vector<std::string> labels,
                        std::span<const std::pair<std::string, std::string>> covers);

/// All downward-closed subsets of `poset`, sorted by numeric bit value.
std::vector<Bits> downsets(const Poset& poset);

/// Frame of downsets of `poset` under inclusion.
Frame downset_frame(const Poset& poset);

/// Nonzero elements that are not the join of strictly smaller elements.
Poset join_irreducibles(const Frame& frame);

/// Cartesian product with the componentwise order.
Poset product(const Poset& a, const Poset& b);

enum class Standard { T, S, Chain, Diamond, OnePoint };

/// `n` is only read for Standard::Chain (n >= 1).
Frame standard_frame(Standard which, std::size_t n = 0);

inline Frame two_point() { return standard_frame(Standard::T); }
inline Frame sierpinski() { return standard_frame(Standard::S); }
inline Frame chain(std::size_t n) { return standard_frame(Standard::Chain, n); }
inline Frame diamond() { return standard_frame(Standard::Diamond); }
inline Frame one_point() { return standard_frame(Standard::OnePoint); }

}  // namespace frames
