#pragma once

// Frame homomorphism enumeration and the constructions built on hom-sets:
// points, endomorphisms, automorphisms, the pointwise-ordered frame of
// arrows out of the Sierpinski frame, and generator-separation witnesses.

#include <optional>
#include <string>
#include <vector>

#include "frames/frame_map.hpp"
#include "frames/order.hpp"

namespace frames {

struct SearchLimits {
  /// Largest source or target frame accepted by the search.
  std::size_t max_elements = 12;
};

/// All frame maps source -> target with the pointwise order
/// p <= q  iff  p(x) <= q(x) for every x.
class HomSet {
 public:
  HomSet(Frame source, Frame target, std::vector<FrameMap> maps);

  const Frame& source() const noexcept { return source_; }
  const Frame& target() const noexcept { return target_; }
  const std::vector<FrameMap>& maps() const noexcept { return maps_; }
  std::size_t size() const noexcept { return maps_.size(); }
  const FrameMap& operator[](std::size_t i) const { return maps_[i]; }

  bool leq(std::size_t i, std::size_t j) const { return order_[i].test(j); }
  const std::vector<Bits>& order() const noexcept { return order_; }

  std::optional<std::size_t> find(const FrameMap& map) const;

 private:
  Frame source_;
  Frame target_;
  std::vector<FrameMap> maps_;
  std::vector<Bits> order_;
};

/// Pointwise order matrix: row i has bit j iff maps[i] <= maps[j].
std::vector<Bits> hom_order(const std::vector<FrameMap>& maps);

/// Backtracking over source elements in linear-extension order, candidate
/// images in ascending index order.  Output order is deterministic.
/// Throws BudgetExceeded if either frame exceeds `limits`.
HomSet enumerate_homs(const Frame& source, const Frame& target, SearchLimits limits = {});

/// Frame maps frame -> T.
HomSet points(const Frame& frame, SearchLimits limits = {});
HomSet endomorphisms(const Frame& frame, SearchLimits limits = {});
/// Endomorphisms with a two-sided inverse frame map.
HomSet automorphisms(const Frame& frame, SearchLimits limits = {});

struct Reconstruction {
  HomSet arrows;          ///< Arr<S, L>
  Frame frame;            ///< arrows under the pointwise order
  FrameMap evaluation;    ///< p ↦ p(a), frame -> L
  FrameMap inverse;       ///< l ↦ (a ↦ l), L -> frame
};

/// Rebuilds L as the frame of arrows S -> L and verifies that evaluation at
/// the middle element of S is a frame isomorphism.  Throws DegenerateFrame if
/// 0 = 1 in L.
Reconstruction arr_s_frame(const Frame& frame, SearchLimits limits = {});

/// An arrow n : probe -> f.source() with f∘n != h∘n, or nullopt.  When the
/// probe is the three-element chain the direct construction a ↦ x, for some x
/// with f(x) != h(x), is tried first.  Throws std::invalid_argument unless f
/// and h are unequal and parallel.
std::optional<FrameMap> separating_arrow(const Frame& probe, const FrameMap& f,
                                         const FrameMap& h, SearchLimits limits = {});

/// A named finite family of frames standing in for "all frames".
struct Corpus {
  std::string id;
  std::vector<Frame> frames;
};

struct GeneratorWitness {
  std::size_t source_index;  ///< into Corpus::frames
  std::size_t target_index;
  FrameMap f;
  FrameMap h;
};

struct GeneratorResult {
  bool generator = false;
  std::string corpus_id;
  std::optional<GeneratorWitness> witness;
};

/// True iff the probe separates every unequal parallel pair between corpus
/// members.  Throws std::invalid_argument for an empty corpus.
GeneratorResult corpus_generator(const Frame& probe, const Corpus& corpus,
                                 SearchLimits limits = {});

/// "map_i: x↦y, ..." lines followed by the order matrix.
std::string format_homset(const HomSet& homs);

}  // namespace frames
