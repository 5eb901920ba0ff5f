#pragma once

#include <span>
#include <string>
#include <vector>

#include "frames/order.hpp"

namespace frames {

struct MapViolation {
  enum class Kind { Bottom, Top, Meet, Join, Monotone };
  Kind kind;
  Element x = 0;
  Element y = 0;
};

/// Result of checking a candidate map against the frame-arrow conditions.
/// Lists every violated condition; empty means valid.
struct MapReport {
  std::vector<MapViolation> violations;

  bool valid() const noexcept { return violations.empty(); }
  std::string describe(const Frame& source) const;
};

/// Checks 0 ↦ 0, 1 ↦ 1, binary meets, binary joins and monotonicity.
/// Throws std::invalid_argument if `image` is not a total function into
/// `target`.
MapReport check_frame_map(const Frame& source, const Frame& target,
                          std::span<const Element> image);

/// A validated frame homomorphism.
class FrameMap {
 public:
  /// Throws NotAFrameMap if any condition fails.
  FrameMap(Frame source, Frame target, std::vector<Element> image);

  /// For callers that have already established validity (search results,
  /// compositions).  No checks.
  static FrameMap from_verified(Frame source, Frame target, std::vector<Element> image);

  static FrameMap identity(const Frame& frame);

  const Frame& source() const noexcept { return source_; }
  const Frame& target() const noexcept { return target_; }
  const std::vector<Element>& image() const noexcept { return image_; }
  Element operator()(Element x) const { return image_[x]; }

  /// Bijective with a frame-map inverse.
  bool invertible() const;

  /// "0↦0, a↦1, 1↦1" in source index order.
  std::string to_string() const;

  bool operator==(const FrameMap& other) const;

 private:
  struct Trusted {};
  FrameMap(Trusted, Frame source, Frame target, std::vector<Element> image);

  Frame source_;
  Frame target_;
  std::vector<Element> image_;
};

/// outer ∘ inner.  Throws std::invalid_argument unless inner.target() == outer.source().
FrameMap compose(const FrameMap& outer, const FrameMap& inner);

}  // namespace frames
