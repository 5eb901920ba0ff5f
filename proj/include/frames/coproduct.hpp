#pragma once

// Finite frame coproducts A + B.
//
// Elements are C-ideals of A × B: subsets that are downward closed in the
// product order and closed under joins in each coordinate separately,
// including the empty joins, so (0, b) and (a, 0) always belong.  The tensor
// a ⊗ b is the C-ideal generated by (a, b).  Meets are intersections and
// joins are closures of unions.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frames/frame_map.hpp"
#include "frames/order.hpp"

namespace frames {

struct CoproductLimits {
  std::size_t max_elements = 4096;
};

/// Least C-ideal of a × b containing `seed`.  Bit a_index * |b| + b_index
/// stands for the pair (a_index, b_index).
Bits c_ideal_close(const Frame& a, const Frame& b, Bits seed);

class CoproductFrame {
 public:
  const Frame& left() const noexcept { return left_; }
  const Frame& right() const noexcept { return right_; }
  const Frame& frame() const noexcept { return frame_; }
  std::size_t size() const noexcept { return frame_.size(); }

  /// Closed subsets of left × right; index i is element i of frame().
  /// Sorted by numeric bit value.
  const std::vector<Bits>& elements() const noexcept { return elements_; }

  std::size_t pair_index(Element a, Element b) const { return a * right_.size() + b; }
  Element tensor(Element a, Element b) const { return tensor_[pair_index(a, b)]; }

  Bits close(Bits seed) const;
  std::optional<Element> find(const Bits& closed) const;

 private:
  friend CoproductFrame coproduct(const Frame&, const Frame&, CoproductLimits);
  CoproductFrame(Frame left, Frame right, std::vector<Bits> elements);

  Frame left_;
  Frame right_;
  std::vector<Bits> elements_;
  std::vector<Element> tensor_;
  Frame frame_;
};

/// Generates every join of tensors.  Throws BudgetExceeded past the cap.
CoproductFrame coproduct(const Frame& a, const Frame& b, CoproductLimits limits = {});

/// a ↦ a ⊗ 1 and b ↦ 1 ⊗ b.
std::pair<FrameMap, FrameMap> injections(const CoproductFrame& sum);

/// The arrow sum -> C sending D to ⋁{ f(x) ∧ g(y) : (x, y) ∈ D }.
/// Throws std::invalid_argument unless f : left -> C and g : right -> C.
FrameMap mediate(const CoproductFrame& sum, const FrameMap& f, const FrameMap& g);

/// mediate(1_L, 1_L) on L + L.
FrameMap codiagonal(const CoproductFrame& square);
FrameMap codiagonal(const Frame& frame, CoproductLimits limits = {});

/// f + g : A + A' -> B + B', α ⊗ β ↦ f(α) ⊗ g(β) extended by joins.
FrameMap sum_of_maps(const CoproductFrame& source_sum, const CoproductFrame& target_sum,
                     const FrameMap& f, const FrameMap& g);

/// Whether ∇ ∘ (f + g) agrees with f along the diagonal x ↦ x ⊗ x of the
/// source, i.e. ∇((f + g)(x ⊗ x)) = f(x) for every x.  This holds exactly
/// when f <= g pointwise.
bool order_by_codiagonal(const CoproductFrame& source_square,
                         const CoproductFrame& target_square, const FrameMap& f,
                         const FrameMap& g);
bool order_by_codiagonal(const FrameMap& f, const FrameMap& g, CoproductLimits limits = {});

/// Element count, tensor table and Hasse edges.
std::string format_coproduct(const CoproductFrame& sum);

}  // namespace frames
