#pragma once

// Canonical forms for finite posets (and therefore for frames, whose lattice
// structure is determined by the order).

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "frames/order.hpp"

namespace frames {

/// Equal iff the underlying orders are isomorphic.
struct Certificate {
  std::size_t size = 0;
  std::vector<bool> bits;

  /// "<size>:<hex>", usable as a single whitespace-free token.
  std::string to_string() const;

  auto operator<=>(const Certificate&) const = default;
  bool operator==(const Certificate&) const = default;
};

struct CanonicalLabeling {
  Certificate certificate;
  /// order[k] is the element placed at canonical position k.
  std::vector<Element> order;
};

/// Backtracking over (rank, degree, neighbourhood-colour) refined cells,
/// minimising the relation bit string.
CanonicalLabeling canonical_labeling(const Poset& poset);

Certificate canonical_form(const Poset& poset);
Certificate canonical_form(const Frame& frame);

bool iso(const Poset& a, const Poset& b);
bool iso(const Frame& a, const Frame& b);

/// mapping[x] in b for each x in a, or nullopt if not isomorphic.
std::optional<std::vector<Element>> find_isomorphism(const Poset& a, const Poset& b);

}  // namespace frames
