#pragma once

// Frame spec files and diagram export.
//
// A frame spec is a JSON object
//
//   { "elements": ["0", "a", "1"], "covers": [["0", "a"], ["a", "1"]] }
//
// where every cover is a [lower, upper] pair of element names.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frames/order.hpp"

namespace frames {

struct FrameSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
};

/// Throws InvalidInput on malformed JSON or a wrong shape.
FrameSpec parse_frame_spec(std::string_view text);
FrameSpec read_frame_spec(const std::filesystem::path& path);

/// Builds and validates; throws CycleDetected / NotALattice / NotDistributive.
Frame build_frame(const FrameSpec& spec);

/// Spec of `frame` using its Hasse edges.
FrameSpec spec_of(const Frame& frame);
std::string write_frame_spec(const Frame& frame);

/// Hasse diagram as a DOT digraph, edges lower -> upper, elements in index order.
std::string to_dot(const Frame& frame, std::string_view name = "frame");

/// S, T, chain<n>, diamond, one_point, M3, N5.  M3 and N5 are lattices but
/// not frames; building them fails validation.
std::optional<FrameSpec> builtin_spec(std::string_view name);

/// Builtin name or path to a spec file.
Frame load_frame(std::string_view name_or_path);

}  // namespace frames
