#include "frames/frame_map.hpp"

#include <stdexcept>

namespace frames {

std::string MapReport::describe(const Frame& source) const {
  if (valid()) return "VALID";
  std::string out = "INVALID";
  for (const auto& v : violations) {
    out += "\n  ";
    switch (v.kind) {
      case MapViolation::Kind::Bottom:
        out += "bottom not preserved";
        continue;
      case MapViolation::Kind::Top:
        out += "top not preserved";
        continue;
      case MapViolation::Kind::Meet:
        out += "meet not preserved at";
        break;
      case MapViolation::Kind::Join:
        out += "join not preserved at";
        break;
      case MapViolation::Kind::Monotone:
        out += "monotonicity fails at";
        break;
    }
    out += " (" + source.label(v.x) + ", " + source.label(v.y) + ")";
  }
  return out;
}

MapReport check_frame_map(const Frame& source, const Frame& target,
                          std::span<const Element> image) {
  if (image.size() != source.size())
    throw std::invalid_argument("image must assign every source element");
  for (Element y : image)
    if (y >= target.size()) throw std::invalid_argument("image leaves the target frame");

  MapReport report;
  using Kind = MapViolation::Kind;
  if (image[source.bottom()] != target.bottom()) report.violations.push_back({Kind::Bottom});
  if (image[source.top()] != target.top()) report.violations.push_back({Kind::Top});
  const std::size_t n = source.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (image[source.meet(x, y)] != target.meet(image[x], image[y]))
        report.violations.push_back({Kind::Meet, x, y});
      if (image[source.join(x, y)] != target.join(image[x], image[y]))
        report.violations.push_back({Kind::Join, x, y});
    }
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (source.less(x, y) && !target.leq(image[x], image[y]))
        report.violations.push_back({Kind::Monotone, x, y});
  return report;
}

FrameMap::FrameMap(Frame source, Frame target, std::vector<Element> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  auto report = check_frame_map(source_, target_, image_);
  if (!report.valid()) throw NotAFrameMap("not a frame map: " + report.describe(source_));
}

FrameMap::FrameMap(Trusted, Frame source, Frame target, std::vector<Element> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {}

FrameMap FrameMap::from_verified(Frame source, Frame target, std::vector<Element> image) {
  return FrameMap(Trusted{}, std::move(source), std::move(target), std::move(image));
}

FrameMap FrameMap::identity(const Frame& frame) {
  std::vector<Element> image(frame.size());
  for (Element x = 0; x < frame.size(); ++x) image[x] = x;
  return from_verified(frame, frame, std::move(image));
}

bool FrameMap::invertible() const {
  if (source_.size() != target_.size()) return false;
  std::vector<Element> inverse(target_.size(), target_.size());
  for (Element x = 0; x < image_.size(); ++x) {
    if (inverse[image_[x]] != target_.size()) return false;
    inverse[image_[x]] = x;
  }
  return check_frame_map(target_, source_, inverse).valid();
}

std::string FrameMap::to_string() const {
  std::string out;
  for (Element x = 0; x < image_.size(); ++x) {
    if (x) out += ", ";
    out += source_.label(x) + "↦" + target_.label(image_[x]);
  }
  return out;
}

bool FrameMap::operator==(const FrameMap& other) const {
  return image_ == other.image_ && source_ == other.source_ && target_ == other.target_;
}

FrameMap compose(const FrameMap& outer, const FrameMap& inner) {
  if (!(inner.target() == outer.source()))
    throw std::invalid_argument("compose: inner target is not outer source");
  std::vector<Element> image(inner.source().size());
  for (Element x = 0; x < image.size(); ++x) image[x] = outer(inner(x));
  return FrameMap::from_verified(inner.source(), outer.target(), std::move(image));
}

}  // namespace frames
