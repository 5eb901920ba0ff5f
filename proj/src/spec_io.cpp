#include "frames/spec_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace frames {

using nlohmann::json;

FrameSpec parse_frame_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("frame spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("frame spec must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "elements" && key != "covers")
      throw InvalidInput("unknown frame spec field '" + key + "'");
  }
  if (!doc.contains("elements") || !doc["elements"].is_array())
    throw InvalidInput("frame spec needs an 'elements' array");
  if (!doc.contains("covers") || !doc["covers"].is_array())
    throw InvalidInput("frame spec needs a 'covers' array");

  FrameSpec spec;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw InvalidInput("element names must be strings");
    spec.elements.push_back(e.get<std::string>());
  }
  for (const auto& c : doc["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw InvalidInput("each cover must be a [lower, upper] pair of names");
    spec.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return spec;
}

FrameSpec read_frame_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open frame spec '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_frame_spec(buf.str());
}

Frame build_frame(const FrameSpec& spec) { return frame_from_covers(spec.elements, spec.covers); }

FrameSpec spec_of(const Frame& frame) {
  FrameSpec spec;
  spec.elements = frame.poset().labels();
  for (auto [lo, hi] : frame.poset().covers())
    spec.covers.emplace_back(frame.label(lo), frame.label(hi));
  return spec;
}

std::string write_frame_spec(const Frame& frame) {
  const auto spec = spec_of(frame);
  json covers = json::array();
  for (const auto& [lo, hi] : spec.covers) covers.push_back({lo, hi});
  json doc = {{"elements", spec.elements}, {"covers", covers}};
  return doc.dump(2) + "\n";
}

namespace {

std::string dot_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Frame& frame, std::string_view name) {
  std::string out = "digraph " + dot_string(name) + " {\n  rankdir=BT;\n";
  for (Element x = 0; x < frame.size(); ++x)
    out += "  n" + std::to_string(x) + " [label=" + dot_string(frame.label(x)) + "];\n";
  for (auto [lo, hi] : frame.poset().covers())
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  return out + "}\n";
}

std::optional<FrameSpec> builtin_spec(std::string_view name) {
  if (name == "M3")
    return FrameSpec{{"0", "a", "b", "c", "1"},
                     {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}};
  if (name == "N5")
    return FrameSpec{{"0", "a", "b", "c", "1"},
                     {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}};
  if (name == "S") return spec_of(sierpinski());
  if (name == "T") return spec_of(two_point());
  if (name == "diamond") return spec_of(diamond());
  if (name == "one_point") return spec_of(one_point());
  if (name.starts_with("chain")) {
    std::size_t n = 0;
    auto digits = name.substr(5);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && n >= 1 && n <= 64)
      return spec_of(chain(n));
  }
  return std::nullopt;
}

Frame load_frame(std::string_view name_or_path) {
  if (auto spec = builtin_spec(name_or_path)) return build_frame(*spec);
  return build_frame(read_frame_spec(std::filesystem::path(name_or_path)));
}

}  // namespace frames
