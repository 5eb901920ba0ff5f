#include "frames/homs.hpp"

#include <algorithm>
#include <stdexcept>

namespace frames {

// ---------------------------------------------------------------- HomSet

std::vector<Bits> hom_order(const std::vector<FrameMap>& maps) {
  std::vector<Bits> order(maps.size(), Bits(maps.size()));
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = 0; j < maps.size(); ++j) {
      const Frame& target = maps[i].target();
      bool below = true;
      for (Element x = 0; x < maps[i].source().size() && below; ++x)
        below = target.leq(maps[i](x), maps[j](x));
      if (below) order[i].set(j);
    }
  }
  return order;
}

HomSet::HomSet(Frame source, Frame target, std::vector<FrameMap> maps)
    : source_(std::move(source)),
      target_(std::move(target)),
      maps_(std::move(maps)),
      order_(hom_order(maps_)) {}

std::optional<std::size_t> HomSet::find(const FrameMap& map) const {
  for (std::size_t i = 0; i < maps_.size(); ++i)
    if (maps_[i] == map) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------- search

namespace {

struct Constraint {
  Element x;
  Element y;
  Element result;
  bool is_meet;
};

class HomSearch {
 public:
  HomSearch(const Frame& source, const Frame& target)
      : src_(source), tgt_(target), order_(source.poset().linear_extension()) {
    const std::size_t n = src_.size();
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[order_[k]] = k;
    due_.resize(n);
    // Each meet/join equation is checked once all three of its elements
    // are assigned.
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        for (bool is_meet : {true, false}) {
          Element r = is_meet ? src_.meet(x, y) : src_.join(x, y);
          std::size_t last = std::max({pos[x], pos[y], pos[r]});
          due_[last].push_back({x, y, r, is_meet});
        }
      }
    }
    image_.assign(n, 0);
  }

  std::vector<FrameMap> run() {
    if (src_.size() > 0) dfs(0);
    return std::move(found_);
  }

 private:
  void dfs(std::size_t k) {
    if (k == order_.size()) {
      found_.push_back(FrameMap::from_verified(src_, tgt_, image_));
      return;
    }
    const Element x = order_[k];
    // Monotonicity: x's image must sit above the image of everything below x.
    Bits candidates(tgt_.size());
    candidates.set();
    const Bits& below = src_.poset().down(x);
    for (auto w = below.find_first(); w != Bits::npos; w = below.find_next(w))
      if (w != x) candidates &= tgt_.poset().up(image_[w]);
    if (x == src_.bottom()) candidates &= single(tgt_.bottom());
    if (x == src_.top()) candidates &= single(tgt_.top());

    for (auto y = candidates.find_first(); y != Bits::npos; y = candidates.find_next(y)) {
      image_[x] = y;
      if (consistent(k)) dfs(k + 1);
    }
  }

  bool consistent(std::size_t k) const {
    for (const auto& c : due_[k]) {
      Element want = c.is_meet ? tgt_.meet(image_[c.x], image_[c.y])
                               : tgt_.join(image_[c.x], image_[c.y]);
      if (image_[c.result] != want) return false;
    }
    return true;
  }

  Bits single(Element e) const {
    Bits b(tgt_.size());
    b.set(e);
    return b;
  }

  const Frame& src_;
  const Frame& tgt_;
  std::vector<Element> order_;
  std::vector<std::vector<Constraint>> due_;
  std::vector<Element> image_;
  std::vector<FrameMap> found_;
};

void check_budget(const Frame& f, SearchLimits limits) {
  if (f.size() > limits.max_elements)
    throw BudgetExceeded(limits.max_elements,
                         "hom search budget exceeded: frame has " + std::to_string(f.size()) +
                             " elements, limit " + std::to_string(limits.max_elements));
}

bool differ_after(const FrameMap& f, const FrameMap& h, const FrameMap& n) {
  for (Element z = 0; z < n.source().size(); ++z)
    if (f(n(z)) != h(n(z))) return true;
  return false;
}

std::optional<FrameMap> direct_sierpinski_probe(const Frame& probe, const FrameMap& f,
                                                const FrameMap& h) {
  if (probe.size() != 3) return std::nullopt;
  const Frame& l = f.source();
  Element middle = 0;
  while (middle == probe.bottom() || middle == probe.top()) ++middle;
  for (Element x = 0; x < l.size(); ++x) {
    if (f(x) == h(x)) continue;
    std::vector<Element> image(3);
    image[probe.bottom()] = l.bottom();
    image[probe.top()] = l.top();
    image[middle] = x;
    FrameMap n(probe, l, std::move(image));
    if (differ_after(f, h, n)) return n;
  }
  return std::nullopt;
}

void check_parallel(const FrameMap& f, const FrameMap& h) {
  if (!(f.source() == h.source()) || !(f.target() == h.target()))
    throw std::invalid_argument("separating_arrow: maps are not parallel");
  if (f.image() == h.image()) throw std::invalid_argument("separating_arrow: maps are equal");
}

std::optional<FrameMap> separate_with(const HomSet& probes, const Frame& probe,
                                      const FrameMap& f, const FrameMap& h) {
  if (auto n = direct_sierpinski_probe(probe, f, h)) return n;
  for (const auto& n : probes.maps())
    if (differ_after(f, h, n)) return n;
  return std::nullopt;
}

}  // namespace

HomSet enumerate_homs(const Frame& source, const Frame& target, SearchLimits limits) {
  check_budget(source, limits);
  check_budget(target, limits);
  return HomSet(source, target, HomSearch(source, target).run());
}

HomSet points(const Frame& frame, SearchLimits limits) {
  return enumerate_homs(frame, two_point(), limits);
}

HomSet endomorphisms(const Frame& frame, SearchLimits limits) {
  return enumerate_homs(frame, frame, limits);
}

HomSet automorphisms(const Frame& frame, SearchLimits limits) {
  std::vector<FrameMap> autos;
  const HomSet endos = endomorphisms(frame, limits);
  for (const auto& m : endos.maps())
    if (m.invertible()) autos.push_back(m);
  return HomSet(frame, frame, std::move(autos));
}

// ---------------------------------------------------------------- reconstruction

Reconstruction arr_s_frame(const Frame& frame, SearchLimits limits) {
  if (frame.degenerate())
    throw DegenerateFrame("cannot reconstruct the one-element frame from arrows out of S");
  const Frame s = sierpinski();
  const Element a = *s.index_of("a");
  HomSet arrows = enumerate_homs(s, frame, limits);

  const std::size_t m = arrows.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& p : arrows.maps()) labels.push_back("a↦" + frame.label(p(a)));
  Frame hom_frame(Lattice(Poset(std::move(labels), arrows.order())));

  if (m != frame.size())
    throw std::logic_error("Arr<S,L> does not have |L| elements");
  std::vector<Element> eval(m);
  std::vector<Element> inv(frame.size(), m);
  for (std::size_t i = 0; i < m; ++i) {
    eval[i] = arrows[i](a);
    if (inv[eval[i]] != m) throw std::logic_error("evaluation at a is not injective");
    inv[eval[i]] = i;
  }
  // Order bijection with order-preserving inverse ...
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (hom_frame.leq(i, j) != frame.leq(eval[i], eval[j]))
        throw std::logic_error("evaluation at a does not reflect the order");
  // ... and therefore a frame isomorphism; re-checked through the validating
  // constructor.
  FrameMap evaluation(hom_frame, frame, std::move(eval));
  FrameMap inverse(frame, hom_frame, std::move(inv));
  if (!(compose(evaluation, inverse) == FrameMap::identity(frame)) ||
      !(compose(inverse, evaluation) == FrameMap::identity(hom_frame)))
    throw std::logic_error("evaluation and its inverse do not compose to identities");
  return {std::move(arrows), std::move(hom_frame), std::move(evaluation), std::move(inverse)};
}

// ---------------------------------------------------------------- generators

std::optional<FrameMap> separating_arrow(const Frame& probe, const FrameMap& f,
                                         const FrameMap& h, SearchLimits limits) {
  check_parallel(f, h);
  if (auto n = direct_sierpinski_probe(probe, f, h)) return n;
  HomSet probes = enumerate_homs(probe, f.source(), limits);
  for (const auto& n : probes.maps())
    if (differ_after(f, h, n)) return n;
  return std::nullopt;
}

GeneratorResult corpus_generator(const Frame& probe, const Corpus& corpus, SearchLimits limits) {
  if (corpus.frames.empty()) throw std::invalid_argument("corpus_generator: empty corpus");
  GeneratorResult result{true, corpus.id, std::nullopt};
  for (std::size_t i = 0; i < corpus.frames.size(); ++i) {
    const Frame& l = corpus.frames[i];
    std::optional<HomSet> probes;
    for (std::size_t j = 0; j < corpus.frames.size(); ++j) {
      HomSet parallel = enumerate_homs(l, corpus.frames[j], limits);
      for (std::size_t u = 0; u < parallel.size(); ++u) {
        for (std::size_t v = u + 1; v < parallel.size(); ++v) {
          if (!probes) probes = enumerate_homs(probe, l, limits);
          if (!separate_with(*probes, probe, parallel[u], parallel[v])) {
            result.generator = false;
            result.witness = GeneratorWitness{i, j, parallel[u], parallel[v]};
            return result;
          }
        }
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------- report

std::string format_homset(const HomSet& homs) {
  std::string out = "maps: " + std::to_string(homs.size()) + "\n";
  for (std::size_t i = 0; i < homs.size(); ++i)
    out += "map_" + std::to_string(i) + ": " + homs[i].to_string() + "\n";
  out += "order:\n";
  for (std::size_t i = 0; i < homs.size(); ++i) {
    out += " ";
    for (std::size_t j = 0; j < homs.size(); ++j) out += homs.leq(i, j) ? " 1" : " 0";
    out += "\n";
  }
  return out;
}

}  // namespace frames
