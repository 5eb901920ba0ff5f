#include "frames/coproduct.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace frames {

namespace {

struct NumericLess {
  bool operator()(const Bits& a, const Bits& b) const { return numeric_less(a, b); }
};

class Closer {
 public:
  Closer(const Frame& a, const Frame& b) : a_(a), b_(b), n_(a.size() * b.size()) {
    down_.reserve(n_);
    for (Element x = 0; x < a.size(); ++x) {
      for (Element y = 0; y < b.size(); ++y) {
        Bits mask(n_);
        const Bits& dx = a.poset().down(x);
        const Bits& dy = b.poset().down(y);
        for (auto u = dx.find_first(); u != Bits::npos; u = dx.find_next(u))
          for (auto v = dy.find_first(); v != Bits::npos; v = dy.find_next(v))
            mask.set(u * b.size() + v);
        down_.push_back(std::move(mask));
      }
    }
  }

  // Alternating downward and coordinatewise-join passes until nothing changes.
  Bits operator()(Bits s) const {
    if (s.size() != n_) throw std::invalid_argument("seed has the wrong width");
    for (Element x = 0; x < a_.size(); ++x) s.set(idx(x, b_.bottom()));
    for (Element y = 0; y < b_.size(); ++y) s.set(idx(a_.bottom(), y));
    while (true) {
      const Bits before = s;
      Bits d = s;
      for (auto p = s.find_first(); p != Bits::npos; p = s.find_next(p)) d |= down_[p];
      s = std::move(d);
      for (Element y = 0; y < b_.size(); ++y) {
        Element m = a_.bottom();
        for (Element x = 0; x < a_.size(); ++x)
          if (s.test(idx(x, y))) m = a_.join(m, x);
        s.set(idx(m, y));
      }
      for (Element x = 0; x < a_.size(); ++x) {
        Element m = b_.bottom();
        for (Element y = 0; y < b_.size(); ++y)
          if (s.test(idx(x, y))) m = b_.join(m, y);
        s.set(idx(x, m));
      }
      if (s == before) return s;
    }
  }

  std::size_t width() const noexcept { return n_; }

 private:
  std::size_t idx(Element x, Element y) const { return x * b_.size() + y; }

  const Frame& a_;
  const Frame& b_;
  std::size_t n_;
  std::vector<Bits> down_;
};

Frame inclusion_frame(const Frame& a, const Frame& b, const std::vector<Bits>& elements) {
  const std::size_t m = elements.size();
  std::vector<std::string> labels(m);
  const Bits& bottom = elements.front();
  const Bits& top = elements.back();
  // Name each element after the first pair generating it, if any.
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < b.size(); ++y) {
      Bits t(a.size() * b.size());
      t.set(x * b.size() + y);
      t = c_ideal_close(a, b, std::move(t));
      auto it = std::lower_bound(elements.begin(), elements.end(), t, numeric_less);
      auto i = static_cast<std::size_t>(it - elements.begin());
      if (labels[i].empty()) labels[i] = a.label(x) + "⊗" + b.label(y);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (elements[i] == bottom) labels[i] = "0";
    else if (elements[i] == top) labels[i] = "1";
    else if (labels[i].empty()) labels[i] = "c" + std::to_string(i);
  }
  std::vector<Bits> leq(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)  // numeric order extends inclusion
      if (elements[i].is_subset_of(elements[j])) leq[i].set(j);
  return Frame(Lattice(Poset(std::move(labels), leq)));
}

}  // namespace

Bits c_ideal_close(const Frame& a, const Frame& b, Bits seed) {
  return Closer(a, b)(std::move(seed));
}

CoproductFrame::CoproductFrame(Frame left, Frame right, std::vector<Bits> elements)
    : left_(std::move(left)),
      right_(std::move(right)),
      elements_(std::move(elements)),
      frame_(inclusion_frame(left_, right_, elements_)) {
  tensor_.resize(left_.size() * right_.size());
  const Closer closer(left_, right_);
  for (Element x = 0; x < left_.size(); ++x) {
    for (Element y = 0; y < right_.size(); ++y) {
      Bits t(closer.width());
      t.set(pair_index(x, y));
      tensor_[pair_index(x, y)] = *find(closer(std::move(t)));
    }
  }
}

Bits CoproductFrame::close(Bits seed) const { return c_ideal_close(left_, right_, std::move(seed)); }

std::optional<Element> CoproductFrame::find(const Bits& closed) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), closed, numeric_less);
  if (it == elements_.end() || *it != closed) return std::nullopt;
  return static_cast<Element>(it - elements_.begin());
}

CoproductFrame coproduct(const Frame& a, const Frame& b, CoproductLimits limits) {
  const Closer closer(a, b);
  std::vector<Bits> tensors;
  for (std::size_t p = 0; p < closer.width(); ++p) {
    Bits t(closer.width());
    t.set(p);
    t = closer(std::move(t));
    if (std::find(tensors.begin(), tensors.end(), t) == tensors.end()) tensors.push_back(t);
  }

  // Every element is a join of tensors: close the bottom under joining one
  // tensor at a time.
  std::map<Bits, bool, NumericLess> seen;
  std::deque<Bits> work;
  Bits bottom = closer(Bits(closer.width()));
  seen.emplace(bottom, true);
  work.push_back(std::move(bottom));
  while (!work.empty()) {
    Bits e = std::move(work.front());
    work.pop_front();
    for (const auto& t : tensors) {
      if (t.is_subset_of(e)) continue;
      Bits j = closer(e | t);
      if (seen.emplace(j, true).second) {
        if (seen.size() > limits.max_elements)
          throw BudgetExceeded(limits.max_elements,
                               "coproduct exceeds " + std::to_string(limits.max_elements) +
                                   " elements");
        work.push_back(std::move(j));
      }
    }
  }
  std::vector<Bits> elements;
  elements.reserve(seen.size());
  for (auto& [bits, unused] : seen) elements.push_back(bits);
  return CoproductFrame(a, b, std::move(elements));
}

std::pair<FrameMap, FrameMap> injections(const CoproductFrame& sum) {
  std::vector<Element> i(sum.left().size()), j(sum.right().size());
  for (Element x = 0; x < i.size(); ++x) i[x] = sum.tensor(x, sum.right().top());
  for (Element y = 0; y < j.size(); ++y) j[y] = sum.tensor(sum.left().top(), y);
  return {FrameMap(sum.left(), sum.frame(), std::move(i)),
          FrameMap(sum.right(), sum.frame(), std::move(j))};
}

FrameMap mediate(const CoproductFrame& sum, const FrameMap& f, const FrameMap& g) {
  if (!(f.source() == sum.left()) || !(g.source() == sum.right()))
    throw std::invalid_argument("mediate: maps must start at the summands");
  if (!(f.target() == g.target())) throw std::invalid_argument("mediate: targets differ");
  const Frame& c = f.target();
  const std::size_t nb = sum.right().size();
  std::vector<Element> image(sum.size());
  for (Element e = 0; e < sum.size(); ++e) {
    const Bits& d = sum.elements()[e];
    Element acc = c.bottom();
    for (auto p = d.find_first(); p != Bits::npos; p = d.find_next(p))
      acc = c.join(acc, c.meet(f(p / nb), g(p % nb)));
    image[e] = acc;
  }
  return FrameMap(sum.frame(), c, std::move(image));
}

FrameMap codiagonal(const CoproductFrame& square) {
  if (!(square.left() == square.right()))
    throw std::invalid_argument("codiagonal: summands differ");
  const auto id = FrameMap::identity(square.left());
  return mediate(square, id, id);
}

FrameMap codiagonal(const Frame& frame, CoproductLimits limits) {
  return codiagonal(coproduct(frame, frame, limits));
}

FrameMap sum_of_maps(const CoproductFrame& source_sum, const CoproductFrame& target_sum,
                     const FrameMap& f, const FrameMap& g) {
  if (!(f.source() == source_sum.left()) || !(g.source() == source_sum.right()) ||
      !(f.target() == target_sum.left()) || !(g.target() == target_sum.right()))
    throw std::invalid_argument("sum_of_maps: maps do not match the given coproducts");
  const std::size_t nb = source_sum.right().size();
  std::vector<Element> image(source_sum.size());
  for (Element e = 0; e < source_sum.size(); ++e) {
    const Bits& d = source_sum.elements()[e];
    Bits acc(target_sum.elements().front().size());
    for (auto p = d.find_first(); p != Bits::npos; p = d.find_next(p))
      acc |= target_sum.elements()[target_sum.tensor(f(p / nb), g(p % nb))];
    image[e] = *target_sum.find(target_sum.close(std::move(acc)));
  }
  return FrameMap(source_sum.frame(), target_sum.frame(), std::move(image));
}

bool order_by_codiagonal(const CoproductFrame& source_square,
                         const CoproductFrame& target_square, const FrameMap& f,
                         const FrameMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw std::invalid_argument("order_by_codiagonal: maps are not parallel");
  const FrameMap folded =
      compose(codiagonal(target_square), sum_of_maps(source_square, target_square, f, g));
  for (Element x = 0; x < f.source().size(); ++x)
    if (folded(source_square.tensor(x, x)) != f(x)) return false;
  return true;
}

bool order_by_codiagonal(const FrameMap& f, const FrameMap& g, CoproductLimits limits) {
  return order_by_codiagonal(coproduct(f.source(), f.source(), limits),
                             coproduct(f.target(), f.target(), limits), f, g);
}

std::string format_coproduct(const CoproductFrame& sum) {
  const Frame& fr = sum.frame();
  std::string out = "elements: " + std::to_string(sum.size()) + "\n";
  for (Element e = 0; e < sum.size(); ++e)
    out += "  " + std::to_string(e) + " " + fr.label(e) + "\n";
  out += "tensors:\n";
  for (Element x = 0; x < sum.left().size(); ++x)
    for (Element y = 0; y < sum.right().size(); ++y)
      out += "  (" + sum.left().label(x) + "," + sum.right().label(y) + ") -> " +
             std::to_string(sum.tensor(x, y)) + "\n";
  out += "hasse:\n";
  for (auto [lo, hi] : fr.poset().covers())
    out += "  " + std::to_string(lo) + " -> " + std::to_string(hi) + "\n";
  return out;
}

}  // namespace frames
