#include "frames/canonical.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace frames {

std::string Certificate::to_string() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = std::to_string(size) + ":";
  if (bits.empty()) return out + "0";
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    unsigned nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble <<= 1;
      if (i + j < bits.size() && bits[i + j]) nibble |= 1;
    }
    out += kHex[nibble];
  }
  return out;
}

namespace {

using Colour = std::size_t;

// Relabel signatures to dense colours by sorted signature value, which is
// independent of element indices.
template <class Sig>
std::vector<Colour> densify(const std::vector<Sig>& sigs) {
  std::vector<Sig> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Colour> out(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i)
    out[i] = static_cast<Colour>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) -
                                 sorted.begin());
  return out;
}

std::vector<Colour> refined_colours(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> lower_covers(n, 0), upper_covers(n, 0);
  for (auto [lo, hi] : p.covers()) {
    ++upper_covers[lo];
    ++lower_covers[hi];
  }
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> initial(n);
  for (Element x = 0; x < n; ++x)
    initial[x] = {p.down(x).count(), p.up(x).count(), lower_covers[x], upper_covers[x]};
  auto colours = densify(initial);

  std::size_t classes = 0;
  while (true) {
    std::size_t now = *std::max_element(colours.begin(), colours.end()) + 1;
    if (now == classes || now == n) break;
    classes = now;
    using Sig = std::tuple<Colour, std::vector<Colour>, std::vector<Colour>>;
    std::vector<Sig> sigs(n);
    for (Element x = 0; x < n; ++x) {
      auto& [own, below, above] = sigs[x];
      own = colours[x];
      for (Element y = 0; y < n; ++y) {
        if (p.less(y, x)) below.push_back(colours[y]);
        if (p.less(x, y)) above.push_back(colours[y]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
    }
    colours = densify(sigs);
  }
  return colours;
}

class Search {
 public:
  explicit Search(const Poset& p) : p_(p), n_(p.size()), colours_(refined_colours(p)) {
    cell_.assign(colours_.begin(), colours_.end());
    std::sort(cell_.begin(), cell_.end());
    used_.assign(n_, false);
  }

  CanonicalLabeling run() {
    dfs(0, /*prefix_less=*/true);
    return {Certificate{n_, best_bits_}, best_order_};
  }

 private:
  // Segment for position k: (p_i <= p_k, p_k <= p_i) for every earlier i.
  void append_segment(Element e) {
    for (Element placed : order_) {
      bits_.push_back(p_.leq(placed, e));
      bits_.push_back(p_.leq(e, placed));
    }
  }

  // -1 / 0 / +1 comparing the last segment with the best at the same offset.
  int compare_segment(std::size_t offset) const {
    for (std::size_t i = offset; i < bits_.size(); ++i) {
      if (bits_[i] != best_bits_[i]) return bits_[i] ? 1 : -1;
    }
    return 0;
  }

  void dfs(std::size_t k, bool prefix_less) {
    if (k == n_) {
      if (!have_best_ || prefix_less) {
        best_bits_ = bits_;
        best_order_ = order_;
        have_best_ = true;
        ++version_;
      }
      return;
    }
    for (Element e = 0; e < n_; ++e) {
      if (used_[e] || colours_[e] != cell_[k]) continue;
      const std::size_t offset = bits_.size();
      append_segment(e);
      bool child_less = prefix_less || !have_best_;
      if (!child_less) {
        int c = compare_segment(offset);
        if (c > 0) {
          bits_.resize(offset);
          continue;
        }
        child_less = c < 0;
      }
      used_[e] = true;
      order_.push_back(e);
      const auto before = version_;
      dfs(k + 1, child_less);
      order_.pop_back();
      used_[e] = false;
      bits_.resize(offset);
      // A new best was found below us, so our prefix now equals its prefix.
      if (version_ != before) prefix_less = false;
    }
  }

  const Poset& p_;
  std::size_t n_;
  std::vector<Colour> colours_;
  std::vector<Colour> cell_;
  std::vector<bool> used_;
  std::vector<Element> order_;
  std::vector<bool> bits_;
  std::vector<bool> best_bits_;
  std::vector<Element> best_order_;
  bool have_best_ = false;
  std::size_t version_ = 0;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Poset& poset) {
  if (poset.size() == 0) return {};
  return Search(poset).run();
}

Certificate canonical_form(const Poset& poset) { return canonical_labeling(poset).certificate; }

Certificate canonical_form(const Frame& frame) { return canonical_form(frame.poset()); }

bool iso(const Poset& a, const Poset& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

bool iso(const Frame& a, const Frame& b) { return iso(a.poset(), b.poset()); }

std::optional<std::vector<Element>> find_isomorphism(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto la = canonical_labeling(a);
  auto lb = canonical_labeling(b);
  if (la.certificate != lb.certificate) return std::nullopt;
  std::vector<Element> mapping(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) mapping[la.order[k]] = lb.order[k];
  return mapping;
}

}  // namespace frames
