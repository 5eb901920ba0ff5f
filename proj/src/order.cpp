#include "frames/order.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace frames {

bool numeric_less(const Bits& a, const Bits& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Highest differing bit decides.
  Bits diff = a ^ b;
  Element last = Bits::npos;
  for (auto i = diff.find_first(); i != Bits::npos; i = diff.find_next(i)) last = i;
  return last != Bits::npos && b.test(last);
}

// ---------------------------------------------------------------- Poset

Poset::Poset(std::vector<std::string> labels, const std::vector<Bits>& leq)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (leq.size() != n) throw InvalidInput("relation size does not match label count");
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw InvalidInput("duplicate label '" + l + "'");
  }
  down_.assign(n, Bits(n));
  up_.assign(n, Bits(n));
  for (Element x = 0; x < n; ++x) {
    if (leq[x].size() != n) throw InvalidInput("relation row has wrong width");
    up_[x] = leq[x];
    for (auto y = leq[x].find_first(); y != Bits::npos; y = leq[x].find_next(y)) down_[y].set(x);
  }
  for (Element x = 0; x < n; ++x) {
    if (!up_[x].test(x)) throw InvalidInput("relation is not reflexive at '" + labels_[x] + "'");
    for (auto y = up_[x].find_next(x); y != Bits::npos; y = up_[x].find_next(y)) {
      if (up_[y].test(x))
        throw InvalidInput("relation is not antisymmetric at ('" + labels_[x] + "', '" +
                           labels_[y] + "')");
    }
    for (auto y = up_[x].find_first(); y != Bits::npos; y = up_[x].find_next(y)) {
      if (!up_[y].is_subset_of(up_[x]))
        throw InvalidInput("relation is not transitive through '" + labels_[y] + "'");
    }
  }
}

std::optional<Element> Poset::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

std::vector<std::pair<Element, Element>> Poset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  const std::size_t n = size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!less(x, y)) continue;
      // x < y is a cover iff nothing sits strictly between them.
      Bits between = up_[x] & down_[y];
      if (between.count() == 2) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<Element> Poset::linear_extension() const {
  std::vector<Element> order(size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return down_[a].count() < down_[b].count();
  });
  return order;
}

bool Poset::operator==(const Poset& other) const {
  return labels_ == other.labels_ && down_ == other.down_;
}

std::vector<Bits> order_closure(std::size_t n,
                                std::span<const std::pair<Element, Element>> edges,
                                std::span<const std::string> labels) {
  std::vector<std::vector<Element>> succ(n);
  for (auto [lo, hi] : edges) succ[lo].push_back(hi);

  // Iterative DFS; colour 1 = on stack, 2 = finished.
  std::vector<int> colour(n, 0);
  std::vector<Element> topo;
  topo.reserve(n);
  for (Element root = 0; root < n; ++root) {
    if (colour[root] != 0) continue;
    std::vector<std::pair<Element, std::size_t>> stack{{root, 0}};
    colour[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < succ[v].size()) {
        Element w = succ[v][next++];
        if (colour[w] == 1) {
          std::vector<std::string> cycle;
          auto it = std::find_if(stack.begin(), stack.end(),
                                 [w](const auto& frame) { return frame.first == w; });
          for (; it != stack.end(); ++it) cycle.push_back(labels[it->first]);
          cycle.push_back(labels[w]);
          throw CycleDetected(std::move(cycle));
        }
        if (colour[w] == 0) {
          colour[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        colour[v] = 2;
        topo.push_back(v);
        stack.pop_back();
      }
    }
  }

  // topo is reverse topological: successors are finished first.
  std::vector<Bits> above(n, Bits(n));
  for (Element v : topo) {
    above[v].set(v);
    for (Element w : succ[v]) above[v] |= above[w];
  }
  return above;
}

// ---------------------------------------------------------------- Lattice

Lattice::Lattice(Poset poset) : poset_(std::move(poset)) {
  const std::size_t n = poset_.size();
  if (n == 0) throw NotALattice(NotALattice::Missing::Bounds, 0, 0, "empty poset has no bounds");

  std::map<Bits, Element> by_down;
  std::map<Bits, Element> by_up;
  for (Element x = 0; x < n; ++x) {
    by_down.emplace(poset_.down(x), x);
    by_up.emplace(poset_.up(x), x);
  }

  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      // In a lattice the common lower bounds of x, y form exactly ↓(x ∧ y).
      auto m = by_down.find(poset_.down(x) & poset_.down(y));
      if (m == by_down.end())
        throw NotALattice(NotALattice::Missing::Meet, x, y,
                          "no meet for ('" + poset_.label(x) + "', '" + poset_.label(y) + "')");
      auto j = by_up.find(poset_.up(x) & poset_.up(y));
      if (j == by_up.end())
        throw NotALattice(NotALattice::Missing::Join, x, y,
                          "no join for ('" + poset_.label(x) + "', '" + poset_.label(y) + "')");
      meet_[x * n + y] = meet_[y * n + x] = m->second;
      join_[x * n + y] = join_[y * n + x] = j->second;
    }
  }
  bottom_ = 0;
  top_ = 0;
  for (Element x = 1; x < n; ++x) {
    bottom_ = meet(bottom_, x);
    top_ = join(top_, x);
  }
}

Lattice lattice_tables(Poset poset) { return Lattice(std::move(poset)); }

std::optional<std::array<Element, 3>> distributivity_violation(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  const Poset& p = lattice.poset();

  // Fast screen: the lattice is distributive iff x ↦ {j join-irreducible : j <= x}
  // preserves binary joins.
  Bits irreducible(n);
  for (Element x = 0; x < n; ++x) {
    if (x == lattice.bottom()) continue;
    Element below = lattice.bottom();
    for (auto y = p.down(x).find_first(); y != Bits::npos; y = p.down(x).find_next(y))
      if (y != x) below = lattice.join(below, y);
    if (below != x) irreducible.set(x);
  }
  bool clean = true;
  for (Element x = 0; x < n && clean; ++x) {
    for (Element y = x + 1; y < n && clean; ++y) {
      Bits lhs = p.down(lattice.join(x, y)) & irreducible;
      Bits rhs = (p.down(x) | p.down(y)) & irreducible;
      clean = lhs == rhs;
    }
  }
  if (clean) return std::nullopt;

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        Element lhs = lattice.meet(x, lattice.join(y, z));
        Element rhs = lattice.join(lattice.meet(x, y), lattice.meet(x, z));
        if (lhs != rhs) return std::array<Element, 3>{x, y, z};
      }
  return std::nullopt;  // unreachable for a lattice
}

// ---------------------------------------------------------------- Frame

namespace {

std::shared_ptr<const Lattice> checked(Lattice lattice) {
  if (auto w = distributivity_violation(lattice)) {
    const auto& [x, y, z] = *w;
    throw NotDistributive(*w, "not distributive: witness ('" + lattice.label(x) + "', '" +
                                  lattice.label(y) + "', '" + lattice.label(z) + "')");
  }
  return std::make_shared<const Lattice>(std::move(lattice));
}

}  // namespace

Frame::Frame(Lattice lattice) : lattice_(checked(std::move(lattice))) {}

Element Frame::join_all(std::span<const Element> xs) const {
  Element acc = bottom();
  for (Element x : xs) acc = join(acc, x);
  return acc;
}

Element Frame::join_all(const Bits& xs) const {
  Element acc = bottom();
  for (auto x = xs.find_first(); x != Bits::npos; x = xs.find_next(x)) acc = join(acc, x);
  return acc;
}

Element Frame::meet_all(std::span<const Element> xs) const {
  Element acc = top();
  for (Element x : xs) acc = meet(acc, x);
  return acc;
}

bool Frame::operator==(const Frame& other) const {
  return same_object(other) || poset() == other.poset();
}

Frame frame_from_covers(std::vector<std::string> labels,
                        std::span<const std::pair<std::string, std::string>> covers) {
  std::map<std::string, Element, std::less<>> index;
  for (Element i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second)
      throw InvalidInput("duplicate label '" + labels[i] + "'");
  }
  std::vector<std::pair<Element, Element>> edges;
  edges.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw InvalidInput("cover references unknown element '" + lo + "'");
    if (b == index.end()) throw InvalidInput("cover references unknown element '" + hi + "'");
    edges.emplace_back(a->second, b->second);
  }
  auto leq = order_closure(labels.size(), edges, labels);
  return Frame(Lattice(Poset(std::move(labels), leq)));
}

// ---------------------------------------------------------------- Birkhoff

std::vector<Bits> downsets(const Poset& poset) {
  const std::size_t n = poset.size();
  const auto order = poset.linear_extension();
  std::vector<Bits> out;
  Bits current(n);

  // Decide elements in linear-extension order; x may join only when all of
  // its strict lower set is already in.
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(current);
      return;
    }
    const Element x = order[k];
    self(self, k + 1);
    Bits below = poset.down(x);
    below.reset(x);
    if (below.is_subset_of(current)) {
      current.set(x);
      self(self, k + 1);
      current.reset(x);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), numeric_less);
  return out;
}

Frame downset_frame(const Poset& poset) {
  const auto sets = downsets(poset);
  const std::size_t m = sets.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& d : sets) {
    std::string label = "{";
    bool first = true;
    for (auto x = d.find_first(); x != Bits::npos; x = d.find_next(x)) {
      // Maximal elements name the downset uniquely.
      Bits above = poset.up(x) & d;
      if (above.count() != 1) continue;
      if (!first) label += ",";
      label += poset.label(x);
      first = false;
    }
    labels.push_back(label + "}");
  }
  std::vector<Bits> leq(m, Bits(m));
  for (Element i = 0; i < m; ++i)
    for (Element j = 0; j < m; ++j)
      if (sets[i].is_subset_of(sets[j])) leq[i].set(j);
  return Frame(Lattice(Poset(std::move(labels), leq)));
}

Poset join_irreducibles(const Frame& frame) {
  std::vector<Element> members;
  for (Element x = 0; x < frame.size(); ++x) {
    if (x == frame.bottom()) continue;
    Bits below = frame.poset().down(x);
    below.reset(x);
    if (frame.join_all(below) != x) members.push_back(x);
  }
  const std::size_t k = members.size();
  std::vector<std::string> labels;
  std::vector<Bits> leq(k, Bits(k));
  for (Element i = 0; i < k; ++i) {
    labels.push_back(frame.label(members[i]));
    for (Element j = 0; j < k; ++j)
      if (frame.leq(members[i], members[j])) leq[i].set(j);
  }
  return Poset(std::move(labels), leq);
}

Poset product(const Poset& a, const Poset& b) {
  const std::size_t n = a.size() * b.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element i = 0; i < a.size(); ++i)
    for (Element j = 0; j < b.size(); ++j)
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  std::vector<Bits> leq(n, Bits(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (a.leq(x / b.size(), y / b.size()) && b.leq(x % b.size(), y % b.size())) leq[x].set(y);
  return Poset(std::move(labels), leq);
}

// ---------------------------------------------------------------- standard frames

namespace {

Frame chain_frame(std::size_t n) {
  if (n == 0) throw InvalidInput("chain needs at least one element");
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 0; i + 2 < n; ++i) {
    labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                            : "x" + std::to_string(i));
  }
  if (n >= 2) labels.push_back("1");
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(labels[i], labels[i + 1]);
  return frame_from_covers(std::move(labels), covers);
}

}  // namespace

Frame standard_frame(Standard which, std::size_t n) {
  switch (which) {
    case Standard::T:
      return chain_frame(2);
    case Standard::S:
      return chain_frame(3);
    case Standard::Chain:
      return chain_frame(n);
    case Standard::OnePoint:
      return chain_frame(1);
    case Standard::Diamond: {
      const std::vector<std::pair<std::string, std::string>> covers{
          {"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}};
      return frame_from_covers({"0", "a", "b", "1"}, covers);
    }
  }
  throw InvalidInput("unknown standard frame");
}

}  // namespace frames
