#include <doctest.h>

#include <fstream>
#include <sstream>

#include "frames/canonical.hpp"
#include "frames/census.hpp"
#include "frames/coproduct.hpp"
#include "frames/homs.hpp"
#include "oracles.hpp"

using namespace frames;

namespace {

const SearchLimits kWide{32};

// Direct reading of the definition: downward closed in the product order and
// closed under binary and empty joins in each coordinate.
bool is_c_ideal(const Frame& a, const Frame& b, const Bits& d) {
  auto at = [&](Element x, Element y) { return d.test(x * b.size() + y); };
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < b.size(); ++y) {
      if (!at(x, b.bottom()) || !at(a.bottom(), y)) return false;
      if (!at(x, y)) continue;
      for (Element u = 0; u < a.size(); ++u)
        for (Element v = 0; v < b.size(); ++v)
          if (a.leq(u, x) && b.leq(v, y) && !at(u, v)) return false;
      for (Element u = 0; u < a.size(); ++u)
        if (at(u, y) && !at(a.join(x, u), y)) return false;
      for (Element v = 0; v < b.size(); ++v)
        if (at(x, v) && !at(x, b.join(y, v))) return false;
    }
  return true;
}

std::vector<Bits> all_c_ideals(const Frame& a, const Frame& b) {
  const std::size_t w = a.size() * b.size();
  std::vector<Bits> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w); ++mask) {
    Bits d(w, mask);
    if (is_c_ideal(a, b, d)) out.push_back(d);
  }
  std::sort(out.begin(), out.end(), numeric_less);
  return out;
}

std::vector<std::pair<Frame, Frame>> small_pairs() {
  std::vector<Frame> fs{two_point(), sierpinski(), chain(4), diamond()};
  std::vector<std::pair<Frame, Frame>> out;
  for (const auto& a : fs)
    for (const auto& b : fs) out.emplace_back(a, b);
  return out;
}

Element at(const Frame& f, std::string_view label) { return *f.index_of(label); }

}  // namespace

TEST_CASE("closure examples") {
  Frame s = sierpinski();
  const std::size_t w = 9;
  Bits bottom = c_ideal_close(s, s, Bits(w));
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) CHECK(bottom.test(x * 3 + y) == (x == 0 || y == 0));

  Bits top(w);
  top.set(8);
  CHECK(c_ideal_close(s, s, top).count() == w);

  Bits aa(w);
  aa.set(1 * 3 + 1);
  Bits closed = c_ideal_close(s, s, aa);
  CHECK(closed.count() == 6);
  CHECK(bottom.is_proper_subset_of(closed));
  CHECK(closed.is_proper_subset_of(c_ideal_close(s, s, top)));
}

TEST_CASE("closure is extensive, idempotent and monotone") {
  for (const auto& [a, b] : small_pairs()) {
    const std::size_t w = a.size() * b.size();
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      Bits s1(w, rng()), s2 = s1;
      s2 |= Bits(w, rng());
      Bits c1 = c_ideal_close(a, b, s1), c2 = c_ideal_close(a, b, s2);
      CHECK(s1.is_subset_of(c1));
      CHECK(c_ideal_close(a, b, c1) == c1);
      CHECK(c1.is_subset_of(c2));
      CHECK(is_c_ideal(a, b, c1));
    }
  }
}

TEST_CASE("coproduct elements are exactly the C-ideals") {
  for (const auto& [a, b] : small_pairs()) {
    auto sum = coproduct(a, b);
    CHECK(sum.elements() == all_c_ideals(a, b));
  }
}

TEST_CASE("coproduct sizes against the Birkhoff oracle") {
  CHECK(coproduct(sierpinski(), sierpinski()).size() == 6);
  auto st = coproduct(sierpinski(), two_point());
  CHECK(st.size() == 3);
  CHECK(iso(st.frame(), sierpinski()));
  CHECK(coproduct(sierpinski(), chain(4)).size() == 10);
  CHECK(coproduct(diamond(), diamond()).size() == 16);
  CHECK(coproduct(chain(4), chain(4)).size() == 20);
  CHECK(coproduct(one_point(), diamond()).size() == 1);

  for (std::size_t n = 1; n <= 6; ++n)
    for (const Frame& l : enumerate_frames(n)) {
      CHECK(iso(coproduct(two_point(), l).frame(), l));
      CHECK(iso(coproduct(l, two_point()).frame(), l));
    }

  for (const auto& [a, b] : small_pairs()) {
    Poset grid = product(join_irreducibles(a), join_irreducibles(b));
    auto sum = coproduct(a, b);
    CHECK(sum.size() == oracle::count_downsets(grid));
    CHECK(iso(sum.frame(), downset_frame(grid)));
  }
}

TEST_CASE("coproduct invariants") {
  for (const auto& [a, b] : small_pairs()) {
    auto sum = coproduct(a, b);
    const Frame& f = sum.frame();
    CHECK(sum.tensor(a.top(), b.top()) == f.top());
    for (Element x = 0; x < a.size(); ++x) {
      CHECK(sum.tensor(x, b.bottom()) == f.bottom());
      for (Element y = 0; y < b.size(); ++y) CHECK(sum.tensor(a.bottom(), y) == f.bottom());
    }
    for (Element i = 0; i < f.size(); ++i) {
      const Bits& d = sum.elements()[i];
      // join of the tensors of its own pairs
      std::vector<Element> parts;
      for (std::size_t p = d.find_first(); p != Bits::npos; p = d.find_next(p))
        parts.push_back(sum.tensor(p / b.size(), p % b.size()));
      CHECK(f.join_all(parts) == i);
      for (Element j = 0; j < f.size(); ++j) {
        const Bits& e = sum.elements()[j];
        CHECK(sum.elements()[f.meet(i, j)] == (d & e));
        CHECK(sum.elements()[f.join(i, j)] == sum.close(d | e));
        CHECK(f.leq(i, j) == d.is_subset_of(e));
      }
    }
  }
}

TEST_CASE("tensor relations") {
  for (const auto& [a, b] : {std::pair{sierpinski(), sierpinski()},
                             std::pair{sierpinski(), chain(4)}, std::pair{diamond(), diamond()}}) {
    auto sum = coproduct(a, b);
    const Frame& f = sum.frame();
    // joins over every subset on the left, then on the right
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.size()); ++mask) {
      std::vector<Element> family;
      for (Element x = 0; x < a.size(); ++x)
        if ((mask >> x) & 1) family.push_back(x);
      for (Element y = 0; y < b.size(); ++y) {
        std::vector<Element> tensors;
        for (Element x : family) tensors.push_back(sum.tensor(x, y));
        CHECK(f.join_all(tensors) == sum.tensor(a.join_all(family), y));
      }
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b.size()); ++mask) {
      std::vector<Element> family;
      for (Element y = 0; y < b.size(); ++y)
        if ((mask >> y) & 1) family.push_back(y);
      for (Element x = 0; x < a.size(); ++x) {
        std::vector<Element> tensors;
        for (Element y : family) tensors.push_back(sum.tensor(x, y));
        CHECK(f.join_all(tensors) == sum.tensor(x, b.join_all(family)));
      }
    }
    for (Element a1 = 0; a1 < a.size(); ++a1)
      for (Element a2 = 0; a2 < a.size(); ++a2)
        for (Element b1 = 0; b1 < b.size(); ++b1)
          for (Element b2 = 0; b2 < b.size(); ++b2)
            CHECK(sum.tensor(a.meet(a1, a2), b.meet(b1, b2)) ==
                  f.meet(sum.tensor(a1, b1), sum.tensor(a2, b2)));
  }
}

TEST_CASE("injections") {
  Frame s = sierpinski();
  auto ss = coproduct(s, s);
  auto [i, j] = injections(ss);
  CHECK(i(s.top()) == ss.frame().top());
  CHECK(i(s.bottom()) == ss.frame().bottom());
  CHECK(i(at(s, "a")) == ss.tensor(at(s, "a"), s.top()));
  CHECK(j(at(s, "a")) == ss.tensor(s.top(), at(s, "a")));
  CHECK(i(at(s, "a")) != j(at(s, "a")));

  for (const auto& [a, b] : small_pairs()) {
    auto sum = coproduct(a, b);
    auto [ia, jb] = injections(sum);
    CHECK(check_frame_map(a, sum.frame(), ia.image()).valid());
    CHECK(check_frame_map(b, sum.frame(), jb.image()).valid());
  }

  auto tl = coproduct(two_point(), diamond());
  CHECK(injections(tl).second.invertible());
}

TEST_CASE("mediating arrows") {
  Frame s = sierpinski(), t = two_point();
  auto ss = coproduct(s, s);
  CHECK(mediate(ss, FrameMap::identity(s), FrameMap::identity(s)) == codiagonal(ss));

  HomSet p = points(s);
  for (const auto& f : p.maps())
    for (const auto& g : p.maps()) {
      FrameMap m = mediate(ss, f, g);
      for (Element x = 0; x < 3; ++x)
        for (Element y = 0; y < 3; ++y) CHECK(m(ss.tensor(x, y)) == t.meet(f(x), g(y)));
    }
  CHECK_THROWS_AS(mediate(ss, p[0], FrameMap::identity(s)), std::invalid_argument);
}

TEST_CASE("universal property") {
  const auto small = oracle::frames_up_to_4();
  for (const Frame& a : small)
    for (const Frame& b : small) {
      auto sum = coproduct(a, b);
      auto [i, j] = injections(sum);
      for (const Frame& c : small) {
        HomSet out = enumerate_homs(sum.frame(), c, kWide);
        HomSet fs = enumerate_homs(a, c), gs = enumerate_homs(b, c);
        for (const auto& f : fs.maps())
          for (const auto& g : gs.maps()) {
            FrameMap m = mediate(sum, f, g);
            CHECK(compose(m, i) == f);
            CHECK(compose(m, j) == g);
            std::size_t matches = 0;
            for (const auto& h : out.maps())
              if (compose(h, i) == f && compose(h, j) == g) {
                ++matches;
                CHECK(h == m);
              }
            CHECK(matches == 1);
          }
      }
    }
}

TEST_CASE("codiagonal") {
  Frame s = sierpinski(), d = diamond();
  auto ss = coproduct(s, s);
  FrameMap nabla = codiagonal(ss);
  CHECK(nabla(ss.tensor(at(s, "a"), s.top())) == at(s, "a"));
  CHECK(nabla(ss.tensor(at(s, "a"), at(s, "a"))) == at(s, "a"));

  auto dd = coproduct(d, d);
  CHECK(codiagonal(dd)(dd.tensor(at(d, "a"), at(d, "b"))) == d.bottom());

  for (std::size_t n = 1; n <= 5; ++n)
    for (const Frame& l : enumerate_frames(n)) {
      auto sq = coproduct(l, l);
      FrameMap nab = codiagonal(sq);
      auto [i, j] = injections(sq);
      CHECK(compose(nab, i) == FrameMap::identity(l));
      CHECK(compose(nab, j) == FrameMap::identity(l));
      for (Element x = 0; x < l.size(); ++x)
        for (Element y = 0; y < l.size(); ++y) CHECK(nab(sq.tensor(x, y)) == l.meet(x, y));
    }
  CHECK_THROWS_AS(codiagonal(chain(8), CoproductLimits{10}), BudgetExceeded);
}

TEST_CASE("sums of maps") {
  Frame s = sierpinski();
  auto ss = coproduct(s, s);
  FrameMap id = FrameMap::identity(s);
  CHECK(sum_of_maps(ss, ss, id, id) == FrameMap::identity(ss.frame()));

  FrameMap f(s, s, {0, 2, 2});  // a ↦ 1
  FrameMap g(s, s, {0, 0, 2});  // a ↦ 0
  FrameMap fg = sum_of_maps(ss, ss, f, g);
  CHECK(fg(ss.tensor(1, 1)) == ss.frame().bottom());

  auto [i, j] = injections(ss);
  CHECK(compose(fg, i) == compose(i, f));
  CHECK(compose(fg, j) == compose(j, g));

  HomSet e = endomorphisms(s);
  for (const auto& p : e.maps())
    for (const auto& q : e.maps()) {
      FrameMap pq = sum_of_maps(ss, ss, p, q);
      for (Element x = 0; x < 3; ++x)
        for (Element y = 0; y < 3; ++y) CHECK(pq(ss.tensor(x, y)) == ss.tensor(p(x), q(y)));
    }
}

TEST_CASE("order through the codiagonal") {
  Frame s = sierpinski();
  FrameMap low(s, s, {0, 0, 2}), high(s, s, {0, 2, 2});
  FrameMap id = FrameMap::identity(s);
  CHECK(order_by_codiagonal(id, id));
  CHECK(order_by_codiagonal(low, id));
  CHECK_FALSE(order_by_codiagonal(high, low));

  for (std::size_t n = 2; n <= 6; ++n)
    for (const Frame& l : enumerate_frames(n)) {
      HomSet h = enumerate_homs(s, l);
      auto ks = coproduct(s, s), ls = coproduct(l, l);
      for (std::size_t p = 0; p < h.size(); ++p)
        for (std::size_t q = 0; q < h.size(); ++q) {
          bool pointwise = true;
          for (Element x = 0; x < 3; ++x) pointwise &= l.leq(h[p](x), h[q](x));
          CHECK(order_by_codiagonal(ks, ls, h[p], h[q]) == pointwise);
        }
    }

  // Other sources behave the same way.
  for (const Frame& k : {diamond(), chain(4)}) {
    HomSet h = enumerate_homs(k, chain(4));
    auto ks = coproduct(k, k), ls = coproduct(chain(4), chain(4));
    for (std::size_t p = 0; p < h.size(); ++p)
      for (std::size_t q = 0; q < h.size(); ++q)
        CHECK(order_by_codiagonal(ks, ls, h[p], h[q]) == h.leq(p, q));
  }
}

TEST_CASE("golden coproduct dump") {
  std::ifstream in(std::filesystem::path(FRAMES_TEST_DIR) / "golden" / "S_plus_S.txt");
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(format_coproduct(coproduct(sierpinski(), sierpinski())) == buf.str());
}
