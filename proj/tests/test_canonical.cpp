#include <doctest.h>

#include <random>
#include <set>

#include "frames/canonical.hpp"
#include "frames/order.hpp"
#include "oracles.hpp"

using namespace frames;

namespace {

Poset chain_poset(std::size_t n) {
  std::vector<Bits> leq(n, Bits(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y) leq[x].set(y);
  return Poset(oracle::plain_labels(n), leq);
}

Poset antichain_poset(std::size_t n) {
  std::vector<Bits> leq(n, Bits(n));
  for (Element x = 0; x < n; ++x) leq[x].set(x);
  return Poset(oracle::plain_labels(n), leq);
}

}  // namespace

TEST_CASE("iso examples") {
  CHECK(iso(sierpinski(), downset_frame(chain_poset(2))));
  CHECK_FALSE(iso(chain(4), diamond()));
  CHECK(iso(diamond(), downset_frame(antichain_poset(2))));
  CHECK_FALSE(iso(sierpinski(), two_point()));
  CHECK(canonical_form(sierpinski()).to_string() == "3:a8");
  CHECK(canonical_form(one_point()).to_string() == "1:0");
}

TEST_CASE("certificate is label invariant") {
  std::mt19937 rng(7);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Frame& f : {chain(n), downset_frame(antichain_poset(n > 3 ? 3 : n))}) {
      const Certificate c = canonical_form(f);
      for (int trial = 0; trial < 20; ++trial) {
        auto perm = oracle::random_permutation(f.size(), rng);
        CHECK(canonical_form(oracle::relabel(f.poset(), perm)) == c);
      }
    }
  }
  for (const auto& p : oracle::naturally_labeled_posets(6)) {
    auto perm = oracle::random_permutation(p.size(), rng);
    CHECK(canonical_form(oracle::relabel(p, perm)) == canonical_form(p));
  }
}

TEST_CASE("certificate agrees with the all-orderings minimum") {
  // The naive form minimises the full relation string over n! orderings; two
  // posets are isomorphic iff those minima agree.  Compare the partitions.
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto posets = oracle::all_labeled_posets(n);
    std::set<std::vector<bool>> naive;
    std::set<Certificate> ours;
    for (std::size_t i = 0; i < posets.size(); ++i) {
      naive.insert(oracle::naive_canonical(posets[i]));
      ours.insert(canonical_form(posets[i]));
      for (std::size_t j = i + 1; j < posets.size(); j += 7) {
        CHECK(iso(posets[i], posets[j]) ==
              (oracle::naive_canonical(posets[i]) == oracle::naive_canonical(posets[j])));
      }
    }
    CHECK(ours.size() == naive.size());
  }
  // 1, 2, 5, 16 unlabeled posets on 1..4 elements.
  CHECK(oracle::all_labeled_posets(4).size() == 219);
}

TEST_CASE("find_isomorphism returns an order isomorphism") {
  std::mt19937 rng(11);
  for (const auto& p : oracle::naturally_labeled_posets(5)) {
    auto perm = oracle::random_permutation(p.size(), rng);
    Poset q = oracle::relabel(p, perm);
    auto m = find_isomorphism(p, q);
    REQUIRE(m.has_value());
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y) CHECK(p.leq(x, y) == q.leq((*m)[x], (*m)[y]));
  }
  CHECK_FALSE(find_isomorphism(chain_poset(3), antichain_poset(3)).has_value());
  CHECK_FALSE(find_isomorphism(chain_poset(3), chain_poset(4)).has_value());
}

TEST_CASE("canonical order is a permutation reproducing the certificate") {
  for (const auto& p : oracle::naturally_labeled_posets(5)) {
    auto lab = canonical_labeling(p);
    auto sorted = lab.order;
    std::sort(sorted.begin(), sorted.end());
    for (Element k = 0; k < sorted.size(); ++k) CHECK(sorted[k] == k);
    // Position k contributes (p_i <= p_k, p_k <= p_i) for each earlier i.
    std::vector<bool> again;
    for (std::size_t k = 0; k < lab.order.size(); ++k)
      for (std::size_t i = 0; i < k; ++i) {
        again.push_back(p.leq(lab.order[i], lab.order[k]));
        again.push_back(p.leq(lab.order[k], lab.order[i]));
      }
    CHECK(again == lab.certificate.bits);
    CHECK(lab.certificate.size == p.size());
  }
}
