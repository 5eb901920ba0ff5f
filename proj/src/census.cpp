#include "frames/census.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <set>
#include <thread>

namespace frames {

namespace {

struct GrownPoset {
  Poset poset;
  std::size_t downset_count;
};

// The new element is maximal with strict lower set `below` (a downset).
Poset extend(const Poset& p, const Bits& below) {
  const std::size_t n = p.size() + 1;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  std::vector<Bits> leq(n, Bits(n));
  for (Element x = 0; x + 1 < n; ++x) {
    const Bits& up = p.up(x);
    for (auto y = up.find_first(); y != Bits::npos; y = up.find_next(y)) leq[x].set(y);
    if (below.test(x)) leq[x].set(n - 1);
  }
  leq[n - 1].set(n - 1);
  return Poset(std::move(labels), leq);
}

std::vector<GrownPoset> grow_posets(std::size_t max_downsets) {
  std::vector<GrownPoset> all;
  if (max_downsets == 0) return all;
  std::vector<GrownPoset> level{{Poset(), 1}};
  while (!level.empty()) {
    std::map<Certificate, GrownPoset> next;
    for (const auto& [p, count] : level) {
      const auto sets = downsets(p);
      for (const auto& below : sets) {
        // Downsets of the extension: the old ones plus E ∪ {new} for E ⊇ below.
        std::size_t extra = 0;
        for (const auto& e : sets)
          if (below.is_subset_of(e)) ++extra;
        const std::size_t grown = sets.size() + extra;
        if (grown > max_downsets) continue;
        Poset q = extend(p, below);
        auto cert = canonical_form(q);
        next.try_emplace(std::move(cert), GrownPoset{std::move(q), grown});
      }
    }
    for (auto& entry : level) all.push_back(std::move(entry));
    level.clear();
    for (auto& entry : next) level.push_back(std::move(entry.second));
  }
  return all;
}

std::vector<EnumeratedFrame> frames_from(const std::vector<GrownPoset>& posets, std::size_t n) {
  std::vector<EnumeratedFrame> out;
  for (const auto& [p, count] : posets) {
    if (count != n) continue;
    Frame f = downset_frame(p);
    auto cert = canonical_form(f);
    out.push_back({std::move(f), p, std::move(cert)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.certificate.to_string() < b.certificate.to_string();
  });
  return out;
}

void check_size(std::size_t n, CensusLimits limits) {
  if (n == 0) throw InvalidInput("frame size must be at least 1");
  if (n > limits.max_size)
    throw BudgetExceeded(limits.max_size, "census size " + std::to_string(n) +
                                              " exceeds limit " +
                                              std::to_string(limits.max_size));
}

bool is_chain(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (!p.leq(x, y) && !p.leq(y, x)) return false;
  return true;
}

std::string describe(const CensusRecord& r) {
  if (r.size == 3) return "S";
  if (is_chain(r.frame.poset())) return "chain(" + std::to_string(r.size) + ")";
  if (r.size == 4) return "diamond";
  return r.certificate.to_string();
}

}  // namespace

std::vector<Poset> posets_up_to_iso(std::size_t max_downsets) {
  std::vector<Poset> out;
  for (auto& g : grow_posets(max_downsets)) out.push_back(std::move(g.poset));
  return out;
}

std::vector<EnumeratedFrame> enumerate_frames_with_provenance(std::size_t n,
                                                              CensusLimits limits) {
  check_size(n, limits);
  return frames_from(grow_posets(n), n);
}

std::vector<Frame> enumerate_frames(std::size_t n, CensusLimits limits) {
  std::vector<Frame> out;
  for (auto& e : enumerate_frames_with_provenance(n, limits)) out.push_back(std::move(e.frame));
  return out;
}

Corpus frames_corpus(std::size_t max_size) {
  Corpus corpus{"frames-le-" + std::to_string(max_size), {}};
  const auto posets = grow_posets(max_size);
  for (std::size_t n = 1; n <= max_size; ++n)
    for (auto& e : frames_from(posets, n)) corpus.frames.push_back(std::move(e.frame));
  return corpus;
}

std::vector<CensusRecord> census(std::size_t n_max, const Corpus& corpus,
                                 const CensusOptions& options) {
  check_size(n_max, options.limits);
  const auto posets = grow_posets(n_max);
  std::vector<EnumeratedFrame> frames;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (auto& e : frames_from(posets, n)) frames.push_back(std::move(e));

  std::vector<std::optional<CensusRecord>> slots(frames.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < frames.size(); i = next++) {
      const auto& e = frames[i];
      CensusRecord r{e.certificate, e.frame.size(), 0, 0, 0, false, corpus.id,
                     e.irreducibles, e.frame};
      r.points = points(e.frame, options.search).size();
      r.endos = endomorphisms(e.frame, options.search).size();
      r.autos = automorphisms(e.frame, options.search).size();
      r.corpus_generator = corpus_generator(e.frame, corpus, options.search).generator;
      slots[i] = std::move(r);
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::vector<CensusRecord> records;
  records.reserve(slots.size());
  for (auto& s : slots) records.push_back(std::move(*s));
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.certificate.to_string() < b.certificate.to_string();
  });
  return records;
}

std::string format_catalog(const std::vector<CensusRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.certificate.to_string() + " " + std::to_string(r.size) + " " +
           std::to_string(r.points) + " " + std::to_string(r.endos) + " " +
           std::to_string(r.autos) + " " + (r.corpus_generator ? "1" : "0") + " " +
           r.corpus_id + "\n";
  }
  return out;
}

void write_catalog(const std::filesystem::path& path, const std::vector<CensusRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write catalog '" + path.string() + "'");
  out << format_catalog(records);
}

// ---------------------------------------------------------------- claims

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Pass:
      return "PASS";
    case ClaimStatus::VacuousPass:
      return "PASS (vacuous)";
    case ClaimStatus::Fail:
      return "FAIL";
    case ClaimStatus::VacuousFail:
      return "FAIL-vacuous";
  }
  return "?";
}

bool ClaimsReport::violated() const {
  return std::any_of(claims.begin(), claims.end(),
                     [](const auto& c) { return c.status == ClaimStatus::Fail; });
}

std::string ClaimsReport::format() const {
  std::string out = "claims over all frames with at most " + std::to_string(n_max) +
                    " elements; generator corpus " + corpus_id + "\n";
  for (const auto& c : claims) {
    out += c.id + " " + to_string(c.status) + ": " + c.statement + "\n";
    for (const auto& d : c.details) out += "  " + d + "\n";
  }
  for (const auto& f : findings) out += f + "\n";
  return out;
}

ClaimsReport check_claims(const std::vector<CensusRecord>& records, std::size_t n_max,
                          const std::string& corpus_id) {
  ClaimsReport report{n_max, corpus_id, {}, {}};

  ClaimResult c1{"C1", "every 4-element frame has at least 4 endomorphisms", ClaimStatus::Pass,
                 {}};
  bool any4 = false;
  for (const auto& r : records) {
    if (r.size != 4) continue;
    any4 = true;
    c1.details.push_back(describe(r) + ": " + std::to_string(r.endos) + " endomorphisms");
    if (r.endos < 4) c1.status = ClaimStatus::Fail;
  }
  if (!any4) {
    c1.status = ClaimStatus::VacuousPass;
    c1.details.push_back("no 4-element frames in range");
  }
  report.claims.push_back(std::move(c1));

  ClaimResult c2{"C2",
                 "every frame with at least 5 elements, 2 points and the generator property has "
                 "at least 4 endomorphisms",
                 ClaimStatus::Pass,
                 {}};
  bool any5 = false;
  for (const auto& r : records) {
    if (r.size < 5 || r.points != 2 || !r.corpus_generator) continue;
    any5 = true;
    c2.details.push_back(describe(r) + ": " + std::to_string(r.endos) + " endomorphisms");
    if (r.endos < 4) c2.status = ClaimStatus::Fail;
  }
  if (!any5) {
    c2.status = ClaimStatus::VacuousPass;
    c2.details.push_back("no frame in range has at least 5 elements, 2 points and the generator "
                         "property");
  }
  report.claims.push_back(std::move(c2));

  ClaimResult c3{"C3",
                 "exactly one frame has 2 points, 3 endomorphisms and the generator property, "
                 "and it is S",
                 ClaimStatus::Pass,
                 {}};
  std::vector<const CensusRecord*> triple;
  for (const auto& r : records)
    if (r.points == 2 && r.endos == 3 && r.corpus_generator) triple.push_back(&r);
  for (const auto* r : triple)
    c3.details.push_back("match: " + describe(*r) + " (" + r->certificate.to_string() + ")");
  if (n_max < 3) {
    c3.status = ClaimStatus::VacuousFail;
    c3.details.push_back("S not in range");
  } else if (triple.size() != 1 || !iso(triple.front()->frame, sierpinski())) {
    c3.status = ClaimStatus::Fail;
    c3.details.push_back(std::to_string(triple.size()) + " matching frame(s)");
  }
  report.claims.push_back(std::move(c3));

  std::size_t loose = 0;
  for (const auto& r : records) {
    if (r.points != 2 || r.endos != 3) continue;
    ++loose;
    if (!r.corpus_generator)
      report.findings.push_back("FINDING: " + describe(r) + " (" + r.certificate.to_string() +
                                ") has 2 points and 3 endomorphisms but fails the generator "
                                "test");
  }
  report.findings.push_back("info: without the generator condition, " + std::to_string(loose) +
                            " frame(s) have 2 points and 3 endomorphisms");
  return report;
}

ClaimsReport check_claims(std::size_t n_max, const Corpus& corpus, const CensusOptions& options) {
  return check_claims(census(n_max, corpus, options), n_max, corpus.id);
}

}  // namespace frames
