#pragma once

// Exhaustive census of small frames.
//
// Frames are generated through their posets of join-irreducibles: every
// finite frame is the downset frame of a finite poset, unique up to
// isomorphism, so enumerating posets up to isomorphism enumerates frames.

#include <filesystem>
#include <string>
#include <vector>

#include "frames/canonical.hpp"
#include "frames/homs.hpp"
#include "frames/order.hpp"

namespace frames {

struct CensusLimits {
  /// Largest frame size accepted by enumeration and census.
  std::size_t max_size = 8;
};

struct EnumeratedFrame {
  Frame frame;
  Poset irreducibles;  ///< generating poset
  Certificate certificate;
};

/// One poset per isomorphism class whose downset frame has at most
/// `max_downsets` elements.  Posets are grown one maximal element at a time.
std::vector<Poset> posets_up_to_iso(std::size_t max_downsets);

/// One representative per isomorphism class of n-element frames, sorted by
/// certificate.  Throws BudgetExceeded past `limits`, InvalidInput for n = 0.
std::vector<EnumeratedFrame> enumerate_frames_with_provenance(std::size_t n,
                                                              CensusLimits limits = {});
std::vector<Frame> enumerate_frames(std::size_t n, CensusLimits limits = {});

/// All frames with at most `max_size` elements, ids "frames-le-<max_size>".
Corpus frames_corpus(std::size_t max_size);

struct CensusRecord {
  Certificate certificate;
  std::size_t size = 0;
  std::size_t points = 0;
  std::size_t endos = 0;
  std::size_t autos = 0;
  bool corpus_generator = false;
  std::string corpus_id;
  Poset provenance;
  Frame frame;
};

struct CensusOptions {
  CensusLimits limits;
  SearchLimits search;
  /// Worker threads for per-frame invariants; output order does not depend on it.
  unsigned workers = 1;
};

/// One record per frame with at most n_max elements, sorted by (size, certificate).
std::vector<CensusRecord> census(std::size_t n_max, const Corpus& corpus,
                                 const CensusOptions& options = {});

/// "certificate size points endos autos generator_flag corpus_id" per line.
std::string format_catalog(const std::vector<CensusRecord>& records);
void write_catalog(const std::filesystem::path& path, const std::vector<CensusRecord>& records);

enum class ClaimStatus {
  Pass,
  VacuousPass,
  Fail,
  /// Nothing in range to test; not a violation.
  VacuousFail,
};

struct ClaimResult {
  std::string id;
  std::string statement;
  ClaimStatus status = ClaimStatus::Pass;
  std::vector<std::string> details;
};

struct ClaimsReport {
  std::size_t n_max = 0;
  std::string corpus_id;
  std::vector<ClaimResult> claims;
  /// Frames with 2 points and 3 endomorphisms that fail the generator test,
  /// plus the informational answer for the condition without the generator
  /// requirement.
  std::vector<std::string> findings;

  /// Some claim has status Fail.
  bool violated() const;
  std::string format() const;
};

/// C1: every 4-element frame has at least 4 endomorphisms.
/// C2: every frame of size >= 5 with 2 points that passes the corpus
///     generator test has at least 4 endomorphisms.
/// C3: exactly one frame has 2 points, 3 endomorphisms and passes the corpus
///     generator test, and it is isomorphic to S.
ClaimsReport check_claims(const std::vector<CensusRecord>& records, std::size_t n_max,
                          const std::string& corpus_id);
ClaimsReport check_claims(std::size_t n_max, const Corpus& corpus,
                          const CensusOptions& options = {});

std::string to_string(ClaimStatus status);

}  // namespace frames
