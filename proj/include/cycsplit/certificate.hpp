// SPDX-License-Identifier: Apache-2.0
//
// Machine-checkable record of one splitting-number computation. Every field
// is recomputed by verify_certificate.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "cycsplit/io.hpp"
#include "cycsplit/splitting.hpp"

namespace cycsplit {

/// How the branch curve was obtained: supplied by the caller, or built by
/// construct_curve (replayable from seed, mu and attempt).
struct Origin {
  bool constructed = false;
  int mu = 0;
  int attempt = 0;
};

struct SplittingCertificate {
  CoverSpec cover;
  IntersectionDivisor intersection;
  EPoint class_point;
  int lambda;
  int splitting_number;
  int oracle_splitting_number;
  HomogeneousForm witness_form;
  RankEvidence witness_rank;
  std::map<int, RankEvidence> nonexistence_ranks;  // k = 1 .. lambda - 1
  std::uint64_t seed = 0;
  Origin origin;

  /// b >= 4 is where distinct lambda separate embeddings topologically.
  bool within_hypotheses() const noexcept { return cover.b >= 4; }
};

/// Runs both paths and packages the evidence. Throws Internal when the two
/// paths disagree.
SplittingCertificate certify(const CoverSpec& cover, std::uint64_t seed = 0, Origin origin = {});

Json certificate_to_json(const SplittingCertificate& cert);
std::string serialize_certificate(const SplittingCertificate& cert);

/// Refuses certificates whose lambda * nu != m or whose witness degree is not
/// lambda * n, then writes the canonical JSON.
void emit_certificate(const SplittingCertificate& cert, const std::filesystem::path& path);

struct VerifyOutcome {
  bool ok = false;
  std::string failed_check;  // format, cover, intersection, class_point, lambda,
                             // splitting_number, witness, nonexistence_ranks,
                             // oracle, origin, labels
  std::string message;
};

VerifyOutcome verify_certificate(const Json& doc);
VerifyOutcome verify_certificate_text(const std::string& text);

}  // namespace cycsplit
