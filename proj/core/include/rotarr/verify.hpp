#pragma once

// End-to-end checks of the G(m,1,2) results, each producing a report with a
// machine-readable certificate.

#include <cstdint>
#include <string>
#include <vector>

#include "rotarr/arrangements.hpp"
#include "rotarr/catalog.hpp"
#include "rotarr/serialize.hpp"

namespace rotarr {

struct VerificationReport {
  std::string claim_id;
  json parameters = json::object();
  bool pass = false;
  json certificate = json::object();
  std::int64_t runtime_ms = 0;
  std::vector<std::string> summary;  // human-readable lines
};

// runtime_ms is left out unless asked for, so reports stay byte-stable.
json to_json(const VerificationReport& r, bool include_timing = false);
json to_json(const std::vector<VerificationReport>& reports, bool include_timing = false);

// Largest m for which G(m,1,2) is built by closure; above it the monomial
// enumeration is used.
inline constexpr unsigned kClosureRouteMaxM = 100;

// Arrangement of realified G(m,1,2) by closure ("closure") or monomial
// enumeration ("monomial"); "auto" picks by size.
Arrangement gm12_arrangement(unsigned m, const std::string& route = "auto");

// "x=0", "y=0", "y=zeta^j x", or "" if u is none of these.
std::string gm12_plane_label(const Subspace& u, unsigned m);

// Reflection arrangement of a catalog label, computed once per process.
const Arrangement& catalog_arrangement(const std::string& label);

VerificationReport verify_lemma_AG(unsigned m, const std::string& route = "auto");
VerificationReport verify_rotation_group(unsigned m);
VerificationReport verify_lemma_plane(unsigned m, std::size_t samples, std::uint64_t seed,
                                      std::size_t scalings = 100);
VerificationReport verify_dichotomy(unsigned p, unsigned q);

struct ThresholdResult {
  std::size_t max_planes_big_factor = 0;
  std::size_t max_total_big_factor = 0;
  std::size_t m0_planes = 0;  // smallest m with m + 2 > max_planes_big_factor
  std::size_t m0_total = 0;   // smallest m with m + 3 > max_total_big_factor
  struct Row {
    std::string label;
    std::size_t planes = 0;
    std::size_t total = 0;
  };
  std::vector<Row> rows;
};

ThresholdResult compute_threshold();
json to_json(const ThresholdResult& t);
VerificationReport verify_threshold();

struct TheoremOptions {
  std::size_t plane_samples = 200;
  std::uint64_t seed = 0;
};

VerificationReport verify_theorem(unsigned m, unsigned k_max, const TheoremOptions& options = {});

// Unverified listing for the closing conjecture: for each catalog group W, the
// rotation subgroup W+ and whether its arrangement lies inside that of W.
VerificationReport survey_rotation_subgroups(unsigned k_max);

}  // namespace rotarr
