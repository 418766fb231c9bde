#include "rotarr/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <unordered_map>

#include "rotarr/parallel.hpp"
#include "rotarr/phase.hpp"

namespace rotarr {

namespace {

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

const char* verdict(bool pass) { return pass ? "pass" : "fail"; }

// Expected planes of Lemma AG keyed by canonical form.
const std::unordered_map<Subspace, std::string>& expected_planes(unsigned m) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<std::unordered_map<Subspace, std::string>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) {
    slot = std::make_unique<std::unordered_map<Subspace, std::string>>();
    slot->emplace(plane_x_zero(m), "x=0");
    slot->emplace(plane_y_zero(m), "y=0");
    for (unsigned j = 0; j < m; ++j) slot->emplace(plane_y_zeta_x(m, j), "y=zeta^" + std::to_string(j) + " x");
  }
  return *slot;
}

// Small-height rationals p/q with |p| <= 10, 1 <= q <= 10. The modulo keeps the
// stream identical on every standard library.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational any() {
    const auto p = static_cast<long>(rng_() % 21) - 10;
    const auto q = static_cast<long>(rng_() % 10) + 1;
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  Rational nonzero() {
    for (;;) {
      Rational r = any();
      if (r != 0) return r;
    }
  }

 private:
  std::mt19937_64 rng_;
};

bool pairwise_trivial(const std::vector<Subspace>& planes, std::string& witness) {
  std::vector<std::size_t> bad(planes.size(), planes.size());
  parallel_for(planes.size(), [&](std::size_t i) {
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      if (meets_nontrivially(planes[i], planes[j])) {
        bad[i] = j;
        return;
      }
    }
  });
  for (std::size_t i = 0; i < bad.size(); ++i) {
    if (bad[i] != planes.size()) {
      witness = std::to_string(i) + "," + std::to_string(bad[i]);
      return false;
    }
  }
  return true;
}

struct PlaneSuite {
  unsigned m = 0;
  std::size_t samples = 0;
  std::vector<std::size_t> histogram;  // index = meet count
  std::size_t phase_checks = 0;
  std::size_t strict_phase_failures = 0;  // phase of y/x changed
  std::size_t sign_phase_failures = 0;    // phase changed by other than a sign
  std::optional<json> witness;            // first sample breaking the statement as written

  std::size_t max_count() const { return histogram.size() - 1; }
  // A plane meets {y = c x} for c on one real line through 0, and both c and
  // -c are m-th roots of unity when m is even.
  std::size_t sign_corrected_bound() const { return m % 2 == 0 ? 2 : 1; }
  bool as_stated_ok() const { return max_count() <= 1 && strict_phase_failures == 0; }
  bool sign_corrected_ok() const { return max_count() <= sign_corrected_bound() && sign_phase_failures == 0; }
};

json vector_json(const VectorF& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

// Seeded planes span(v, w), v in {y=0}, w in {x=0}, both rational and nonzero.
PlaneSuite run_plane_suite(unsigned m, std::size_t samples, std::uint64_t seed, std::size_t scalings) {
  struct Sample {
    VectorF v, w;
    std::vector<std::pair<Rational, Rational>> scales;
  };
  RationalSampler rs(seed);
  std::vector<Sample> drawn(samples);
  for (auto& s : drawn) {
    Rational a, b, c, d;
    do {
      a = rs.any();
      b = rs.any();
    } while (a == 0 && b == 0);
    do {
      c = rs.any();
      d = rs.any();
    } while (c == 0 && d == 0);
    s.v = {CycNum(1, a), CycNum(1, b), CycNum(1), CycNum(1)};
    s.w = {CycNum(1), CycNum(1), CycNum(1, c), CycNum(1, d)};
    for (std::size_t k = 0; k < scalings; ++k) s.scales.emplace_back(rs.nonzero(), rs.nonzero());
  }

  struct Outcome {
    std::size_t count = 0;
    std::size_t strict_failures = 0;
    std::size_t sign_failures = 0;
    std::optional<std::size_t> first_strict_failure;
  };
  std::vector<Outcome> out(samples);
  parallel_for(samples, [&](std::size_t i) {
    const Sample& s = drawn[i];
    const Subspace p = Subspace::span(4, 1, {s.v, s.w});
    out[i].count = plane_meet_count(p, m);
    VectorF vw(4);
    for (std::size_t k = 0; k < 4; ++k) vw[k] = s.v[k] + s.w[k];
    const PhaseValue reference = phase_ratio(vw);
    for (std::size_t t = 0; t < s.scales.size(); ++t) {
      const auto& [a, b] = s.scales[t];
      VectorF u(4);
      for (std::size_t k = 0; k < 4; ++k) u[k] = CycNum(1, a) * s.v[k] + CycNum(1, b) * s.w[k];
      const PhaseValue ph = phase_ratio(u);
      if (!same_phase(ph, reference)) {
        ++out[i].strict_failures;
        if (!out[i].first_strict_failure) out[i].first_strict_failure = t;
      }
      if (!same_phase_up_to_sign(ph, reference)) ++out[i].sign_failures;
    }
  });

  PlaneSuite suite;
  suite.m = m;
  suite.samples = samples;
  suite.histogram.assign(1, 0);
  for (std::size_t i = 0; i < samples; ++i) {
    if (out[i].count >= suite.histogram.size()) suite.histogram.resize(out[i].count + 1, 0);
    ++suite.histogram[out[i].count];
    suite.phase_checks += scalings;
    suite.strict_phase_failures += out[i].strict_failures;
    suite.sign_phase_failures += out[i].sign_failures;
    if (!suite.witness && (out[i].count >= 2 || out[i].strict_failures > 0)) {
      json w{{"sample", i},
             {"v", vector_json(drawn[i].v)},
             {"w", vector_json(drawn[i].w)},
             {"meet_count", out[i].count}};
      if (out[i].first_strict_failure) {
        const auto& [a, b] = drawn[i].scales[*out[i].first_strict_failure];
        w["phase_flip_scaling"] = json{{"a", to_json(a)}, {"b", to_json(b)}};
      }
      suite.witness = std::move(w);
    }
  }
  return suite;
}

json plane_suite_json(const PlaneSuite& s) {
  json hist = json::object();
  for (std::size_t c = 0; c < s.histogram.size(); ++c) hist[std::to_string(c)] = s.histogram[c];
  json j{{"samples", s.samples},
         {"meet_count_histogram", std::move(hist)},
         {"phase_checks", s.phase_checks},
         {"as_stated", json{{"max_meet_count_allowed", 1},
                            {"strict_phase_failures", s.strict_phase_failures},
                            {"holds", s.as_stated_ok()}}},
         {"sign_corrected", json{{"max_meet_count_allowed", s.sign_corrected_bound()},
                                 {"phase_failures_up_to_sign", s.sign_phase_failures},
                                 {"holds", s.sign_corrected_ok()}}}};
  if (s.witness) j["witness"] = *s.witness;
  return j;
}

}  // namespace

json to_json(const VerificationReport& r, bool include_timing) {
  json j{{"claim_id", r.claim_id}, {"parameters", r.parameters}, {"verdict", verdict(r.pass)},
         {"certificate", r.certificate}};
  if (include_timing) j["runtime_ms"] = r.runtime_ms;
  return j;
}

json to_json(const std::vector<VerificationReport>& reports, bool include_timing) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, include_timing));
  bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  return json{{"verdict", verdict(all)}, {"reports", std::move(arr)}};
}

Arrangement gm12_arrangement(unsigned m, const std::string& route) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  std::string r = route;
  if (r == "auto") r = m <= kClosureRouteMaxM ? "closure" : "monomial";
  if (r == "closure") return isotropy_arrangement(realified_gm12(m));
  if (r == "monomial") return isotropy_arrangement(monomial_fixed_space_table(m, 1, 2));
  throw std::invalid_argument("unknown route: " + route);
}

std::string gm12_plane_label(const Subspace& u, unsigned m) {
  const auto& planes = expected_planes(m);
  auto it = planes.find(u);
  return it == planes.end() ? std::string() : it->second;
}

const Arrangement& catalog_arrangement(const std::string& label) {
  struct Slot {
    std::once_flag once;
    Arrangement value;
  };
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<Slot>> cache;
  const std::string canonical = catalog_entry(label).label;
  std::shared_ptr<Slot> slot;
  {
    std::lock_guard lock(mutex);
    auto& s = cache[canonical];
    if (!s) s = std::make_shared<Slot>();
    slot = s;
  }
  std::call_once(slot->once, [&] { slot->value = reflection_arrangement(catalog_group(canonical)); });
  return slot->value;
}

VerificationReport verify_lemma_AG(unsigned m, const std::string& route) {
  Stopwatch sw;
  VerificationReport r;
  r.claim_id = "lemma-AG";
  r.parameters = json{{"m", m}};
  const std::string used = route == "auto" ? (m <= kClosureRouteMaxM ? "closure" : "monomial") : route;
  const Arrangement a = gm12_arrangement(m, used);
  const auto planes = a.members_of_dim(2);
  const bool has_zero = a.count_dim(0) == 1;
  const std::size_t others = a.size() - planes.size() - (has_zero ? 1 : 0);

  std::vector<std::string> labels;
  bool all_labelled = true;
  for (const auto& p : planes) {
    labels.push_back(gm12_plane_label(p, m));
    if (labels.back().empty()) all_labelled = false;
  }
  std::string bad_pair;
  const bool trivial = pairwise_trivial(planes, bad_pair);
  const bool count_ok = planes.size() == static_cast<std::size_t>(m) + 2;
  r.pass = count_ok && has_zero && others == 0 && all_labelled && trivial;

  json plist = json::array();
  const bool with_bases = m <= 32;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    json e{{"label", labels[i].empty() ? "unexpected" : labels[i]}};
    if (with_bases) e["subspace"] = to_json(planes[i]);
    plist.push_back(std::move(e));
  }
  r.certificate = json{{"route", used},
                       {"conductor", lcm_conductor(4, m)},
                       {"expected_planes", m + 2},
                       {"planes_found", planes.size()},
                       {"zero_member", has_zero},
                       {"other_members", others},
                       {"planes_match_equations", all_labelled},
                       {"pairwise_trivial", trivial},
                       {"planes", std::move(plist)}};
  if (!trivial) r.certificate["nontrivial_pair"] = bad_pair;
  if (m < 2) r.certificate["note"] = "outside corollary range m>=2";
  r.summary.push_back("lemma-AG m=" + std::to_string(m) + ": " + std::to_string(planes.size()) + " planes (expected " +
                      std::to_string(m + 2) + "), {0} " + (has_zero ? "present" : "absent") + ", pairwise " +
                      (trivial ? "trivial" : "NOT trivial") + " -> " + verdict(r.pass));
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

VerificationReport verify_rotation_group(unsigned m) {
  Stopwatch sw;
  VerificationReport r;
  r.claim_id = "rotation";
  r.parameters = json{{"m", m}};
  if (m == 0 || m > kClosureRouteMaxM) throw std::invalid_argument("rotation check supports 1 <= m <= 100");
  const MatrixGroup g = realified_gm12(m);
  const auto cert = is_rotation_group(g);
  const auto& fixed = g.fixed_spaces();
  std::vector<std::size_t> hist(g.ambient() + 1, 0);
  for (std::size_t i = 1; i < g.order(); ++i) ++hist[g.ambient() - fixed[i].dim()];
  const bool no_reflections = hist[0] == 0 && hist[1] == 0 && hist[3] == 0;
  const bool order_ok = g.order() == 2ULL * m * m;
  r.pass = cert.generates && no_reflections && order_ok;

  json gens = json::array();
  for (std::size_t idx : cert.generators) {
    gens.push_back(json{{"element", idx}, {"matrix", to_json(g.elements()[idx])}});
  }
  json h = json::object();
  for (std::size_t c = 1; c < hist.size(); ++c) h[std::to_string(c)] = hist[c];
  r.certificate = json{{"order", g.order()},
                       {"expected_order", 2ULL * m * m},
                       {"nonidentity_scanned", g.order() - 1},
                       {"rotations", cert.candidates},
                       {"fix_codim_histogram", h},
                       {"no_reflections", no_reflections},
                       {"generated_by_rotations", cert.generates},
                       {"rotation_generators", gens}};
  if (cert.missing_element) r.certificate["missing_element"] = *cert.missing_element;
  r.summary.push_back("rotation m=" + std::to_string(m) + ": order " + std::to_string(g.order()) + ", " +
                      std::to_string(cert.candidates) + " rotations, generated by " +
                      std::to_string(cert.generators.size()) + ", reflections " + std::to_string(hist[1]) + " -> " +
                      verdict(r.pass));
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

VerificationReport verify_lemma_plane(unsigned m, std::size_t samples, std::uint64_t seed, std::size_t scalings) {
  Stopwatch sw;
  VerificationReport r;
  r.claim_id = "lemma-plane";
  r.parameters = json{{"m", m}, {"samples", samples}, {"seed", seed}, {"scalings", scalings}};
  if (m < 2) throw std::invalid_argument("lemma-plane needs m >= 2");
  const PlaneSuite suite = run_plane_suite(m, samples, seed, scalings);

  // A plane built to contain (1, zeta): it meets {y = zeta x} and no other.
  const unsigned L = lcm_conductor(4, m);
  auto [c, s] = real_imag_parts(zeta_power(L, L / m));
  const Subspace built =
      Subspace::span(4, L, {{CycNum(L, 1L), CycNum(L), CycNum(L), CycNum(L)}, {CycNum(L), CycNum(L), c, s}});
  const std::size_t built_count = plane_meet_count(built, m);

  // With x=0 and y=0 also met, a plane meets count + 2 of the m + 2 planes.
  const bool corollary = suite.max_count() < m;
  r.pass = suite.as_stated_ok() && built_count == 1;
  r.certificate = plane_suite_json(suite);
  r.certificate["corollary_no_sample_meets_all"] = corollary;
  r.certificate["constructed_plane_meet_count"] = built_count;
  std::string hist;
  for (std::size_t c = 0; c < suite.histogram.size(); ++c) {
    hist += (c ? "/" : "") + std::to_string(suite.histogram[c]);
  }
  r.summary.push_back("lemma-plane m=" + std::to_string(m) + ": " + std::to_string(samples) +
                      " planes, meet counts 0.." + std::to_string(suite.max_count()) + " = " + hist +
                      ", phase changes " + std::to_string(suite.strict_phase_failures) + " of " +
                      std::to_string(suite.phase_checks) + " (" + std::to_string(suite.sign_phase_failures) +
                      " beyond a sign) -> " + verdict(r.pass));
  r.summary.push_back(std::string("  sign-corrected statement (count <= ") +
                      std::to_string(suite.sign_corrected_bound()) + ", phase up to sign): " +
                      (suite.sign_corrected_ok() ? "holds" : "FAILS"));
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

VerificationReport verify_dichotomy(unsigned p, unsigned q) {
  Stopwatch sw;
  VerificationReport r;
  r.claim_id = "dichotomy";
  r.parameters = json{{"p", p}, {"q", q}};
  if (p < 2 || q < 2) throw std::invalid_argument("dichotomy needs p, q >= 2");
  const std::string label = "I2(" + std::to_string(p) + ")xI2(" + std::to_string(q) + ")";
  const DichotomyReport d = structural_dichotomy_check(catalog_group(label));
  std::map<std::string, std::size_t> kinds{{"V1", 0}, {"V2", 0}, {"meets-both", 0}, {"violation", 0}};
  json per_plane = json::array();
  for (const auto& pl : d.planes) {
    ++kinds[pl.kind];
    per_plane.push_back(pl.kind);
  }
  r.pass = d.holds;
  r.certificate = json{{"group", label},
                       {"plane_count", d.planes.size()},
                       {"V1", kinds["V1"]},
                       {"V2", kinds["V2"]},
                       {"meets_both", kinds["meets-both"]},
                       {"violations", kinds["violation"]},
                       {"plane_kinds", per_plane}};
  r.summary.push_back("dichotomy " + label + ": " + std::to_string(d.planes.size()) + " planes (V1 " +
                      std::to_string(kinds["V1"]) + ", V2 " + std::to_string(kinds["V2"]) + ", meets-both " +
                      std::to_string(kinds["meets-both"]) + ") -> " + verdict(r.pass));
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

ThresholdResult compute_threshold() {
  const auto entries = big_factor_catalog();
  ThresholdResult t;
  t.rows.resize(entries.size());
  parallel_for(entries.size(), [&](std::size_t i) {
    const Arrangement& a = catalog_arrangement(entries[i].label);
    t.rows[i] = {entries[i].label, a.count_dim(2), a.size()};
  });
  for (const auto& row : t.rows) {
    t.max_planes_big_factor = std::max(t.max_planes_big_factor, row.planes);
    t.max_total_big_factor = std::max(t.max_total_big_factor, row.total);
  }
  t.m0_planes = t.max_planes_big_factor >= 2 ? t.max_planes_big_factor - 1 : 1;
  t.m0_total = t.max_total_big_factor >= 3 ? t.max_total_big_factor - 2 : 1;
  return t;
}

json to_json(const ThresholdResult& t) {
  json rows = json::array();
  for (const auto& row : t.rows) rows.push_back(json{{"label", row.label}, {"planes", row.planes}, {"total", row.total}});
  return json{{"max_planes_big_factor", t.max_planes_big_factor},
              {"max_total_big_factor", t.max_total_big_factor},
              {"m0_planes", t.m0_planes},
              {"m0_total", t.m0_total},
              {"groups", std::move(rows)}};
}

VerificationReport verify_threshold() {
  Stopwatch sw;
  VerificationReport r;
  r.claim_id = "threshold";
  const ThresholdResult t = compute_threshold();
  std::string dominant;
  for (const auto& row : t.rows) {
    if (row.planes == t.max_planes_big_factor && dominant.empty()) dominant = row.label;
  }
  r.pass = t.m0_planes <= t.m0_total && t.m0_planes > 0;
  r.certificate = to_json(t);
  r.certificate["dominant_group"] = dominant;
  r.summary.push_back("threshold: max planes " + std::to_string(t.max_planes_big_factor) + " (" + dominant +
                      "), max members " + std::to_string(t.max_total_big_factor) + ", m0_planes " +
                      std::to_string(t.m0_planes) + ", m0_total " + std::to_string(t.m0_total) + " -> " +
                      verdict(r.pass));
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

VerificationReport verify_theorem(unsigned m, unsigned k_max, const TheoremOptions& options) {
  Stopwatch sw;
  VerificationReport r;
  r.claim_id = "theorem";
  r.parameters = json{{"m", m}, {"k_max", k_max}, {"plane_samples", options.plane_samples}, {"seed", options.seed}};
  if (m < 2) throw std::invalid_argument("theorem needs m >= 2");
  if (k_max < 2) throw std::invalid_argument("theorem needs k_max >= 2");

  const Arrangement ag = gm12_arrangement(m);
  const auto planes = ag.members_of_dim(2);
  const auto entries = enumerate_degree4_catalog(k_max);
  const ThresholdResult threshold = compute_threshold();

  // (i) direct non-containment against every standard-position catalog group.
  struct Row {
    std::size_t planes = 0;
    std::size_t members = 0;
    bool contained = false;
    std::string witness;
  };
  std::vector<Row> rows(entries.size());
  parallel_for(entries.size(), [&](std::size_t i) {
    const Arrangement& aw = catalog_arrangement(entries[i].label);
    const auto res = arrangement_contains(aw, ag, 2);
    rows[i] = {aw.count_dim(2), aw.size(), res.contained, res.missing ? gm12_plane_label(*res.missing, m) : ""};
  });
  bool part1 = true;
  json part1_rows = json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    part1 = part1 && !rows[i].contained;
    json row{{"label", entries[i].label},
             {"big_factor", entries[i].big_factor},
             {"planes", rows[i].planes},
             {"members", rows[i].members},
             {"contained", rows[i].contained}};
    if (!rows[i].contained) row["witness_plane"] = rows[i].witness;
    part1_rows.push_back(std::move(row));
  }

  // (ii) counting: any big-factor W in any position has the plane count of
  // its standard position, which is below m + 2 once m >= m0_planes.
  json part2;
  bool part2_ok = true;
  if (m >= threshold.m0_planes) {
    part2_ok = static_cast<std::size_t>(m) + 2 > threshold.max_planes_big_factor;
    part2 = json{{"status", verdict(part2_ok)},
                 {"planes_of_G", m + 2},
                 {"max_planes_big_factor", threshold.max_planes_big_factor},
                 {"argument", "plane counts are invariant under orthogonal conjugation; containment needs at least "
                              "m+2 planes in the reflection arrangement"}};
  } else {
    part2 = json{{"status", "not-applicable"},
                 {"reason", "m < m0_planes"},
                 {"planes_of_G", m + 2},
                 {"max_planes_big_factor", threshold.max_planes_big_factor}};
  }

  // (iii) structural: rank <= 2 factor groups satisfy the dichotomy in
  // standard position (and so in every position, since conjugation carries
  // the orthogonal splitting along); G's planes are pairwise trivial and no
  // plane meeting both coordinate planes meets more than one other.
  std::vector<std::string> small;
  for (const auto& e : entries) {
    if (!e.big_factor) small.push_back(e.label);
  }
  std::vector<char> holds(small.size(), 0);
  std::vector<std::size_t> plane_counts(small.size(), 0);
  parallel_for(small.size(), [&](std::size_t i) {
    const auto d = structural_dichotomy_check(catalog_group(small[i]));
    holds[i] = d.holds ? 1 : 0;
    plane_counts[i] = d.planes.size();
  });
  bool dichotomy_all = true;
  json dichotomy_rows = json::array();
  for (std::size_t i = 0; i < small.size(); ++i) {
    dichotomy_all = dichotomy_all && holds[i] != 0;
    dichotomy_rows.push_back(json{{"label", small[i]}, {"planes", plane_counts[i]}, {"holds", holds[i] != 0}});
  }
  std::string bad_pair;
  const bool trivial = pairwise_trivial(planes, bad_pair);
  const bool lemma_ag = planes.size() == static_cast<std::size_t>(m) + 2 && trivial;
  const PlaneSuite suite = run_plane_suite(m, options.plane_samples, options.seed, 10);
  // The proof only needs the sign-corrected form, and for the corollary no
  // plane may meet all m + 2 planes.
  const bool suite_ok = suite.sign_corrected_ok() && suite.max_count() < m;
  // A plane of G equal to V1 would need the other m+1 >= 2 planes to meet it
  // in a line (all but at most one); pairwise triviality forbids this.
  const bool no_plane_is_v1_or_v2 = trivial && m + 1 >= 2;
  const bool part3 = dichotomy_all && lemma_ag && suite_ok && no_plane_is_v1_or_v2;
  json part3_json{{"status", verdict(part3)},
                  {"dichotomy_groups", std::move(dichotomy_rows)},
                  {"dichotomy_all_hold", dichotomy_all},
                  {"lemma_AG_planes", planes.size()},
                  {"lemma_AG_pairwise_trivial", trivial},
                  {"no_plane_of_G_equals_V1_or_V2", no_plane_is_v1_or_v2},
                  {"lemma_plane_suite", plane_suite_json(suite)},
                  {"lemma_plane_form_used", "sign-corrected"},
                  {"no_sample_meets_all_planes", suite.max_count() < m}};

  r.pass = part1 && part2_ok && part3;
  r.certificate = json{{"m0_planes", threshold.m0_planes},
                       {"m0_total", threshold.m0_total},
                       {"part_i", json{{"status", verdict(part1)},
                                       {"groups_checked", entries.size()},
                                       {"groups", std::move(part1_rows)}}},
                       {"part_ii", std::move(part2)},
                       {"part_iii", std::move(part3_json)},
                       {"open_question",
                        "minimal m for which non-containment holds against big-factor groups in every position is "
                        "not decided here; standard positions are checked directly"}};
  r.summary.push_back("theorem m=" + std::to_string(m) + " k_max=" + std::to_string(k_max) + ": (i) " +
                      verdict(part1) + " over " + std::to_string(entries.size()) + " groups, (ii) " +
                      (m >= threshold.m0_planes ? verdict(part2_ok) : "not-applicable") + ", (iii) " +
                      verdict(part3) + "; m0_planes " + std::to_string(threshold.m0_planes) + ", m0_total " +
                      std::to_string(threshold.m0_total) + " -> " + verdict(r.pass));
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

VerificationReport survey_rotation_subgroups(unsigned k_max) {
  Stopwatch sw;
  VerificationReport r;
  r.claim_id = "survey";
  r.parameters = json{{"k_max", k_max}};
  const auto entries = enumerate_degree4_catalog(k_max);
  struct Row {
    std::size_t order = 0;
    bool rotation_group = false;
    bool contained = false;
  };
  std::vector<Row> rows(entries.size());
  parallel_for(entries.size(), [&](std::size_t i) {
    const MatrixGroup w = catalog_group(entries[i].label);
    std::vector<std::size_t> pairs;
    const auto& gens = w.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = a + 1; b < gens.size(); ++b) pairs.push_back(*w.index_of(gens[a] * gens[b]));
    }
    const auto idx = generated_subgroup(w, pairs);
    std::vector<MatrixF> elems;
    for (std::size_t k : idx) elems.push_back(w.elements()[k]);
    std::vector<MatrixF> pair_gens;
    for (std::size_t k : pairs) pair_gens.push_back(w.elements()[k]);
    const MatrixGroup plus =
        MatrixGroup::from_elements(w.ambient(), w.conductor(), pair_gens, std::move(elems), w.name() + "+");
    rows[i].order = plus.order();
    rows[i].rotation_group = is_rotation_group(plus).generates;
    rows[i].contained = arrangement_contains(catalog_arrangement(entries[i].label), isotropy_arrangement(plus)).contained;
  });
  json arr = json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    arr.push_back(json{{"label", entries[i].label},
                       {"rotation_subgroup_order", rows[i].order},
                       {"is_rotation_group", rows[i].rotation_group},
                       {"arrangement_contained_in_W", rows[i].contained}});
  }
  r.pass = true;
  r.certificate = json{{"status", "unverified"}, {"groups", std::move(arr)}};
  r.summary.push_back("survey (unverified): " + std::to_string(entries.size()) + " rotation subgroups listed");
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

}  // namespace rotarr
