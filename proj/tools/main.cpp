// rotarr: command line front end for the verification reports.

#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotarr/catalog.hpp"
#include "rotarr/parallel.hpp"
#include "rotarr/serialize.hpp"
#include "rotarr/verify.hpp"

namespace {

using rotarr::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string json_path;
  unsigned jobs = 1;
  bool timings = false;
};

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Usage(what);
}

void emit(const Options& opt, const json& j) {
  if (!opt.json_path.empty()) rotarr::write_json_file(opt.json_path, j);
}

int finish(const Options& opt, const std::vector<rotarr::VerificationReport>& reports) {
  bool all = true;
  for (const auto& r : reports) {
    for (const auto& line : r.summary) std::cout << line << "\n";
    if (opt.timings) std::cout << "  (" << r.runtime_ms << " ms)\n";
    all = all && r.pass;
  }
  if (reports.size() == 1) {
    emit(opt, rotarr::to_json(reports.front(), opt.timings));
  } else {
    emit(opt, rotarr::to_json(reports, opt.timings));
  }
  if (!all) {
    for (const auto& r : reports) {
      if (!r.pass) std::cerr << "FAIL " << r.claim_id << ": " << rotarr::dump(r.certificate) << "\n";
    }
  }
  return all ? kPass : kFail;
}

// A catalog label, "G(m,1,2)", or a path to a group JSON file.
struct GroupSource {
  std::optional<unsigned> gm12;
  std::optional<rotarr::MatrixGroup> group;
  std::string label;
};

GroupSource load_group(const std::string& arg) {
  GroupSource s;
  s.label = arg;
  static const std::regex gm(R"(G\((\d+),1,2\))");
  std::smatch match;
  if (std::regex_match(arg, match, gm)) {
    s.gm12 = static_cast<unsigned>(std::stoul(match[1]));
    require(*s.gm12 >= 1, "G(m,1,2) needs m >= 1");
    return s;
  }
  if (std::filesystem::is_regular_file(arg)) {
    s.group = rotarr::group_from_json(rotarr::read_json_file(arg));
    s.label = s.group->name();
    return s;
  }
  s.label = rotarr::catalog_entry(arg).label;
  s.group = rotarr::catalog_group(s.label);
  return s;
}

int cmd_catalog_list(const Options& opt, unsigned k_max) {
  json arr = json::array();
  for (const auto& e : rotarr::enumerate_degree4_catalog(k_max)) {
    std::cout << e.label << "  degree " << e.degree << "  conductor " << e.conductor_required
              << (e.big_factor ? "  big-factor" : "") << "\n";
    arr.push_back(json{{"label", e.label},
                       {"degree", e.degree},
                       {"conductor", e.conductor_required},
                       {"big_factor", e.big_factor}});
  }
  emit(opt, json{{"k_max", k_max}, {"entries", std::move(arr)}});
  return kPass;
}

int cmd_group_show(const Options& opt, const std::string& arg) {
  GroupSource s = load_group(arg);
  const rotarr::MatrixGroup g = s.gm12 ? rotarr::realified_gm12(*s.gm12) : *s.group;
  const auto& fixed = g.fixed_spaces();
  std::vector<std::size_t> hist(g.ambient() + 1, 0);
  for (std::size_t i = 1; i < g.order(); ++i) ++hist[g.ambient() - fixed[i].dim()];
  json j = rotarr::group_to_json(g);
  json h = json::object();
  for (std::size_t c = 1; c < hist.size(); ++c) h[std::to_string(c)] = hist[c];
  j["order"] = g.order();
  j["fix_codim_histogram"] = h;
  j["reflection_group"] = rotarr::is_reflection_group(g).generates;
  j["rotation_group"] = rotarr::is_rotation_group(g).generates;
  std::cout << g.name() << ": degree " << g.ambient() << ", conductor " << g.conductor() << ", order " << g.order()
            << "\n  fix codim histogram:";
  for (std::size_t c = 1; c < hist.size(); ++c) std::cout << " " << c << ":" << hist[c];
  std::cout << "\n  reflection group: " << (j["reflection_group"].get<bool>() ? "yes" : "no")
            << ", rotation group: " << (j["rotation_group"].get<bool>() ? "yes" : "no") << "\n";
  emit(opt, j);
  return kPass;
}

int cmd_arrangement(const Options& opt, const std::string& arg, const std::string& kind) {
  GroupSource s = load_group(arg);
  rotarr::Arrangement a;
  if (s.gm12) {
    require(kind == "isotropy", "G(m,1,2) has no reflections; use --kind isotropy");
    a = rotarr::gm12_arrangement(*s.gm12);
  } else if (kind == "reflection") {
    a = rotarr::reflection_arrangement(*s.group);
  } else {
    a = rotarr::isotropy_arrangement(*s.group);
  }
  const auto profile = a.dimension_profile();
  std::cout << s.label << " " << kind << " arrangement: " << a.size() << " members; by dimension";
  for (std::size_t d = 0; d < profile.size(); ++d) std::cout << " " << d << ":" << profile[d];
  std::cout << "\n";
  emit(opt, rotarr::to_json(a));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of subspace arrangements of G(m,1,2) against real reflection groups"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--json", opt.json_path, "Write the JSON report to this path");
  app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_flag("--timings", opt.timings, "Print and record runtimes (JSON is then not byte-stable)");

  unsigned m = 2, p = 2, q = 2, k_max = 8;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::string route = "auto", kind = "isotropy", target;
  bool survey = false;

  auto* ag = app.add_subcommand("lemma-ag", "Planes of the G(m,1,2) arrangement");
  ag->add_option("--m", m)->required();
  ag->add_option("--route", route)->check(CLI::IsMember({"auto", "closure", "monomial"}));

  auto* rot = app.add_subcommand("rotation", "G(m,1,2) is a rotation group without reflections");
  rot->add_option("--m", m)->required();

  auto* plane = app.add_subcommand("lemma-plane", "Seeded plane meet-count and phase checks");
  plane->add_option("--m", m)->required();
  plane->add_option("--samples", samples);
  plane->add_option("--seed", seed);

  auto* dich = app.add_subcommand("dichotomy", "Plane dichotomy for I2(p)xI2(q)");
  dich->add_option("--p", p)->required();
  dich->add_option("--q", q)->required();

  auto* thr = app.add_subcommand("threshold", "Counting thresholds over the big-factor catalog");

  auto* thm = app.add_subcommand("theorem", "Three-part non-containment certificate");
  thm->add_option("--m", m)->required();
  thm->add_option("--k-max", k_max);
  thm->add_option("--samples", samples, "Lemma-plane samples inside part (iii)")->default_val(200);
  thm->add_option("--seed", seed);
  thm->add_flag("--survey", survey, "Append an unverified listing of rotation subgroups W+");

  auto* cat = app.add_subcommand("catalog", "Reflection group catalog");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List degree-4 catalog labels");
  cat_list->add_option("--k-max", k_max);

  auto* grp = app.add_subcommand("group", "Matrix groups");
  grp->require_subcommand(1);
  auto* grp_show = grp->add_subcommand("show", "Show a catalog label, G(m,1,2) or group file");
  grp_show->add_option("target", target)->required();

  auto* arr = app.add_subcommand("arrangement", "Subspace arrangements");
  arr->require_subcommand(1);
  auto* arr_compute = arr->add_subcommand("compute", "Arrangement of a catalog label, G(m,1,2) or group file");
  arr_compute->add_option("target", target)->required();
  arr_compute->add_option("--kind", kind)->check(CLI::IsMember({"isotropy", "reflection"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  rotarr::set_default_jobs(opt.jobs);
  try {
    if (*ag) {
      require(m >= 1, "lemma-ag needs m >= 1");
      return finish(opt, {rotarr::verify_lemma_AG(m, route)});
    }
    if (*rot) {
      require(m >= 2 && m <= rotarr::kClosureRouteMaxM, "rotation needs 2 <= m <= 100");
      return finish(opt, {rotarr::verify_rotation_group(m)});
    }
    if (*plane) {
      require(m >= 2, "lemma-plane needs m >= 2");
      require(samples >= 1, "lemma-plane needs samples >= 1");
      return finish(opt, {rotarr::verify_lemma_plane(m, samples, seed)});
    }
    if (*dich) {
      require(p >= 2 && q >= 2, "dichotomy needs p, q >= 2");
      return finish(opt, {rotarr::verify_dichotomy(p, q)});
    }
    if (*thr) return finish(opt, {rotarr::verify_threshold()});
    if (*thm) {
      require(m >= 2, "theorem needs m >= 2");
      require(k_max >= 2, "theorem needs k-max >= 2");
      std::vector<rotarr::VerificationReport> reports{
          rotarr::verify_theorem(m, k_max, {.plane_samples = samples, .seed = seed})};
      if (survey) reports.push_back(rotarr::survey_rotation_subgroups(k_max));
      return finish(opt, reports);
    }
    if (*cat_list) {
      require(k_max >= 2, "catalog list needs k-max >= 2");
      return cmd_catalog_list(opt, k_max);
    }
    if (*grp_show) return cmd_group_show(opt, target);
    if (*arr_compute) return cmd_arrangement(opt, target, kind);
  } catch (const rotarr::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const rotarr::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const rotarr::GroupTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
