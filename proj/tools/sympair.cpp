// Command-line front end: every command builds a Report and prints it as text or JSON.
// Exit codes: 0 all checks pass, 2 a mathematical check failed, 1 usage or fixture error.

#include "sympair/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace sympair;

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fixture '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("fixture '" + path + "' is not valid JSON: " + e.what());
  }
}

struct Options {
  std::string format = "text";
  std::string output;
  // verify-prasad, list-levis
  std::optional<std::size_t> m;
  std::string preset;
  bool all_presets = false;
  int nmax = 8;
  // ortho, h1, fibers, validate
  std::string system;
  std::vector<std::string> fixtures;
  std::size_t samples = 200;
  std::size_t sets = 20;
  std::uint64_t seed = 1;
  std::int64_t kmax = 8;
  std::int64_t h1g = 1;
};

std::string single_fixture(const Options& o) {
  if (o.fixtures.size() != 1) throw std::invalid_argument("exactly one --fixture is required");
  return o.fixtures.front();
}

OrthoOptions ortho_options(const Options& o) {
  OrthoOptions r;
  r.samples = o.samples;
  r.sets = o.sets;
  r.seed = o.seed;
  r.kmax = o.kmax;
  if (o.fixtures.size() > 1) throw std::invalid_argument("ortho takes at most one --fixture");
  if (!o.fixtures.empty()) {
    nlohmann::json j = load_json(o.fixtures.front());
    if (!o.system.empty()) {
      if (!j.contains("system")) j["system"] = o.system;
      else if (j["system"].is_string() && j["system"].get<std::string>() != o.system)
        throw std::invalid_argument("--system " + o.system + " does not match the fixture's system " +
                                    j["system"].get<std::string>());
    }
    r.fixture = orthogonal_set_from_json(j);
    r.fan = r.fixture->fan_ptr();
  } else if (!o.system.empty()) {
    r.fan = builtin_fan(o.system);
  } else {
    throw std::invalid_argument("ortho needs --system or --fixture");
  }
  return r;
}

ThetaPreset selected_preset(const Options& o) {
  if (!o.preset.empty() && !o.fixtures.empty()) throw std::invalid_argument("give either --preset or --fixture");
  if (!o.preset.empty()) return preset_from_selector(o.preset);
  if (o.fixtures.size() == 1) return preset_from_json(load_json(o.fixtures.front()));
  throw std::invalid_argument("a preset is required (--preset FAMILY:n or --fixture PATH)");
}

Report run_verify_prasad(const Options& o) {
  const int selectors = (o.m ? 1 : 0) + (!o.preset.empty() || !o.fixtures.empty() ? 1 : 0) + (o.all_presets ? 1 : 0);
  if (selectors != 1) throw std::invalid_argument("verify-prasad needs exactly one of --m, --preset/--fixture, --all-presets");
  if (o.m) {
    if (*o.m > 16) throw std::invalid_argument("--m must be at most 16");
    return verify_prasad_report(*o.m);
  }
  if (o.all_presets) {
    if (o.nmax < 1 || o.nmax > 16) throw std::invalid_argument("--nmax must lie in 1..16");
    return verify_prasad_all_presets_report(o.nmax);
  }
  return verify_prasad_report(selected_preset(o));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sympair: exact checks for Galois symmetric pair combinatorics"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", o.output, "Write the report to this file instead of stdout");

  auto* vp = app.add_subcommand("verify-prasad", "Check the reduced Prasad and Steinberg identities");
  vp->add_option("--m", o.m, "Rank of (Z/2)^m for the character identity");
  vp->add_option("--preset", o.preset, "Built-in preset FAMILY:n (GL or U)");
  vp->add_option("--fixture", o.fixtures, "Preset fixture (JSON)");
  vp->add_flag("--all-presets", o.all_presets, "All built-in presets GL:n and U:n with n <= --nmax");
  vp->add_option("--nmax", o.nmax, "Largest n for --all-presets");

  auto* ortho = app.add_subcommand("ortho", "Orthogonal set checks");
  ortho->require_subcommand(1);
  std::vector<CLI::App*> ortho_cmds;
  const std::pair<const char*, const char*> ortho_names[] = {
      {"check", "Partition of unity, support bounds and hull membership"},
      {"volume", "Hull volume by polytope and analytic formula"},
      {"ehrhart", "Lattice-count approximation of the volume"}};
  for (const auto& [name, help] : ortho_names) {
    auto* c = ortho->add_subcommand(name, help);
    c->add_option("--system", o.system, "Built-in root system (A1, A2, A3, B2, C2, G2, BC1, BC2, ...)");
    c->add_option("--fixture", o.fixtures, "Orthogonal set fixture (JSON)");
    c->add_option("--samples", o.samples, "Sample points per set")->check(CLI::PositiveNumber);
    c->add_option("--sets", o.sets, "Random sets (volume)")->check(CLI::PositiveNumber);
    c->add_option("--seed", o.seed, "Seed of the mt19937_64 sampling streams");
    c->add_option("--kmax", o.kmax, "Largest refinement (ehrhart)")->check(CLI::PositiveNumber);
    ortho_cmds.push_back(c);
  }

  auto* h1 = app.add_subcommand("h1", "H^1 of a torus from its cocharacter lattice");
  h1->add_option("--fixture", o.fixtures, "Lattice-with-action fixture (JSON)")->required();
  auto* fibers = app.add_subcommand("fibers", "|ker^1(F;T,G)| = |H^1(F,T)| / |H^1(F,G)|");
  fibers->add_option("--fixture", o.fixtures, "Lattice-with-action fixture (JSON)")->required();
  fibers->add_option("--h1g", o.h1g, "|H^1(F,G)|")->required()->check(CLI::PositiveNumber);
  auto* levis = app.add_subcommand("list-levis", "Elliptic twisted Levis of a preset");
  levis->add_option("--preset", o.preset, "Built-in preset FAMILY:n");
  levis->add_option("--fixture", o.fixtures, "Preset fixture (JSON)");
  auto* validate = app.add_subcommand("validate", "Parse and validate fixtures");
  validate->add_option("--fixture", o.fixtures, "Fixture (JSON); repeatable")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    std::optional<Report> rep;
    if (vp->parsed()) {
      rep = run_verify_prasad(o);
    } else if (ortho->parsed()) {
      const OrthoOptions oo = ortho_options(o);
      if (ortho_cmds[0]->parsed()) rep = ortho_check_report(oo);
      else if (ortho_cmds[1]->parsed()) rep = ortho_volume_report(oo);
      else rep = ortho_ehrhart_report(oo);
    } else if (h1->parsed()) {
      const std::string path = single_fixture(o);
      rep = h1_report(lattice_from_json(load_json(path)), path);
    } else if (fibers->parsed()) {
      const std::string path = single_fixture(o);
      rep = fibers_report(lattice_from_json(load_json(path)), o.h1g, path);
    } else if (levis->parsed()) {
      rep = list_levis_report(selected_preset(o));
    } else if (validate->parsed()) {
      Report all("validate");
      for (const auto& path : o.fixtures) {
        const Report one = validate_report(load_json(path), path);
        for (const auto& c : one.checks()) all.add(c.tag, c.subject, c.status != Status::Fail, c.summary);
      }
      rep = std::move(all);
    }
    const std::string out = rep->render(o.format);
    if (o.output.empty()) {
      std::cout << out;
    } else {
      std::ofstream f(o.output, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot write '" + o.output + "'");
      f << out;
    }
    return rep->exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
