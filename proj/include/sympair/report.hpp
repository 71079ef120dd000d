#pragma once

#include "sympair/lattice_count.hpp"
#include "sympair/prasad.hpp"

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sympair {

using ordered_json = nlohmann::ordered_json;

// Note: a failed check that is reported as data (conjecture probing) without failing the run.
enum class Status { Pass, Fail, Note };

struct Check {
  std::string tag;      // which identity or property is being checked
  std::string subject;  // what it was checked on
  Status status = Status::Pass;
  std::string summary;
  std::vector<std::string> table;  // extra lines for the text form
  ordered_json detail = ordered_json::object();
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Check& add(std::string tag, std::string subject, bool pass, std::string summary);
  Check& note(std::string tag, std::string subject, std::string summary);
  // Top-level results (e.g. the computed volume), printed before the checks.
  void set_result(const std::string& key, ordered_json value);

  bool ok() const;
  int exit_code() const { return ok() ? 0 : 2; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::string& command() const { return command_; }

  std::string text() const;
  std::string json() const;
  std::string render(const std::string& format) const;

 private:
  std::string command_;
  ordered_json results_ = ordered_json::object();
  std::vector<Check> checks_;
};

ordered_json to_json(const Rational& r);
ordered_json to_json(const RatVector& v);

// verify-prasad
Report verify_prasad_report(std::size_t m);
Report verify_prasad_report(const ThetaPreset& p);
Report verify_prasad_all_presets_report(int nmax = 8);

// ortho
struct OrthoOptions {
  std::shared_ptr<const Fan> fan;
  std::optional<OrthogonalSet> fixture;  // replaces the random sets when given
  std::size_t samples = 200;             // sample points per set
  std::size_t sets = 20;                 // random sets (volume)
  std::uint64_t seed = 1;
  std::int64_t kmax = 8;
};
Report ortho_check_report(const OrthoOptions& o);
Report ortho_volume_report(const OrthoOptions& o);
Report ortho_ehrhart_report(const OrthoOptions& o);

// tori and presets
Report h1_report(const LatticeWithAction& x, const std::string& label);
Report fibers_report(const LatticeWithAction& x, std::int64_t h1_g, const std::string& label);
Report list_levis_report(const ThetaPreset& p);
// Parses and validates any fixture kind (orthogonal set, lattice, preset, root system).
Report validate_report(const nlohmann::json& fixture, const std::string& label);

std::string levi_label(const Fan& fan, std::size_t levi);

// Seed of the i-th random object of a run: all sampling flows from mt19937_64 seeded with it.
std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace sympair
