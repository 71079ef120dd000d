#include "sympair/report.hpp"

#include "sympair/parallel.hpp"

#include <sstream>
#include <stdexcept>

namespace sympair {

namespace {

const char* status_word(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Note: return "NOTE";
  }
  return "?";
}

std::string bits(Mask x, std::size_t m) { return m == 0 ? "-" : mask_string(x, m); }

std::string composition_text(const std::vector<int>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

}  // namespace

ordered_json to_json(const Rational& r) { return to_string(r); }

ordered_json to_json(const RatVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 of seed + golden-ratio multiple of the index
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Check& Report::add(std::string tag, std::string subject, bool pass, std::string summary) {
  checks_.push_back({std::move(tag), std::move(subject), pass ? Status::Pass : Status::Fail, std::move(summary), {}, {}});
  checks_.back().detail = ordered_json::object();
  return checks_.back();
}

Check& Report::note(std::string tag, std::string subject, std::string summary) {
  Check& c = add(std::move(tag), std::move(subject), true, std::move(summary));
  c.status = Status::Note;
  return c;
}

void Report::set_result(const std::string& key, ordered_json value) { results_[key] = std::move(value); }

bool Report::ok() const {
  for (const auto& c : checks_)
    if (c.status == Status::Fail) return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream out;
  out << "sympair " << command_ << "\n";
  for (const auto& [k, v] : results_.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  std::size_t failed = 0, notes = 0;
  for (const auto& c : checks_) {
    out << "[" << status_word(c.status) << "] " << c.tag << " | " << c.subject << " | " << c.summary << "\n";
    for (const auto& line : c.table) out << "    " << line << "\n";
    failed += c.status == Status::Fail;
    notes += c.status == Status::Note;
  }
  out << "summary: " << checks_.size() << " checks, " << failed << " failed";
  if (notes) out << ", " << notes << " notes";
  out << " -> " << (ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string Report::json() const {
  ordered_json j;
  j["command"] = command_;
  j["ok"] = ok();
  j["results"] = results_;
  ordered_json checks = ordered_json::array();
  for (const auto& c : checks_) {
    checks.push_back({{"tag", c.tag},
                      {"subject", c.subject},
                      {"status", status_word(c.status)},
                      {"summary", c.summary},
                      {"detail", c.detail}});
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string Report::render(const std::string& format) const {
  if (format == "json") return json();
  if (format == "text") return text();
  throw std::invalid_argument("unknown format '" + format + "' (use text or json)");
}

std::string levi_label(const Fan& fan, std::size_t levi) {
  const Levi& l = fan.levi(levi);
  std::string s = fan.system().name() + " levi " + std::to_string(levi) + " {";
  for (std::size_t i = 0; i < l.zero_walls.size(); ++i) s += (i ? "," : "") + std::to_string(l.zero_walls[i]);
  return s + "} dim " + std::to_string(l.dim);
}

// ---------------------------------------------------------------- verify-prasad

namespace {

void add_prasad_identity(Report& rep, std::size_t m) {
  const PrasadCertificate cert = verify_prasad_identity(m);
  Check& c = rep.add("prasad-identity", "(Z/2)^" + std::to_string(m), cert.holds,
                     "sum_I (-1)^{m-|I|} Ind_{A_I} 1 " + std::string(cert.holds ? "=" : "!=") + " omega over " +
                         std::to_string(cert.coefficients.size()) + " characters");
  ordered_json terms = ordered_json::array(), coeffs = ordered_json::array();
  for (const auto& t : cert.terms) {
    c.table.push_back("I=" + bits(t.i, m) + " sign " + (t.sign > 0 ? "+1" : "-1") + " Ind_{A_I} 1 has " +
                      std::to_string(t.characters) + " constituents");
    terms.push_back({{"I", bits(t.i, m)}, {"sign", t.sign}, {"constituents", t.characters}});
  }
  for (const auto& k : cert.coefficients) {
    c.table.push_back("chi=" + bits(k.chi, m) + " coefficient " + std::to_string(k.coefficient) + " expected " +
                      std::to_string(k.expected));
    coeffs.push_back({{"chi", bits(k.chi, m)}, {"coefficient", k.coefficient}, {"expected", k.expected}});
  }
  c.detail["terms"] = terms;
  c.detail["coefficients"] = coeffs;
}

void add_levi_table(Report& rep, const ThetaPreset& p) {
  const auto levis = enumerate_elliptic_levis(p);
  const std::size_t m = p.m();
  bool product_ok = true, compositions_ok = true;
  ordered_json rows = ordered_json::array();
  std::vector<std::string> table{pad("I", std::max<std::size_t>(m, 1) + 2) + pad("label", 14) + pad("sign", 6) +
                                 pad("ker1", 6) + "|proj_I B|"};
  for (const auto& d : levis) {
    product_ok = product_ok && d.ker1_size * d.mab_index == (std::uint64_t{1} << d.size);
    std::string label = d.composition.empty() ? "-" : composition_text(d.composition);
    if (!d.composition.empty())
      compositions_ok = compositions_ok && d.ker1_size == (std::uint64_t{1} << (d.composition.size() - 1));
    table.push_back(pad(bits(d.i, m), std::max<std::size_t>(m, 1) + 2) + pad(label, 14) +
                    pad(d.sign > 0 ? "+1" : "-1", 6) + pad(std::to_string(d.ker1_size), 6) +
                    std::to_string(d.mab_index));
    ordered_json r{{"I", bits(d.i, m)}, {"sign", d.sign}, {"ker1", d.ker1_size}, {"mab_index", d.mab_index}};
    if (!d.composition.empty()) r["composition"] = d.composition;
    rows.push_back(r);
  }
  const bool count_ok = levis.size() == (std::size_t{1} << m);
  Check& c = rep.add("elliptic-levis", p.name, product_ok && count_ok,
                     std::to_string(levis.size()) + " classes, ker1 * |proj_I B| = 2^|I| for each");
  c.table = table;
  c.detail["rows"] = rows;
  if (p.family == "U" && p.validated)
    rep.add("ker1-compositions", p.name, compositions_ok, "ker1 = 2^{k-1} for every composition of length k");
}

void add_steinberg(Report& rep, const ThetaPreset& p) {
  const std::size_t m = p.m();
  const ReducedOmega w = prasad_omega(p);
  rep.set_result("omega", bits(w.character, m));
  rep.set_result("omega_on_B", w.effective_trivial() ? "trivial" : "nontrivial");
  for (const auto& r : steinberg_all(p)) {
    const std::string subject = p.name + " chi=" + bits(r.chi, m);
    const std::string summary = "multiplicity " + std::to_string(r.multiplicity) + ", [chi = omega on B] = " +
                                std::to_string(r.expected);
    Check& c = p.validated || r.matches() ? rep.add("steinberg-multiplicity", subject, r.matches(), summary)
                                          : rep.note("steinberg-multiplicity", subject, summary + " (unvalidated preset)");
    ordered_json terms = ordered_json::array();
    for (const auto& t : r.terms) {
      c.table.push_back("I=" + bits(t.i, m) + " sign " + (t.sign > 0 ? "+1" : "-1") + " ker1 " + std::to_string(t.ker1) +
                        " trivial " + (t.trivial ? "yes" : "no") + " -> " + std::to_string(t.contribution));
      terms.push_back({{"I", bits(t.i, m)}, {"sign", t.sign}, {"ker1", t.ker1}, {"trivial", t.trivial},
                       {"contribution", t.contribution}});
    }
    c.detail["multiplicity"] = r.multiplicity;
    c.detail["expected"] = r.expected;
    c.detail["terms"] = terms;
  }
}

}  // namespace

Report verify_prasad_report(std::size_t m) {
  Report rep("verify-prasad --m " + std::to_string(m));
  add_prasad_identity(rep, m);
  return rep;
}

Report verify_prasad_report(const ThetaPreset& p) {
  Report rep("verify-prasad --preset " + p.name);
  rep.set_result("preset", p.name);
  rep.set_result("delta_minus", p.m());
  rep.set_result("B", p.b.to_string());
  rep.set_result("validated", p.validated);
  add_prasad_identity(rep, p.m());
  add_levi_table(rep, p);
  if (p.m() <= 10) {
    const auto lat = a_subgroup_lattice_check(p);
    rep.add("a-subgroup-lattice", p.name, lat.ok(),
            "A_I + A_J = A_{I cap J} on " + std::to_string(lat.pairs) + " pairs");
  }
  add_steinberg(rep, p);
  if (p.family == "U" && p.validated) {
    const CompositionSum cs = composition_identity(p.n);
    const std::int64_t st = steinberg_multiplicity(p, 0).multiplicity;
    rep.add("composition-identity", p.name, cs.sum == 1 && st == cs.sum,
            std::to_string(cs.compositions) + " compositions, signed sum " + std::to_string(cs.sum) +
                ", Steinberg multiplicity " + std::to_string(st));
  }
  if (p.family == "GL" && p.validated && p.m() == 1) {
    const InductionIdentity id = gln_induction_identity();
    Check& c = rep.add("induction-identity", p.name, id.holds, "Ind_1^B 1 - 1 = eta on B = Z/2");
    c.table.push_back("at 0: " + std::to_string(id.at_identity) + " = " + std::to_string(id.eta_identity));
    c.table.push_back("at 1: " + std::to_string(id.at_generator) + " = " + std::to_string(id.eta_generator));
  }
  return rep;
}

Report verify_prasad_all_presets_report(int nmax) {
  Report rep("verify-prasad --all-presets");
  for (const std::string family : {"GL", "U"})
    for (int n = 1; n <= nmax; ++n) {
      const Report sub = verify_prasad_report(builtin_preset(family, n));
      for (const auto& c : sub.checks()) {
        Check& k = rep.add(c.tag, c.subject, c.status != Status::Fail, c.summary);
        k.status = c.status;
        k.detail = c.detail;
      }
    }
  return rep;
}

// ---------------------------------------------------------------- ortho

namespace {

struct SetJob {
  std::string subject;
  std::optional<OrthogonalSet> set;
  std::size_t levi = 0;
  bool positive = true;
  std::uint64_t seed = 0;
};

ordered_json witness_json(const RatVector& h) { return to_json(h); }

std::vector<Check> check_set(const OrthogonalSet& y, const std::string& subject, std::size_t samples,
                             std::mt19937_64& rng) {
  std::vector<Check> out;
  const auto pts = sample_points(y, samples, rng);
  const PartitionReport pu = partition_of_unity_check(y, pts);
  Check c{"partition-of-unity", subject, pu.ok() ? Status::Pass : Status::Fail,
          std::to_string(pu.evaluated) + " points, " + std::to_string(pu.violations.size()) + " violations", {}};
  c.detail["evaluated"] = pu.evaluated;
  if (!pu.ok()) {
    c.summary += ", witness H = " + to_string(pu.violations.front().first) + " value " +
                 std::to_string(pu.violations.front().second);
    c.detail["witness"] = witness_json(pu.violations.front().first);
  }
  out.push_back(std::move(c));

  const Fan& fan = y.fan();
  bool ok = true;
  Check s{"support-bound", subject, Status::Pass, "", {}};
  Rational worst = -1;
  for (auto q : fan.levi(y.levi()).cones) {
    const SupportReport sb = support_bound_check(y, q, pts);
    ok = ok && sb.ok();
    s.table.push_back("Q=" + sign_string(fan.cone(q).signs) + " nonzero " + std::to_string(sb.nonzero) + " c " +
                      to_string(sb.empirical_c) + " bound " + to_string(sb.bound) +
                      (sb.unbounded ? " UNBOUNDED" : "") +
                      (sb.homogeneity_violations ? " homogeneity violations " + std::to_string(sb.homogeneity_violations) : ""));
    if (!sb.ok() && !s.detail.contains("witness")) s.detail["witness"] = witness_json(sb.witness);
    if (sb.bound > 0 && (worst < 0 || sb.empirical_c / sb.bound > worst)) worst = sb.empirical_c / sb.bound;
  }
  s.status = ok ? Status::Pass : Status::Fail;
  s.summary = "|H^Q| <= c sup|Y^Q_P| on " + std::to_string(fan.levi(y.levi()).cones.size()) +
              " cones, largest c/bound " + to_string(worst < 0 ? Rational(0) : worst);
  out.push_back(std::move(s));

  if (y.is_positive()) {
    // keep drawing until enough points off the hull boundary have been compared
    HullCoherenceReport hc = hull_coherence_check(y, pts);
    for (int round = 0; hc.agree + hc.disagree < samples && round < 20; ++round) {
      const auto more = sample_points(y, samples, rng);
      const HullCoherenceReport extra = hull_coherence_check(y, more);
      hc.agree += extra.agree;
      hc.disagree += extra.disagree;
      hc.boundary += extra.boundary;
      hc.witnesses.insert(hc.witnesses.end(), extra.witnesses.begin(), extra.witnesses.end());
    }
    const bool enough = hc.agree + hc.disagree >= samples;
    Check h{"hull-membership", subject, hc.ok() && enough ? Status::Pass : Status::Fail,
            std::to_string(hc.agree + hc.disagree) + " off-boundary points, " + std::to_string(hc.disagree) +
                " disagreements, " + std::to_string(hc.boundary) + " boundary points skipped", {}};
    if (!hc.ok()) {
      h.summary += ", witness H = " + to_string(hc.witnesses.front());
      h.detail["witness"] = witness_json(hc.witnesses.front());
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<SetJob> random_jobs(const OrthoOptions& o, bool with_nonpositive) {
  std::vector<SetJob> jobs;
  const Fan& fan = *o.fan;
  for (std::size_t l = 0; l < fan.levis().size(); ++l) {
    jobs.push_back({levi_label(fan, l) + " positive", std::nullopt, l, true, derived_seed(o.seed, 2 * l)});
    if (with_nonpositive && fan.levi(l).chambers.size() > 1)
      jobs.push_back({levi_label(fan, l) + " non-positive", std::nullopt, l, false, derived_seed(o.seed, 2 * l + 1)});
  }
  return jobs;
}

void require_fan(const OrthoOptions& o) {
  if (!o.fan) throw std::invalid_argument("ortho: a system or a fixture is required");
}

}  // namespace

Report ortho_check_report(const OrthoOptions& o) {
  require_fan(o);
  if (o.samples < 1) throw std::invalid_argument("ortho check: --samples must be >= 1");
  Report rep("ortho check");
  rep.set_result("system", o.fan->system().name());
  rep.set_result("seed", o.seed);
  rep.set_result("samples", o.samples);
  std::vector<SetJob> jobs;
  if (o.fixture) {
    jobs.push_back({"fixture " + levi_label(*o.fan, o.fixture->levi()), o.fixture, o.fixture->levi(),
                    o.fixture->is_positive(), derived_seed(o.seed, 0)});
  } else {
    jobs = random_jobs(o, true);
  }
  const auto results = parallel_map(jobs.size(), [&](std::size_t i) {
    std::mt19937_64 rng(jobs[i].seed);
    const SetJob& job = jobs[i];
    const OrthogonalSet y = job.set ? *job.set
                            : job.positive ? random_positive_set(o.fan, job.levi, rng)
                                           : random_nonpositive_set(o.fan, job.levi, rng);
    return check_set(y, job.subject, o.samples, rng);
  });
  for (const auto& checks : results)
    for (const auto& c : checks) {
      Check& k = rep.add(c.tag, c.subject, c.status == Status::Pass, c.summary);
      k.table = c.table;
      k.detail = c.detail;
    }
  return rep;
}

namespace {

struct VolumeOutcome {
  std::string subject;
  Rational analytic, polytope;
  bool positive = false, consistent = false, lower = false, agree = false;
  bool homogeneous = true, translation = true;
  std::size_t directions = 0, skipped = 0;
};

VolumeOutcome volume_outcome(const OrthogonalSet& y, const std::string& subject, std::mt19937_64& rng) {
  VolumeOutcome v;
  v.subject = subject;
  const AnalyticVolume a = volume_analytic(y, 3);
  v.analytic = a.value;
  v.consistent = a.consistent;
  v.lower = a.lower_terms_vanish;
  v.directions = a.directions.size();
  v.skipped = a.skipped;
  v.positive = y.is_positive();
  if (v.positive) {
    v.polytope = volume_polytope(y);
    v.agree = v.polytope == v.analytic;
    const std::size_t d = y.fan().levi(y.levi()).dim;
    const Rational t(uniform_int(rng, 1, 5), uniform_int(rng, 1, 3));
    Rational td = 1;
    for (std::size_t i = 0; i < d; ++i) td *= t;
    v.homogeneous = volume_polytope(y.scaled(t)) == td * v.polytope && volume_analytic(y.scaled(t), 3).value == td * v.analytic;
    RatVector shift(y.fan().dim());
    for (auto& x : shift) x = random_rational(rng, 6, 3);
    shift = y.fan().levi(y.levi()).proj.apply(shift);
    v.translation = volume_polytope(y.translated(shift)) == v.polytope;
  }
  return v;
}

void add_volume_checks(Report& rep, const VolumeOutcome& v) {
  rep.add("volume-direction-independence", v.subject, v.consistent && v.lower,
          "analytic limit " + to_string(v.analytic) + " along " + std::to_string(v.directions) + " directions (" +
              std::to_string(v.skipped) + " non-generic skipped)" + (v.lower ? "" : ", singular terms do not cancel"));
  if (v.positive) {
    rep.add("volume-cross-check", v.subject, v.agree,
            "polytope " + to_string(v.polytope) + (v.agree ? " = " : " != ") + "analytic " + to_string(v.analytic));
    rep.add("volume-homogeneity", v.subject, v.homogeneous && v.translation,
            std::string("dilation ") + (v.homogeneous ? "ok" : "FAILED") + ", translation " +
                (v.translation ? "ok" : "FAILED"));
  }
}

}  // namespace

Report ortho_volume_report(const OrthoOptions& o) {
  require_fan(o);
  Report rep("ortho volume");
  rep.set_result("system", o.fan->system().name());
  if (o.fixture) {
    std::mt19937_64 rng(derived_seed(o.seed, 0));
    const VolumeOutcome v = volume_outcome(*o.fixture, "fixture " + levi_label(*o.fan, o.fixture->levi()), rng);
    rep.set_result("volume", to_string(v.analytic));
    rep.set_result("positive", v.positive);
    add_volume_checks(rep, v);
    return rep;
  }
  if (o.sets < 1) throw std::invalid_argument("ortho volume: --sets must be >= 1");
  rep.set_result("seed", o.seed);
  rep.set_result("sets", o.sets);
  const Fan& fan = *o.fan;
  const std::size_t proper = std::max<std::size_t>(fan.levis().size() - 1, 1);
  const auto outcomes = parallel_map(o.sets + proper, [&](std::size_t i) {
    std::mt19937_64 rng(derived_seed(o.seed, i));
    if (i < o.sets) {
      const std::size_t l = i % proper;
      return volume_outcome(random_positive_set(o.fan, l, rng, i % 5 == 4),
                            levi_label(fan, l) + " positive #" + std::to_string(i), rng);
    }
    const std::size_t l = i - o.sets;
    if (fan.levi(l).chambers.size() < 2) return volume_outcome(random_positive_set(o.fan, l, rng), levi_label(fan, l) + " positive", rng);
    return volume_outcome(random_nonpositive_set(o.fan, l, rng), levi_label(fan, l) + " non-positive", rng);
  });
  for (const auto& v : outcomes) add_volume_checks(rep, v);
  return rep;
}

Report ortho_ehrhart_report(const OrthoOptions& o) {
  require_fan(o);
  if (o.kmax < 1) throw std::invalid_argument("ortho ehrhart: --kmax must be >= 1");
  Report rep("ortho ehrhart");
  rep.set_result("system", o.fan->system().name());
  std::mt19937_64 rng(derived_seed(o.seed, 0));
  const OrthogonalSet y = o.fixture ? *o.fixture : random_positive_set(o.fan, o.fan->minimal_levi(), rng);
  const std::string subject = (o.fixture ? "fixture " : "random ") + levi_label(*o.fan, y.levi());
  const RatVector x0 = default_dilation_direction(*o.fan);
  const ApproximationReport a = approximation_check(y, o.kmax, x0);
  rep.set_result("points", orthogonal_set_to_json(y)["points"]);
  rep.set_result("dilation_direction", to_json(x0));
  rep.set_result("volume", to_string(a.volume));
  rep.set_result("c_fit", to_string(a.c_fit));
  rep.set_result("c_bound", to_string(a.c_bound));

  Check& fit = rep.add("quasi-polynomial-fit", subject, a.fits_exact(),
                       "degree " + std::to_string(a.degree) + " fit reproduces every sampled count");
  ordered_json rows = ordered_json::array();
  fit.table.push_back(pad("k", 4) + pad("period", 8) + pad("constant term", 18) + pad("normalized", 18) +
                      pad("|error|", 18) + "c_fit/k");
  bool within = true;
  for (const auto& r : a.rows) {
    const Rational allowed = a.c_fit / r.refine;
    within = within && r.fit && r.error <= allowed;
    const std::string ct = r.fit ? to_string(r.fit->constant_term()) : "no fit";
    fit.table.push_back(pad(std::to_string(r.refine), 4) + pad(r.fit ? std::to_string(r.fit->period) : "-", 8) +
                        pad(ct, 18) + pad(to_string(r.normalized), 18) + pad(to_string(r.error), 18) +
                        to_string(allowed));
    ordered_json counts = ordered_json::array();
    for (const auto& c : r.counts) counts.push_back(c.str());
    rows.push_back({{"k", r.refine},
                    {"period", r.fit ? r.fit->period : 0},
                    {"constant_term", ct},
                    {"normalized", to_string(r.normalized)},
                    {"error", to_string(r.error)},
                    {"counts", counts}});
  }
  fit.detail["rows"] = rows;
  rep.add("approximation-bound", subject, within && a.c_fit <= a.c_bound,
          "|normalized - volume| <= c/k for k = 1.." + std::to_string(o.kmax) + " with c = " + to_string(a.c_fit) +
              " (a priori bound " + to_string(a.c_bound) + ")");
  return rep;
}

// ---------------------------------------------------------------- tori and presets

Report h1_report(const LatticeWithAction& x, const std::string& label) {
  Report rep("h1");
  const FiniteAbelianGroup g = torus_h1(x);
  rep.set_result("h1", g.to_string());
  rep.set_result("order", g.order().str());
  rep.add("torus-h1", label,
          true, "rank " + std::to_string(x.rank()) + ", |Gamma| = " + std::to_string(x.group_elements().size()) +
                    ", H^1 = " + g.to_string());
  return rep;
}

Report fibers_report(const LatticeWithAction& x, std::int64_t h1_g, const std::string& label) {
  const FiberCount f = inner_form_fiber_count(x, h1_g);
  if (!f.integral())
    throw std::invalid_argument("inconsistent inputs: |H^1(F,T)| = " + f.h1_t.order().str() +
                                " is not divisible by |H^1(F,G)| = " + std::to_string(h1_g));
  Report rep("fibers");
  rep.set_result("fiber_count", to_string(f.count));
  rep.set_result("h1_T", f.h1_t.to_string());
  rep.set_result("h1_G", h1_g);
  rep.add("fiber-count", label, true,
          "|H^1(F,T)| / |H^1(F,G)| = " + f.h1_t.order().str() + " / " + std::to_string(h1_g) + " = " + to_string(f.count));
  return rep;
}

Report list_levis_report(const ThetaPreset& p) {
  Report rep("list-levis --preset " + p.name);
  rep.set_result("preset", p.name);
  rep.set_result("rows", std::size_t{1} << p.m());
  add_levi_table(rep, p);
  return rep;
}

Report validate_report(const nlohmann::json& j, const std::string& label) {
  Report rep("validate");
  if (!j.is_object()) throw std::invalid_argument(label + ": fixture must be a JSON object");
  if (j.contains("points")) {
    const OrthogonalSet y = orthogonal_set_from_json(j);
    rep.set_result("kind", "orthogonal set");
    rep.set_result("positive", y.is_positive());
    ordered_json r = ordered_json::array();
    for (const auto& x : y.multipliers()) r.push_back(to_string(x));
    rep.set_result("multipliers", r);
    rep.add("orthogonal-set", label, true,
            levi_label(y.fan(), y.levi()) + ", " + std::to_string(y.points().size()) + " points, coherent on " +
                std::to_string(y.multipliers().size()) + " adjacent pairs");
  } else if (j.contains("delta_minus")) {
    const ThetaPreset p = preset_from_json(j);
    rep.set_result("kind", "preset");
    rep.add("preset", label, true,
            p.name + ": |Delta_min| = " + std::to_string(p.delta_min_size) + ", |Delta_-| = " + std::to_string(p.m()) +
                ", B = " + p.b.to_string() + (p.validated ? "" : " (user-supplied, no closed form to compare with)"));
  } else if (j.contains("ambient_rank")) {
    const LatticeWithAction x = lattice_from_json(j);
    rep.set_result("kind", "lattice with action");
    rep.add("lattice-with-action", label, true,
            "rank " + std::to_string(x.rank()) + ", closed group of order " + std::to_string(x.group_elements().size()));
  } else if (j.contains("roots")) {
    const Fan fan(root_system_from_json(j));
    rep.set_result("kind", "root system");
    rep.add("root-system", label, true,
            std::to_string(fan.system().roots().size()) + " roots, " + std::to_string(fan.chambers().size()) +
                " chambers, " + std::to_string(fan.cones().size()) + " cones, " + std::to_string(fan.levis().size()) +
                " Levis");
  } else {
    throw std::invalid_argument(label + ": unrecognized fixture (expected points, delta_minus, ambient_rank or roots)");
  }
  return rep;
}

}  // namespace sympair
