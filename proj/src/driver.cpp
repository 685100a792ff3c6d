#include "mtl/driver.hpp"

#include <fstream>
#include <future>
#include <sstream>

#include "mtl/reports.hpp"

namespace mtl {

namespace {

std::vector<NamedElement> targets(const JobConfig& c) {
  if (!c.elements.empty()) return c.elements;
  std::vector<NamedElement> out;
  for (Letter x = 1; static_cast<std::size_t>(x) <= c.basis.rank(); ++x) {
    out.push_back({std::string(1, c.basis.name(x)), Word::letter(x)});
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string structure_text(const FreeBasis& basis, const PeripheralStructure& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    out << "  [" << i << "] <";
    const auto gens = s.entries[i].basis();
    for (std::size_t k = 0; k < gens.size(); ++k) out << (k ? ", " : "") << basis.format(gens[k]);
    out << ">  (" << s.provenance[i] << ")\n";
  }
  return out.str();
}

std::string verification_text(const VerificationReport& v) {
  auto mark = [](bool ok) { return ok ? "ok" : "FAILED"; };
  std::ostringstream out;
  out << "malnormality " << mark(v.malnormal()) << "\n"
      << "generator growth " << mark(v.growth_ok()) << "\n"
      << "twinning " << mark(v.twin_free()) << "\n"
      << "completeness " << mark(v.complete()) << " (" << v.sampled << " sampled)\n";
  return out.str();
}

void add_dot(RunResult& r, const FreeBasis& basis, const PeripheralStructure& s) {
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    r.files.emplace_back("entry_" + std::to_string(i) + ".dot", s.entries[i].to_dot(basis));
  }
}

RunResult growth(const JobConfig& c, const RunOptions& o) {
  RunResult r;
  const auto elems = targets(c);
  const std::vector<Metric> metrics{Metric::conjugacy(), Metric::word()};
  std::vector<std::future<GrowthReport>> jobs;
  for (const auto& e : elems) {
    for (const Metric& m : metrics) {
      jobs.push_back(std::async(std::launch::async, [&c, &e, m] {
        return classify_element(c.alpha, e.word, m, c.bounds.horizon);
      }));
    }
  }
  Json reports = Json::array();
  std::ostringstream text;
  std::size_t k = 0;
  for (const auto& e : elems) {
    for (std::size_t i = 0; i < metrics.size(); ++i, ++k) {
      const GrowthReport g = jobs[k].get();
      text << e.name << " = " << c.basis.format(e.word) << "  " << g.sequence.metric.name()
           << ": " << to_string(g.cls);
      if (g.degree) text << " degree " << *g.degree;
      if (g.rate) text << " rate " << six_digits(*g.rate);
      if (g.certified) text << " (certified)";
      text << "\n";
      reports.push_back(growth_json(c.basis, e.name, g));
    }
  }
  r.summary = text.str();
  r.files.emplace_back("growth.txt", r.summary);
  if (o.json) r.files.emplace_back("growth.json", dump(reports));
  return r;
}

DecompositionResult decompose(const JobConfig& c) {
  return run_decomposition(c.basis, c.alpha, c.splits, c.subgroups, c.bounds);
}

RunResult peripheral(const JobConfig& c, const RunOptions& o) {
  RunResult r;
  const auto d = decompose(c);
  std::ostringstream text;
  text << "case " << d.root_case << "\n"
       << "structure (" << d.structure.entries.size() << " entries)\n"
       << structure_text(c.basis, d.structure) << verification_text(d.verification);
  r.summary = text.str();
  r.status = d.verification.passed() ? 0 : 1;
  r.files.emplace_back("peripheral.txt", r.summary);
  if (o.json) r.files.emplace_back("peripheral.json", dump(peripheral_json(c.basis, d)));
  if (o.dot) add_dot(r, c.basis, d.structure);
  return r;
}

RunResult suspend(const JobConfig& c, const RunOptions& o) {
  RunResult r;
  const auto d = decompose(c);
  const auto p = torus_presentation(c.basis, c.alpha);
  const auto s = relhyp_structure(p, d, c.bounds);
  std::ostringstream text;
  text << "case " << s.case_label << "\n";
  bool ok = d.verification.passed();
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const auto& e = s.entries[i];
    const auto gens = e.subgroup.basis();
    text << "  [" << i << "] <";
    for (std::size_t k = 0; k < gens.size(); ++k) text << (k ? ", " : "") << c.basis.format(gens[k]);
    text << ", " << format(p, e.stable) << ">  k=" << e.exponent
         << (e.verified ? " verified" : " NOT VERIFIED") << "\n";
    if (!e.discrepancy.empty()) text << "      " << e.discrepancy << "\n";
    ok = ok && e.verified;
  }
  for (const auto& id : s.identities) text << id << "\n";
  text << verification_text(d.verification);
  r.summary = text.str();
  r.status = ok ? 0 : 1;
  r.files.emplace_back("suspension.txt", r.summary);
  if (o.json) r.files.emplace_back("suspension.json", dump(suspension_json(p, s)));
  if (o.dot) add_dot(r, c.basis, d.structure);
  return r;
}

RunResult verify(const JobConfig& c, const RunOptions& o) {
  RunResult r;
  Json checks = Json::array();
  std::ostringstream text;
  bool all = true;
  auto check = [&](const std::string& name, bool passed, const std::string& detail) {
    all = all && passed;
    text << (passed ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) text << ": " << detail;
    text << "\n";
    checks.push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
  };

  const Automorphism inv = invert(c.alpha);
  const Automorphism id = Automorphism::identity(c.basis);
  check("inverse automorphism", c.alpha.compose(inv) == id && inv.compose(c.alpha) == id, "");

  const auto p = torus_presentation(c.basis, c.alpha);
  check("mapping torus relators", relators_hold(p), "");

  bool certs = true;
  std::string bad;
  for (const auto& e : targets(c)) {
    const auto g = classify_element(c.alpha, e.word, Metric::conjugacy(), c.bounds.horizon);
    if (g.certificate && !verify_certificate(c.alpha, e.word, *g.certificate)) {
      certs = false;
      bad += (bad.empty() ? "" : ", ") + e.name;
    }
  }
  check("orbit certificates", certs, bad);

  const auto d = decompose(c);
  std::string detail;
  if (!d.verification.malnormal()) detail += "malnormality ";
  if (!d.verification.growth_ok()) detail += "growth ";
  if (!d.verification.twin_free()) detail += "twinning ";
  if (!d.verification.complete()) {
    detail += "completeness (";
    for (std::size_t i = 0; i < d.verification.completeness_failures.size(); ++i) {
      detail += (i ? " " : "") + c.basis.format(d.verification.completeness_failures[i]);
    }
    detail += ")";
  }
  check("peripheral structure", d.verification.passed(), detail);

  try {
    const auto s = relhyp_structure(p, d, c.bounds);
    bool normal = true;
    for (const auto& e : s.entries) normal = normal && normalizes(p, e.stable, e.subgroup);
    check("suspensions normalize", normal, "");
  } catch (const BoundedFailure& e) {
    check("suspensions normalize", false, e.what());
  }

  r.summary = text.str();
  r.status = all ? 0 : 1;
  r.files.emplace_back("verify.txt", r.summary);
  if (o.json) {
    Json j;
    j["passed"] = all;
    j["checks"] = checks;
    j["verification"] = verification_json(c.basis, d.verification);
    r.files.emplace_back("verify.json", dump(j));
  }
  if (o.dot) add_dot(r, c.basis, d.structure);
  return r;
}

}  // namespace

RunResult run_command(std::string_view command, const JobConfig& config,
                      const RunOptions& options) {
  if (command == "growth") return growth(config, options);
  if (command == "peripheral") return peripheral(config, options);
  if (command == "suspend") return suspend(config, options);
  if (command == "verify") return verify(config, options);
  throw ConfigurationError("unknown command '" + std::string(command) + "'");
}

void write_outputs(const std::filesystem::path& dir, const RunResult& result) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, contents] : result.files) {
    const auto target = dir / name;
    const auto tmp = dir / ("." + name + ".tmp");
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << contents;
      if (!out) throw Error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
  }
}

}  // namespace mtl
