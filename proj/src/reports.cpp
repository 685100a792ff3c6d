#include "mtl/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace mtl {

double six_digits(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return std::stod(buf);
}

Json to_json(const Bounds& b) {
  Json j;
  j["horizon"] = b.horizon;
  j["radius"] = b.radius;
  j["maxExp"] = b.max_exp;
  j["maxConj"] = b.max_conj;
  j["seed"] = b.seed;
  j["sampleLength"] = b.sample_length;
  return j;
}

Json growth_json(const FreeBasis& basis, const std::string& name, const GrowthReport& r) {
  Json j;
  j["name"] = name;
  j["element"] = basis.format(r.sequence.element);
  j["metric"] = r.sequence.metric.name();
  j["class"] = std::string(to_string(r.cls));
  if (r.degree) j["degree"] = *r.degree;
  if (r.rate) j["rate"] = six_digits(*r.rate);
  j["certified"] = r.certified;
  if (r.certificate) {
    j["certificate"] = {{"period", r.certificate->period},
                        {"start", r.certificate->start},
                        {"conjugator", basis.format(r.certificate->conjugator)}};
  }
  j["horizon"] = r.sequence.horizon;
  j["values"] = r.sequence.values;
  j["truncated"] = r.sequence.truncated;
  return j;
}

Json subgroup_json(const FreeBasis& basis, const SubgroupGraph& g) {
  std::vector<Word> words = g.basis();
  for (Word& w : words) w = std::min(w, w.inverse());
  std::sort(words.begin(), words.end());
  Json gens = Json::array();
  for (const Word& w : words) gens.push_back(basis.format(w));
  return gens;
}

Json verification_json(const FreeBasis& basis, const VerificationReport& r) {
  Json j;
  j["passed"] = r.passed();
  Json mal;
  mal["passed"] = r.malnormal();
  if (r.malnormality.witness) {
    const auto& w = *r.malnormality.witness;
    mal["witness"] = {{"first", w.first},
                      {"second", w.second},
                      {"conjugator", basis.format(w.conjugator)},
                      {"common", basis.format(w.common)}};
  }
  j["malnormality"] = mal;
  Json growth;
  growth["passed"] = r.growth_ok();
  growth["failures"] = Json::array();
  for (const auto& [i, w] : r.growth_failures) {
    growth["failures"].push_back({{"entry", i}, {"generator", basis.format(w)}});
  }
  j["growth"] = growth;
  Json twin;
  twin["passed"] = r.twin_free();
  if (r.twin_pair) {
    twin["pair"] = {r.twin_pair->first, r.twin_pair->second};
    twin["exponent"] = r.twin->exponent;
    twin["conjugator"] = basis.format(r.twin->conjugator);
  }
  j["twinning"] = twin;
  Json comp;
  comp["passed"] = r.complete();
  comp["sampled"] = r.sampled;
  comp["failures"] = Json::array();
  for (const Word& w : r.completeness_failures) comp["failures"].push_back(basis.format(w));
  j["completeness"] = comp;
  j["bounds"] = to_json(r.bounds);
  return j;
}

namespace {

std::string kind_name(NodeReport::Kind k) {
  switch (k) {
    case NodeReport::Kind::leaf:
      return "leaf";
    case NodeReport::Kind::hnn:
      return "hnn";
    case NodeReport::Kind::product:
      return "product";
  }
  return "leaf";
}

Json structure_json(const FreeBasis& basis, const PeripheralStructure& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    out.push_back({{"subgroup", subgroup_json(basis, s.entries[i])},
                   {"provenance", s.provenance[i]}});
  }
  return out;
}

}  // namespace

Json peripheral_json(const FreeBasis& basis, const DecompositionResult& d) {
  Json j;
  j["case"] = d.root_case;
  j["structure"] = structure_json(basis, d.structure);
  Json nodes = Json::array();
  for (const NodeReport& n : d.nodes) {
    Json node;
    node["kind"] = kind_name(n.kind);
    std::string letters;
    for (Letter x : n.letters) letters += basis.name(x);
    node["letters"] = letters;
    node["children"] = n.children;
    node["case"] = n.case_label;
    node["scott"] = {n.scott.first, n.scott.second};
    node["kuroshRank"] = n.kurosh_rank;
    node["degenerate"] = n.degenerate;
    if (n.hnn) {
      const HnnContext& c = *n.hnn;
      node["h"] = basis.format(c.h);
      node["A0"] = subgroup_json(basis, c.a0);
      node["A0Radius"] = c.a0_radius;
      node["K"] = c.k.status == KStatus::found
                      ? Json{{"status", "found"}, {"k0", basis.format(c.k.k0)}}
                      : Json{{"status", "empty_within"}, {"radius", c.k.radius}};
      node["B0"] = subgroup_json(basis, c.b0);
    }
    if (n.product) {
      node["preservedLeft"] = subgroup_json(basis, n.product->preserved_left);
      node["preservedRight"] = subgroup_json(basis, n.product->preserved_right);
    }
    node["structure"] = structure_json(basis, n.structure);
    nodes.push_back(std::move(node));
  }
  j["nodes"] = nodes;
  j["verification"] = verification_json(basis, d.verification);
  return j;
}

Json suspension_json(const TorusPresentation& p, const RelHypStructure& r) {
  Json j;
  Json peripherals = Json::array();
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const SuspensionData& d = r.entries[i];
    Json e;
    e["subgroup"] = subgroup_json(p.base, d.subgroup);
    e["exponent"] = d.exponent;
    e["stable_tail"] = p.base.format(d.stable.tail);
    e["verified"] = d.verified;
    e["stable"] = format(p, d.stable);
    e["conjugator"] = p.base.format(d.conjugator);
    e["literal"] = {{"element", format(p, d.literal)}, {"verified", d.literal_verified}};
    if (!d.discrepancy.empty()) e["discrepancy"] = d.discrepancy;
    e["provenance"] = r.provenance[i];
    peripherals.push_back(std::move(e));
  }
  j["peripherals"] = peripherals;
  j["case"] = r.case_label;
  j["degenerate"] = r.degenerate;
  j["stable_letter"] = std::string(1, p.stable);
  j["relators"] = p.relators();
  j["identities"] = r.identities;
  j["bounds"] = to_json(r.bounds);
  return j;
}

}  // namespace mtl
