// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mixmat/solver.h"

#include <algorithm>
#include <string>
#include <vector>

#include "mixmat/errors.h"

namespace mixmat {
namespace {

std::vector<MixedCircuit> positive_mixed_circuits(const MixedMatroid& mm) {
  std::vector<MixedCircuit> out;
  for (MixedCircuit& mc : mixed_circuits(mm)) {
    if (is_positive(mc)) out.push_back(std::move(mc));
  }
  return out;
}

MixedMatroid fix_one(const MixedMatroid& mm, int e, bool flip) {
  return apply_signature(mm, {ElementSet::single(e), flip ? ElementSet::single(e) : ElementSet{}});
}

void require_p_connected(const MixedMatroid& mm, const PSet& p, const SolverOptions& options) {
  if (!is_p_connected(mm, p, options)) {
    throw PreconditionError("the mixed matroid is not P-connected");
  }
}

void require_unsigned(const MixedMatroid& mm, int e) {
  if (e < 0 || e >= mm.ground().size() || !mm.unsigned_elements().contains(e)) {
    throw InputError("element " + std::to_string(e) + " is not an unsigned element");
  }
}

// Orientation of the unsigned set built one element at a time from the
// orientations of successive contractions. Empty when the construction
// breaks down, which for a P-connected input without essential elements
// means a bug.
std::optional<Signature> construct(const MixedMatroid& mm, const PSet& p,
                                   const SolverOptions& options) {
  const ElementSet a = mm.unsigned_elements();
  if (a.empty()) {
    if (is_p_connected(mm, p, options)) return Signature{};
    return std::nullopt;
  }
  const int e = a.min();
  const ElementSet pivot = ElementSet::single(e);
  const std::optional<Signature> rest =
      construct(contraction(mm, pivot), PSet{compress(p.elements, pivot)}, options);
  if (!rest) return std::nullopt;

  const Signature lifted{expand(rest->domain, pivot), expand(rest->flipped, pivot)};
  const MixedMatroid partial = apply_signature(mm, lifted);
  for (bool flip : {false, true}) {
    if (is_p_connected(fix_one(partial, e, flip), p, options)) {
      Signature full{lifted.domain | pivot, lifted.flipped};
      if (flip) full.flipped |= pivot;
      return full;
    }
  }
  return std::nullopt;
}

}  // namespace

void check_p_set(const MixedMatroid& mm, const PSet& p) {
  mm.ground().check_subset(p.elements, "P");
  if (p.elements.intersects(mm.unsigned_elements())) {
    throw InputError("P must consist of signed elements");
  }
}

PConnectivityReport p_connectivity_report(const MixedMatroid& mm, const PSet& p,
                                          const SolverOptions& options) {
  check_p_set(mm, p);
  PConnectivityReport report;
  for (const MixedCircuit& mc : mixed_circuits(mm)) {
    if (!is_positive(mc)) continue;
    const ElementSet hit = mc.support() & p.elements;
    if (hit.size() == 1) report.witnessed |= hit;
  }
  report.every_p_witnessed = report.witnessed == p.elements;
  report.total_cyclicity_required = !options.relax_total_cyclicity;
  if (report.total_cyclicity_required) {
    const CyclicityReport cyclic = totally_cyclic_report(mm);
    report.totally_cyclic = cyclic.value;
    report.cyclicity_method = cyclic.method;
  }
  return report;
}

bool is_p_connected(const MixedMatroid& mm, const PSet& p, const SolverOptions& options) {
  return p_connectivity_report(mm, p, options).connected();
}

bool is_p_essential(const MixedMatroid& mm, int e, const PSet& p, const SolverOptions& options) {
  require_unsigned(mm, e);
  require_p_connected(mm, p, options);
  return !is_p_connected(fix_one(mm, e, false), p, options) &&
         !is_p_connected(fix_one(mm, e, true), p, options);
}

bool essential_characterization(const MixedMatroid& mm, int e, const PSet& p,
                                const SolverOptions& options) {
  require_unsigned(mm, e);
  check_p_set(mm, p);
  if (p.size() != 2) throw PreconditionError("the characterization needs |P| = 2");
  if (p.elements.intersects(loops(mm.oriented()))) {
    throw PreconditionError("an element of P is a loop");
  }
  require_p_connected(mm, p, options);

  const std::vector<MixedCircuit> positive = positive_mixed_circuits(mm);
  for (const MixedCircuit& c : positive) {
    if ((c.support() & p.elements).size() == 1 && !c.support().contains(e)) return false;
  }

  const int p1 = p.elements.min();
  const int p2 = (p.elements - ElementSet::single(p1)).min();
  auto meets_p_only_in = [&](const MixedCircuit& c, int q) {
    return (c.support() & p.elements) == ElementSet::single(q);
  };
  for (const MixedCircuit& c1 : positive) {
    if (!meets_p_only_in(c1, p1)) continue;
    for (const MixedCircuit& c2 : positive) {
      if (!meets_p_only_in(c2, p2)) continue;
      const ElementSet region = (c1.support() | c2.support()) - ElementSet::single(e);
      const bool bridged = std::any_of(positive.begin(), positive.end(), [&](const MixedCircuit& c) {
        return p.elements.subset_of(c.support()) && c.support().subset_of(region);
      });
      if (!bridged) return false;
    }
  }
  return true;
}

ElementSet p_essential_elements(const MixedMatroid& mm, const PSet& p,
                                const SolverOptions& options) {
  require_p_connected(mm, p, options);
  ElementSet out;
  for (int e : mm.unsigned_elements()) {
    if (!is_p_connected(fix_one(mm, e, false), p, options) &&
        !is_p_connected(fix_one(mm, e, true), p, options)) {
      out.insert(e);
    }
  }
  return out;
}

bool check_facet_criterion(const OrientedMatroid& om, const PSet& p) {
  om.ground().check_subset(p.elements, "P");
  if (p.size() < 2) throw PreconditionError("the facet criterion needs |P| >= 2");
  if (!is_totally_cyclic(om)) return false;

  const OrientedMatroid d = dual(om);
  std::vector<ElementSet> facets;
  for (const SignedSet& c : positive_circuits(dual(d))) {
    facets.push_back(om.ground().all() - c.support());
  }
  for (int q : p.elements) {
    const ElementSet others = p.elements - ElementSet::single(q);
    const bool on_facet = std::any_of(facets.begin(), facets.end(), [&](ElementSet f) {
      return others.subset_of(f) && !f.contains(q);
    });
    if (!on_facet) return false;
  }
  return true;
}

const char* to_string(OrientationStatus status) {
  switch (status) {
    case OrientationStatus::kFeasible:
      return "Feasible";
    case OrientationStatus::kInfeasible:
      return "Infeasible";
    case OrientationStatus::kNotPConnected:
      return "NotPConnected";
  }
  return "unknown";
}

const char* to_string(OrientationMethod method) {
  switch (method) {
    case OrientationMethod::kTheorem:
      return "theorem";
    case OrientationMethod::kBruteForce:
      return "brute-force";
  }
  return "unknown";
}

OrientationResult brute_force_p_orientation(const MixedMatroid& mm, const PSet& p,
                                            const SolverOptions& options) {
  OrientationResult result;
  result.method = OrientationMethod::kBruteForce;
  result.connectivity = p_connectivity_report(mm, p, options);
  const CoherentOrientations all = coherent_orientations(mm);
  for (const Signature& s : all) {
    if (is_p_connected(apply_signature(mm, s), p, options)) {
      result.status = OrientationStatus::kFeasible;
      result.signature = s;
      return result;
    }
  }
  // A P-connected coherent orientation makes mm P-connected, so the search
  // can only succeed on P-connected input.
  result.status = result.connectivity.connected() ? OrientationStatus::kInfeasible
                                                  : OrientationStatus::kNotPConnected;
  return result;
}

OrientationResult find_p_orientation(const MixedMatroid& mm, const PSet& p,
                                     const SolverOptions& options) {
  if (p.size() != 2) return brute_force_p_orientation(mm, p, options);
  check_p_set(mm, p);
  if (p.elements.intersects(loops(mm.oriented()))) {
    return brute_force_p_orientation(mm, p, options);
  }

  OrientationResult result;
  result.method = OrientationMethod::kTheorem;
  result.connectivity = p_connectivity_report(mm, p, options);
  if (!result.connectivity.connected()) {
    result.status = OrientationStatus::kNotPConnected;
    return result;
  }

  const ElementSet essential = p_essential_elements(mm, p, options);
  if (!essential.empty()) {
    result.status = OrientationStatus::kInfeasible;
    result.witness = essential.min();
    return result;
  }

  const std::optional<Signature> built = construct(mm, p, options);
  const bool verified = built && is_p_connected(apply_signature(mm, *built), p, options);
  if (!verified) {
    if (options.relax_total_cyclicity) return brute_force_p_orientation(mm, p, options);
    throw InternalError("orientation construction failed on an instance without essential elements");
  }
  result.status = OrientationStatus::kFeasible;
  result.signature = *built;
  return result;
}

}  // namespace mixmat
