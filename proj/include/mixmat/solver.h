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

#ifndef MIXMAT_SOLVER_H_
#define MIXMAT_SOLVER_H_

#include <optional>

#include "mixmat/element_set.h"
#include "mixmat/mixed_matroid.h"
#include "mixmat/oriented_matroid.h"

namespace mixmat {

// The signed elements p_1, ..., p_m whose connectivity is requested, in
// increasing index order.
struct PSet {
  ElementSet elements;

  int size() const { return elements.size(); }
  friend bool operator==(const PSet&, const PSet&) = default;
};

// Throws InputError if P leaves the ground set or meets the unsigned set.
void check_p_set(const MixedMatroid& mm, const PSet& p);

struct SolverOptions {
  // Drop the total-cyclicity requirement from P-connectivity. Experimental:
  // the theorem-based construction carries no guarantee in this mode.
  bool relax_total_cyclicity = false;
};

struct PConnectivityReport {
  // Elements of P that have a positive circuit meeting P only in them.
  ElementSet witnessed;
  bool every_p_witnessed = false;
  bool totally_cyclic = false;
  // Whether total cyclicity was part of the verdict.
  bool total_cyclicity_required = true;
  DecisionMethod cyclicity_method = DecisionMethod::kShortcut;

  bool connected() const {
    return every_p_witnessed && (totally_cyclic || !total_cyclicity_required);
  }
};

PConnectivityReport p_connectivity_report(const MixedMatroid& mm, const PSet& p,
                                          const SolverOptions& options = {});
bool is_p_connected(const MixedMatroid& mm, const PSet& p, const SolverOptions& options = {});

// e is P-essential when fixing it either way, with the rest of A left
// unsigned, destroys P-connectivity. Throws InputError if e is not unsigned
// and PreconditionError if mm is not P-connected.
bool is_p_essential(const MixedMatroid& mm, int e, const PSet& p, const SolverOptions& options = {});

// The circuit-structure test equivalent to is_p_essential when |P| = 2 and
// neither element of P is a loop:
//  (a) every positive circuit meeting P in one element contains e, and
//  (b) for positive circuits C1, C2 with C1 & P = {p1}, C2 & P = {p2} there
//      is a positive circuit through p1 and p2 inside (C1 | C2) - e.
// Throws PreconditionError when |P| != 2, some p_i is a loop, or mm is not
// P-connected.
bool essential_characterization(const MixedMatroid& mm, int e, const PSet& p,
                                const SolverOptions& options = {});

ElementSet p_essential_elements(const MixedMatroid& mm, const PSet& p,
                                const SolverOptions& options = {});

// For an oriented matroid: totally cyclic, and for every p in P some facet
// of the dual (complement of a positive cocircuit of the dual) contains
// P - p and misses p. Computed through dual(om). Requires |P| >= 2.
bool check_facet_criterion(const OrientedMatroid& om, const PSet& p);

enum class OrientationStatus { kFeasible, kInfeasible, kNotPConnected };
enum class OrientationMethod { kTheorem, kBruteForce };

const char* to_string(OrientationStatus status);
const char* to_string(OrientationMethod method);

struct OrientationResult {
  OrientationStatus status = OrientationStatus::kInfeasible;
  // Full signature of A when feasible.
  Signature signature;
  // A P-essential element when infeasible and |P| = 2.
  std::optional<int> witness;
  OrientationMethod method = OrientationMethod::kBruteForce;
  // Why the instance is not P-connected, when it is not.
  PConnectivityReport connectivity;
};

// First P-connected coherent orientation in coherent_orientations() order.
OrientationResult brute_force_p_orientation(const MixedMatroid& mm, const PSet& p,
                                            const SolverOptions& options = {});

// Constructive search for |P| = 2: reports a P-essential element when one
// exists, otherwise builds an orientation by recursing on the contraction of
// the smallest unsigned element and extending the result by one sign.
// Delegates to brute force when |P| != 2 or an element of P is a loop.
// Throws InternalError if a constructed orientation fails verification.
OrientationResult find_p_orientation(const MixedMatroid& mm, const PSet& p,
                                     const SolverOptions& options = {});

}  // namespace mixmat

#endif  // MIXMAT_SOLVER_H_
