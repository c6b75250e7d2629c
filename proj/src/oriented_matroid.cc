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

#include "mixmat/oriented_matroid.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "mixmat/errors.h"

namespace mixmat {
namespace {

void sort_unique(std::vector<SignedSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains_sorted(const std::vector<SignedSet>& sorted, const SignedSet& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// dependent[S] != 0 iff S contains some set of `minimal`.
std::vector<std::uint8_t> upward_closure(int n, const std::vector<ElementSet>& minimal) {
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (ElementSet s : minimal) table[s.bits()] = 1;
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < table.size(); ++s) {
      if ((s & bit) != 0) table[s] |= table[s ^ bit];
    }
  }
  return table;
}

}  // namespace

OrientedMatroid::OrientedMatroid(GroundSet ground, std::vector<SignedSet> circuits)
    : ground_(std::move(ground)) {
  const ElementSet all = ground_.all();
  for (SignedSet& c : circuits) {
    if (c.plus.intersects(c.minus)) {
      throw InputError("signed set " + to_string(c, ground_) + " has an element with both signs");
    }
    if (!c.support().subset_of(all)) {
      throw InputError("circuit refers to an element outside the ground set");
    }
    c = c.canonical();
  }
  sort_unique(circuits);
  if (circuits.size() > kMaxCircuits) {
    throw CapacityError(std::to_string(circuits.size()) + " circuit pairs; at most " +
                        std::to_string(kMaxCircuits) + " are supported");
  }
  circuits_ = std::move(circuits);
}

std::vector<SignedSet> OrientedMatroid::signed_circuits() const {
  std::vector<SignedSet> out;
  out.reserve(2 * circuits_.size());
  for (const SignedSet& c : circuits_) {
    out.push_back(c);
    if (!c.empty()) out.push_back(c.negated());
  }
  sort_unique(out);
  return out;
}

const char* to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::kEmptySupport:
      return "empty-support";
    case AxiomKind::kMissingNegation:
      return "missing-negation";
    case AxiomKind::kNestedSupports:
      return "nested-supports";
    case AxiomKind::kElimination:
      return "elimination";
    case AxiomKind::kMalformed:
      return "malformed";
  }
  return "unknown";
}

AxiomReport verify_circuit_axioms(std::span<const SignedSet> candidate, const GroundSet& ground) {
  AxiomReport report;
  const ElementSet all = ground.all();

  std::vector<SignedSet> set;
  for (const SignedSet& c : candidate) {
    if (c.plus.intersects(c.minus) || !c.support().subset_of(all)) {
      report.push_back({AxiomKind::kMalformed, "signed set with overlapping signs or unknown elements"});
      continue;
    }
    if (c.empty()) {
      report.push_back({AxiomKind::kEmptySupport, "circuit with empty support"});
      continue;
    }
    set.push_back(c);
  }
  sort_unique(set);

  for (const SignedSet& c : set) {
    if (!contains_sorted(set, c.negated())) {
      report.push_back({AxiomKind::kMissingNegation,
                        "negation of " + to_string(c, ground) + " is not a circuit"});
    }
  }

  for (const SignedSet& a : set) {
    for (const SignedSet& b : set) {
      if (a == b || a == b.negated()) continue;
      if (a.support().subset_of(b.support())) {
        // Each unordered equal-support pair is reported once.
        if (a.support() == b.support() && !(a < b)) continue;
        report.push_back({AxiomKind::kNestedSupports,
                          "support of " + to_string(a, ground) + " is contained in support of " +
                              to_string(b, ground)});
      }
    }
  }

  // Signed elimination: for C1 != +-C2 and e in C1+ & C2-, some circuit C3
  // has C3+ in (C1+ | C2+) - e and C3- in (C1- | C2-) - e.
  for (const SignedSet& c1 : set) {
    for (const SignedSet& c2 : set) {
      if (c1 == c2 || c1 == c2.negated()) continue;
      for (int e : c1.plus & c2.minus) {
        const ElementSet allowed_plus = (c1.plus | c2.plus) - ElementSet::single(e);
        const ElementSet allowed_minus = (c1.minus | c2.minus) - ElementSet::single(e);
        const bool found = std::any_of(set.begin(), set.end(), [&](const SignedSet& c3) {
          return c3.plus.subset_of(allowed_plus) && c3.minus.subset_of(allowed_minus);
        });
        if (!found) {
          report.push_back({AxiomKind::kElimination,
                            "no circuit eliminates " + ground.label(e) + " between " +
                                to_string(c1, ground) + " and " + to_string(c2, ground)});
        }
      }
    }
  }
  return report;
}

OrientedMatroid make_oriented_matroid(GroundSet ground, std::vector<SignedSet> circuits) {
  std::vector<SignedSet> closed = circuits;
  for (const SignedSet& c : circuits) closed.push_back(c.negated());
  sort_unique(closed);
  AxiomReport report = verify_circuit_axioms(closed, ground);
  if (!report.empty()) {
    throw InputError(std::string("circuits violate the oriented matroid axioms (") +
                     to_string(report.front().kind) + "): " + report.front().detail);
  }
  return OrientedMatroid(std::move(ground), std::move(circuits));
}

UnderlyingMatroid::UnderlyingMatroid(const OrientedMatroid& om) {
  const int n = om.size();
  for (const SignedSet& c : om.circuits()) supports_.push_back(c.support());
  std::sort(supports_.begin(), supports_.end());
  supports_.erase(std::unique(supports_.begin(), supports_.end()), supports_.end());

  const std::vector<std::uint8_t> dependent = upward_closure(n, supports_);
  for (std::size_t s = 0; s < dependent.size(); ++s) {
    if (dependent[s] == 0) rank_ = std::max(rank_, ElementSet(static_cast<ElementSet::Bits>(s)).size());
  }
  for (std::size_t s = 0; s < dependent.size(); ++s) {
    if (dependent[s] != 0) continue;
    const ElementSet set(static_cast<ElementSet::Bits>(s));
    if (set.size() == rank_) {
      bases_.push_back(set);
      continue;
    }
    bool maximal = true;
    for (int x : ElementSet::range(n) - set) {
      if (dependent[s | (std::size_t{1} << x)] == 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      throw InputError("maximal independent sets of different sizes; not a matroid");
    }
  }
}

bool UnderlyingMatroid::is_independent(ElementSet s) const {
  return std::none_of(supports_.begin(), supports_.end(),
                      [s](ElementSet c) { return c.subset_of(s); });
}

OrientedMatroid dual(const OrientedMatroid& om) {
  const int n = om.size();
  const UnderlyingMatroid matroid(om);
  const ElementSet all = om.ground().all();

  // Dual-independent sets are the subsets of basis complements.
  std::vector<std::uint8_t> independent(std::size_t{1} << n, 0);
  for (ElementSet b : matroid.bases()) independent[(all - b).bits()] = 1;
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < independent.size(); ++s) {
      if ((s & bit) != 0) independent[s ^ bit] |= independent[s];
    }
  }

  std::vector<SignedSet> cocircuits;
  const std::vector<SignedSet> circuits = om.circuits();
  for (std::size_t s = 1; s < independent.size(); ++s) {
    if (independent[s] != 0) continue;
    const ElementSet support(static_cast<ElementSet::Bits>(s));
    bool minimal = true;
    for (int x : support) {
      if (independent[s ^ (std::size_t{1} << x)] == 0) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;

    std::vector<SignedSet> relevant;
    for (const SignedSet& c : circuits) {
      if (c.support().intersects(support)) relevant.push_back(c);
    }
    const int first = support.min();
    const std::vector<int> rest = (support - ElementSet::single(first)).to_vector();
    int found = 0;
    SignedSet pattern;
    const std::uint64_t patterns = std::uint64_t{1} << rest.size();
    for (std::uint64_t m = 0; m < patterns; ++m) {
      SignedSet candidate{ElementSet::single(first), ElementSet{}};
      for (std::size_t k = 0; k < rest.size(); ++k) {
        if ((m >> k) & 1U) {
          candidate.minus.insert(rest[k]);
        } else {
          candidate.plus.insert(rest[k]);
        }
      }
      const bool orthogonal = std::all_of(relevant.begin(), relevant.end(), [&](const SignedSet& c) {
        return is_orthogonal(c, candidate);
      });
      if (orthogonal) {
        ++found;
        pattern = candidate;
      }
    }
    if (found != 1) {
      throw InputError("cocircuit support " + to_string(SignedSet{support, {}}, om.ground()) +
                       " has " + std::to_string(found) +
                       " orthogonal sign patterns; the input is not an oriented matroid");
    }
    cocircuits.push_back(pattern);
  }
  return OrientedMatroid(om.ground(), std::move(cocircuits));
}

OrientedMatroid reorient(const OrientedMatroid& om, ElementSet flip) {
  om.ground().check_subset(flip, "reorientation set");
  std::vector<SignedSet> circuits;
  circuits.reserve(om.circuits().size());
  for (const SignedSet& c : om.circuits()) circuits.push_back(negate_on(c, flip));
  return OrientedMatroid(om.ground(), std::move(circuits));
}

OrientedMatroid deletion(const OrientedMatroid& om, ElementSet removed) {
  om.ground().check_subset(removed, "deletion set");
  std::vector<SignedSet> circuits;
  for (const SignedSet& c : om.circuits()) {
    if (c.support().intersects(removed)) continue;
    circuits.push_back({compress(c.plus, removed), compress(c.minus, removed)});
  }
  return OrientedMatroid(om.ground().without(removed), std::move(circuits));
}

OrientedMatroid contraction(const OrientedMatroid& om, ElementSet removed) {
  om.ground().check_subset(removed, "contraction set");
  std::vector<SignedSet> restricted;
  for (const SignedSet& c : om.circuits()) {
    SignedSet r = restrict(c, removed);
    if (!r.empty()) restricted.push_back(r.canonical());
  }
  sort_unique(restricted);

  std::vector<SignedSet> circuits;
  for (const SignedSet& r : restricted) {
    const ElementSet s = r.support();
    const bool minimal = std::none_of(restricted.begin(), restricted.end(), [s](const SignedSet& o) {
      return o.support() != s && o.support().subset_of(s);
    });
    if (minimal) circuits.push_back({compress(r.plus, removed), compress(r.minus, removed)});
  }
  return OrientedMatroid(om.ground().without(removed), std::move(circuits));
}

bool is_positive_circuit(const SignedSet& c) {
  return !c.empty() && (c.minus.empty() || c.plus.empty());
}

std::vector<SignedSet> positive_circuits(const OrientedMatroid& om) {
  std::vector<SignedSet> out;
  for (const SignedSet& c : om.circuits()) {
    if (is_positive_circuit(c)) out.push_back(c.minus.empty() ? c : c.negated());
  }
  return out;
}

bool is_acyclic(const OrientedMatroid& om) {
  return std::none_of(om.circuits().begin(), om.circuits().end(), is_positive_circuit);
}

bool is_totally_cyclic(const OrientedMatroid& om) {
  ElementSet covered;
  for (const SignedSet& c : om.circuits()) {
    if (is_positive_circuit(c)) covered |= c.support();
  }
  return covered == om.ground().all();
}

ElementSet coloops(const OrientedMatroid& om) {
  ElementSet covered;
  for (const SignedSet& c : om.circuits()) covered |= c.support();
  return om.ground().all() - covered;
}

ElementSet loops(const OrientedMatroid& om) {
  ElementSet out;
  for (const SignedSet& c : om.circuits()) {
    if (c.support().size() == 1) out |= c.support();
  }
  return out;
}

}  // namespace mixmat
