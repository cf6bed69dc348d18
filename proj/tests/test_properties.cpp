// Copyright 2026 The Multitangent Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "property_suites.hpp"

namespace {

void Check(const props::SuiteReport& r) {
  INFO(r.name << ": " << r.failures << "/" << r.cases << " failed; " << r.first_failure);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("duality involution") { Check(props::DualityInvolution(101)); }
TEST_CASE("parity on random loops") { Check(props::LoopParity(102)); }
TEST_CASE("segment transversal") { Check(props::SegmentTransversal(103)); }
TEST_CASE("hull-support equivalence") { Check(props::HullSupportEquivalence(104)); }
TEST_CASE("monotone refinement") { Check(props::MonotoneRefinement(105)); }
TEST_CASE("projective equivariance") { Check(props::ProjectiveEquivariance(106)); }
