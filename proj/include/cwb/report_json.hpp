#pragma once

#include "json.hpp"

#include "cwb/constant_curvature.hpp"
#include "cwb/finite_groups.hpp"
#include "cwb/profile.hpp"
#include "cwb/verifier.hpp"

namespace cwb {

nlohmann::json to_json(const DisplacementProfile& p);
nlohmann::json to_json(const CliffordTest& c);
nlohmann::json to_json(const BoundednessEvidence& b);
nlohmann::json to_json(const SpaceFormConstraints& s);

/// Fields: free, elements, centralizer_dim, rank_evidence, verdict, seed,
/// tolerances, plus the model, the forward re-sampling check and the
/// instance-level flag.
nlohmann::json to_json(const HomogeneityReport& r);

}  // namespace cwb
