#include "cwb/report_json.hpp"

namespace cwb {

using nlohmann::json;

json to_json(const DisplacementProfile& p) {
  return {{"min", p.min}, {"max", p.max}, {"mean", p.mean}, {"gap", p.gap()}, {"samples", p.samples}};
}

json to_json(const CliffordTest& c) {
  return {{"clifford", c.clifford},
          {"angle", c.angle},
          {"spread", c.spread},
          {"symmetric_residual", c.symmetric_residual}};
}

json to_json(const BoundednessEvidence& b) {
  return {{"bounded", b.bounded},
          {"radii", b.radii},
          {"sup_displacement", b.sup_displacement},
          {"strictly_increasing", b.strictly_increasing()}};
}

json to_json(const SpaceFormConstraints& s) {
  return {{"abelian_subgroups_cyclic", s.abelian_subgroups_cyclic},
          {"unique_central_involution", s.unique_central_involution},
          {"odd_sylow_cyclic", s.odd_sylow_cyclic},
          {"involution_count", s.involution_count},
          {"all", s.all()}};
}

json to_json(const HomogeneityReport& r) {
  json elements = json::array();
  for (const auto& e : r.elements) {
    elements.push_back({{"id", e.index},
                        {"constant_displacement", e.constant},
                        {"displacement", e.displacement},
                        {"gap", e.gap},
                        {"criterion_agrees", e.criterion_agrees}});
  }
  json out = {{"model", r.model},
              {"group_order", r.group_order},
              {"free", r.free},
              {"elements", elements},
              {"centralizer_dim", r.centralizer_dim},
              {"rank_evidence", {{"points", r.rank.points}, {"min_rank", r.rank.min_rank}, {"dim", r.rank.dim}}},
              {"forward_check",
               {{"ran", r.forward_check_ran}, {"passed", r.forward_check_passed}, {"max_gap", r.forward_max_gap}}},
              {"instance_level_only", r.instance_level_only},
              {"verdict", to_string(r.verdict)},
              {"seed", r.config.seed},
              {"tolerances",
               {{"tol", r.config.tol}, {"free_tol", r.config.free_tol}, {"rank_cutoff", 1e-8}}}};
  out["fixed_point_element"] = r.fixed_point_element ? json(*r.fixed_point_element) : json(nullptr);
  return out;
}

}  // namespace cwb
