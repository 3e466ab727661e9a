#pragma once
// The contraction engine: delta-parametrized basis changes applied to
// structure relations, exact limits, comparison with target catalogs, and
// representation-saving polynomial limit checks.

#include "askey/expr.hpp"
#include "askey/models.hpp"

namespace askey {

struct ContractionSpec {
  std::string id;       // "S9:E1:v1"
  std::string variant;  //短 label, e.g. "dual_hahn"
  SystemId source, target;
  int gauge_exponent = 1;  // epsilon = delta^k
  bool no_save = false;    // structure-only: no representation saving
  bool source_degenerate = false, target_degenerate = false;

  std::vector<std::string> knobs;  // sampled rational parameters

  // bindings of the source system/model parameters as Laurent expressions
  std::vector<std::pair<std::string, Expr>> source_params;  // a1.. or a
  std::vector<std::pair<std::string, Expr>> model_params;   // alpha/beta/...

  // basis change on (L1, L2, H): Lt_i = sum_j A[i][j] gen_j + shift_i, and
  // Xt = xscale * X for degenerate sources
  std::array<std::array<Expr, 3>, 3> A;
  std::array<Expr, 3> shift;
  Expr xscale;

  // target parameter values (delta -> 0 limits taken after evaluation)
  std::vector<std::pair<std::string, Expr>> target_params;

  // slot extraction when the parameter map is not given in closed form (E10)
  struct Slot {
    std::string param;
    int rel_index;  // index into the target relation list
    Word w;
    GRat divisor;
  };
  std::vector<Slot> slots;

  // representation-saving family limit, when present
  bool has_family_limit = false;
  Family source_family = Family::Wilson, target_family = Family::Wilson;

  // verification route
  enum Route { Coefficient, ModelLevel, LieClosure } route = Coefficient;
  LieAlgebra lie_target = LieAlgebra::so3;
  std::string model;  // matrix model used for the transform residual check
};

const std::vector<ContractionSpec>& contraction_catalog();
const ContractionSpec& contraction_edge(const std::string& id);

struct StructureLimitReport {
  struct Row {
    std::string what;      // relation/check label, possibly with a word tag
    std::string detail;    // transformed coefficient / limit / target
    bool pass = false;
  };
  std::string edge;
  bool structure_only = false;
  std::vector<Row> rows;
  bool pass() const {
    for (auto& r : rows)
      if (!r.pass) return false;
    return !rows.empty();
  }
};

// Substitute the inverse basis change into each source relation and re-expand
// in the new generators; returns one transformed NCPoly per target-shape
// relation together with its left-hand-side label.
struct TransformedRelations {
  // for nondegenerate targets: [Lt1,Rt], [Lt2,Rt], Rt^2
  // for degenerate targets: [Xt,Lt1], [Xt,Lt2], [Lt1,Lt2], Gt (free scale)
  std::vector<std::pair<std::string, NCPoly<Laurent>>> rels;
};
TransformedRelations transform_structure(const ContractionSpec& spec,
                                         const ParamPoint& knobs_bound,
                                         int gauge_scale = 1);

// Full structure-limit verification of one edge at a seeded knob draw.
StructureLimitReport limit_and_compare(const ContractionSpec& spec,
                                       unsigned long long seed,
                                       int gauge_scale = 1);

// Representation-saving polynomial limit checks (n <= n_max, degree+2 sample
// points). Throws nothing; failures are rows.
StructureLimitReport verify_poly_limit(const ContractionSpec& spec,
                                       unsigned long long seed, int n_max = 4,
                                       int gauge_scale = 1);

// JSON serialization of the edge data core (round-trips exactly).
nlohmann::ordered_json contraction_to_json(const ContractionSpec& spec);
ContractionSpec contraction_from_json(const nlohmann::json& j);

}  // namespace askey
