#pragma once
// The catalog: superintegrable systems, their structure relations as data,
// exact 2D realizations, and the structure-equation checkers for matrix,
// one-variable-operator, and ambient realizations.

#include <json.hpp>

#include "askey/operators.hpp"
#include "askey/words.hpp"

namespace askey {

enum class SystemId {
  S9,
  E1,
  E2,
  E3p,
  E8,
  E10,
  S3,
  E14,
  E6,
  E5,
  E4,
  E3,
  SO3free,
  E2free,
  SL2sing,
  OSCsing
};

const char* system_name(SystemId id);
SystemId system_from_name(const std::string& s);

struct SystemEntry {
  SystemId id;
  std::string name;
  bool degenerate = false;   // 1-parameter, generators (H, X, L1, L2)
  bool lie_target = false;   // free or singular: bracket table instead
  int nparams = 3;
  std::vector<SysRelation> relations;
};

// All 12 quadratic-algebra systems plus the free/singular targets.
const std::map<SystemId, SystemEntry>& system_catalog();

// Parameter-degree bounds from the closure templates; checked at load time.
void check_degree_bounds(const SystemEntry& e);

struct ResidualReport {
  struct Row {
    std::string label;
    bool zero = false;
  };
  std::vector<Row> rows;
  bool all_zero() const {
    for (auto& r : rows)
      if (!r.zero) return false;
    return !rows.empty();
  }
};

// --- realizations ---

template <class T>
struct MatrixRep {
  std::map<GenId, Mat<T>> gens;
  std::vector<T> params;  // (a1,a2,a3) or (a)
  int dim = 0;
};
using MatrixRepQ = MatrixRep<GRat>;
using MatrixRepL = MatrixRep<Laurent>;

struct OpRep {
  std::map<GenId, PolyOpQ> gens;
  std::vector<GRat> params;
  int test_degree = 10;
};

struct AmbientRep {
  Space space;
  std::map<GenId, AmbientOp> gens;
  std::vector<GRat> params;
  std::vector<MPoly> tests;
};

// Exact residual checks of a relation list against a realization.
template <class T>
ResidualReport check_structure(const MatrixRep<T>& rep,
                               const std::vector<SysRelation>& rels);
ResidualReport check_structure(const OpRep& rep,
                               const std::vector<SysRelation>& rels);
ResidualReport check_structure(const AmbientRep& rep,
                               const std::vector<SysRelation>& rels);

// The 2D differential-operator realization of a catalog system, and the check
// that it satisfies [H, gen] = 0 plus every catalog relation.
AmbientRep ambient_realization(SystemId id, const std::vector<GRat>& params);
ResidualReport check_2d_realization(SystemId id, const std::vector<GRat>& params,
                                    int max_test_degree = 6);

// --- Lie closures (free systems and contracted targets) ---

enum class LieAlgebra { so3, e2, sl2, oscillator };

struct LieBracketRel {
  std::string a, b;                             // [a, b]
  std::vector<std::pair<GRat, std::string>> rhs;  // sum coeff * gen; "1" = unit
  std::string label;
};

// Bracket table; generator names are realization keys.
std::vector<LieBracketRel> lie_table(LieAlgebra which);

template <class T>
struct LieRepMat {
  std::map<std::string, Mat<T>> gens;
};
struct LieRepOp {
  std::map<std::string, PolyOpQ> gens;
  int test_degree = 8;
};
struct LieRepAmbient {
  Space space;
  std::map<std::string, AmbientOp> gens;
  std::vector<MPoly> tests;
};

template <class T>
ResidualReport check_lie_closure(const LieRepMat<T>& rep, LieAlgebra which);
ResidualReport check_lie_closure(const LieRepOp& rep, LieAlgebra which);
ResidualReport check_lie_closure(const LieRepAmbient& rep, LieAlgebra which);

// Free-system ambient realizations (so(3) on the sphere, e(2) on the plane)
// keyed by the lie_table generator names.
LieRepAmbient free_system_realization(SystemId id);

// Catalog serialization (versioned JSON; relations as data).
nlohmann::ordered_json catalog_to_json();
void catalog_validate_json(const nlohmann::json& j);  // throws on mismatch

}  // namespace askey
