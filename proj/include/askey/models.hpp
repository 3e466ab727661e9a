#pragma once
// One-variable models of the catalog systems: eigenbasis (diagonal +
// tridiagonal) matrix models derived from exact family expansions, grid
// difference models, and polynomial differential models.

#include "askey/families.hpp"
#include "askey/systems.hpp"

namespace askey {

enum class ModelKind { Eigenbasis, GridDifference, Differential };

struct ModelVariantInfo {
  SystemId system;
  std::string name;      // e.g. "wilson", "dual_hahn", "hahn", "jacobi", ...
  ModelKind kind;
  Family family;         // eigenfunction family of the model
  std::string dim_rule;  // "m+1", "2m+1", "M+1", "infinite"
};

const std::vector<ModelVariantInfo>& model_variants();

// Matrix models. Parameters are the model's own (alpha/beta/gamma...) values;
// the catalog parameters (a_i) are derived inside per the model conventions.
// Throws PoleInCoefficients if a recurrence denominator vanishes on the index
// range, UnknownVariant for a bad name.
template <class T>
struct BuiltModel {
  MatrixRep<T> rep;              // generators L1, L2, H (and X if degenerate)
  std::vector<T> sys_params;     // catalog (a1,a2,a3) or (a)
  T energy = T(0);               // H = E * I
  SystemId system;
  std::string variant;
};

// S9 Wilson/Racah model on the basis Phi_0..Phi_m (dimension m+1);
// params = (alpha1, alpha2, alpha3).
template <class T>
BuiltModel<T> build_s9_wilson(long m, const std::vector<T>& alphas);

// E1 continuous dual Hahn model (L1 diagonal), params = (beta1, beta2, beta3).
template <class T>
BuiltModel<T> build_e1_dual_hahn(long m, const std::vector<T>& betas);

// E1 Hahn model (L2 diagonal), params = (beta1, beta2, beta3).
template <class T>
BuiltModel<T> build_e1_hahn(long m, const std::vector<T>& betas);

// E8 Jacobi-parameter model (L2 diagonal on the Jacobi basis),
// params = (gamma1, gamma2, gamma3); finite dimension m+1.
template <class T>
BuiltModel<T> build_e8_jacobi(long m, const std::vector<T>& gammas);

// S3 special dual Hahn grid model on s in {0..M} (dimension M+1);
// params = (alpha). Generators are the standard-label (X, L1, L2, H).
template <class T>
BuiltModel<T> build_s3_dual_hahn_grid(long M, const T& alpha);

// S3 special Hahn grid model on x in {0..2m} (dimension 2m+1); params (alpha).
template <class T>
BuiltModel<T> build_s3_hahn_grid(long m, const T& alpha);

// E3' Meixner/Krawtchouk grid model on x in {0..m};
// params = (omega, u, v, w) with c1 = u^2 w, c2 = v^2 w.
template <class T>
BuiltModel<T> build_e3p_meixner(long m, const std::vector<T>& params);

// Differential models (polynomial-coefficient operators, checked on the
// monomial test set).
struct DiffModel {
  OpRep rep;
  std::vector<GRat> sys_params;
  SystemId system;
  std::string variant;
};

// E1 Jacobi model (a1 = 0), params = (beta2, beta3, Eprime).
DiffModel build_e1_jacobi(const std::vector<GRat>& params);
// E8 generalized Bessel model (a1 = 0), params = (gamma2, gamma3, Eprime).
DiffModel build_e8_bessel(const std::vector<GRat>& params);
// E6 Gegenbauer model, params = (beta, eta) with E' = eta^2.
DiffModel build_e6_gegenbauer(const std::vector<GRat>& params);

// Generic entry point used by the CLI: builds the named variant at sampled
// parameters and checks it against the catalog relations.
ResidualReport verify_model_variant(const std::string& system,
                                    const std::string& variant, long m,
                                    unsigned long long seed);

// Spectrum consistency: char poly of the named generator against the stated
// exact eigenvalue multiset.
bool spectrum_matches(const Mat<GRat>& M, const std::vector<GRat>& eigs);

}  // namespace askey
