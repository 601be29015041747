#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "anomaly/group_cohomology.hpp"
#include "anomaly/liealg.hpp"

namespace anomaly {

// Finite crossed module (delta: H -> G, right action h^g) given by tables.
struct CrossedModuleFinite {
  FiniteGroup h;
  FiniteGroup g;
  std::vector<int> delta;             // H -> G
  std::vector<std::vector<int>> act;  // act[g][h] = h^g
};

// Exhaustive axiom check.  Structural defects (delta not a homomorphism,
// act[g] not an automorphism, act not a right action) throw; the two crossed
// module axioms are reported, with the first violating pair named:
//   Peiffer:      h^{delta(h')} = h'^-1 h h'
//   equivariance: delta(h^g)    = g^-1 delta(h) g
struct AxiomReport {
  bool peiffer_ok = true;
  bool equivariance_ok = true;
  std::string witness;  // empty when both hold

  bool passed() const { return peiffer_ok && equivariance_ok; }
};

AxiomReport check_axioms(const CrossedModuleFinite& cm);

// H = G, delta = identity, conjugation action.
CrossedModuleFinite conjugation_module(const FiniteGroup& g);
// Normal subgroup inclusion N <= G with conjugation action; `elems` lists the
// elements of N as G-indices (closure/normality validated).
CrossedModuleFinite inclusion_module(const FiniteGroup& g, const std::vector<int>& elems);
// delta: H ->> G a quotient map of abelian groups with trivial action.
CrossedModuleFinite quotient_module(const FiniteGroup& h, const FiniteGroup& g,
                                    const std::vector<int>& proj);
// The broken example: S3 with delta = identity but the trivial action.
CrossedModuleFinite sabotage_s3();

// Central extension A -> H ->> G presented by the projection and a section
// s: G -> H (proj(s(g)) = g).  A = ker(proj).
struct CentralExtension {
  FiniteGroup h;
  FiniteGroup g;
  std::vector<int> proj;
  std::vector<int> section;
};

// Builds the crossed module (delta = proj, h^g = s(g)^-1 h s(g)); throws
// with a named witness if the kernel is not central or the data is not an
// extension-with-section.
CrossedModuleFinite from_central_extension(const CentralExtension& ext);

CentralExtension z2_z4_z2_extension();                                  // Z2 -> Z4 ->> Z2
CentralExtension trivial_product_extension(const FiniteGroup& a, const FiniteGroup& g);

// Sampled matrix crossed module Z2 -> SU(2) ->> SO(3): delta is the covering
// R(U)_ij = tr(sigma_i U sigma_j U^dagger)/2, the action is conjugation
// through a quaternion-extraction section.  All identities are checked on
// `samples` seeded unitaries; residuals are max-abs matrix deviations.
struct Su2So3Report {
  int samples = 0;
  double delta_hom_residual = 0.0;     // R(UV) vs R(U)R(V)
  double section_residual = 0.0;       // R(s(R)) vs R
  double peiffer_residual = 0.0;       // U^{delta(V)} vs V^-1 U V
  double equivariance_residual = 0.0;  // R(U^g) vs g^-1 R(U) g
  double worst() const {
    return std::max(std::max(delta_hom_residual, section_residual),
                    std::max(peiffer_residual, equivariance_residual));
  }
};

Su2So3Report su2_so3_module_check(int samples, std::uint64_t seed);

// The covering map and its section (exposed for direct testing).
Eigen::Matrix3d su2_to_so3(const Mat& u);
Mat so3_section(const Eigen::Matrix3d& r);

}  // namespace anomaly
