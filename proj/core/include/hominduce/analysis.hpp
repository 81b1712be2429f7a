#pragma once
/// Obstruction classes, strict morphisms, Hochschild checks and Massey transfer.

#include "hominduce/cohomology.hpp"
#include "hominduce/towers.hpp"

#include <optional>
#include <string>

namespace hominduce {

/** Class of a ∂-closed map: either a primitive x with ∂x = target or a left-kernel witness. */
struct ClassCertificate {
  bool zero = false;
  std::optional<MultiMap> primitive;
  std::optional<DenseVec> witness;  ///< y with y·∂ = 0 and y·target = 1
};

/// Throws NotClosed when ∂target ≠ 0.
ClassCertificate class_of(const MultiMap& target, const GradedMap& d_tgt, const GradedMap& d_src);
/// Re-checks a certificate from scratch.
bool reverify(const ClassCertificate& c, const MultiMap& target, const GradedMap& d_tgt, const GradedMap& d_src);

struct HomObstruction {
  GradedMap representative;  ///< Z∘h_B − h_A∘Z, B -> A, degree −1
  ClassCertificate certificate;
  bool class_zero() const { return certificate.zero; }
};

/// Tries −h_A∘h_A∘Z as a primitive first, then solves.
HomObstruction obstruction_class(const HomotopyData& inst);
bool reverify(const HomObstruction& o, const HomotopyData& inst);

/// Class of ∧ in H(Hom(A⊗², A)).
ClassCertificate wedge_class(const HomotopyData& inst);

struct MorphismReport {
  std::map<int, MultiMap> residuals;  ///< f1∘m_n − m'_n∘f1^{⊗n}
  bool residuals_zero = true;
  int first_nonzero = 0;
  bool quasi_iso = false;
};

/// Strict morphism check with f_i = 0 for i ≥ 2; missing target products count as zero.
MorphismReport check_strict_morphism(const GradedMap& f1, const Products& source, const Products& target, int N);

/// Arity components of the cochain; degrees may differ between arities.
using Cochain = std::map<int, MultiMap>;

/**
 * Components 1..N of Σ_n ((−1)^{n−1} m_n^ht ∘ μ − (−1)^{|μ|} μ ∘ m_n^ht), with
 * m^ht in the ∂m_n = +Ass_n normalization. Throws TruncationTooTight when N exceeds the tower.
 */
Cochain hochschild_differential(const Cochain& mu, const AInftyTower& ht, int N);

struct DeformationReport {
  Cochain mu;
  Cochain dH;
  int first_nonzero = 0;  ///< 0 when every component vanishes
  std::string witness;
  bool trivially_zero = false;  ///< μ itself vanishes
};

/// μ = Σ_{i≥2} (m_i − m_i^ht), using the SC tower when SC holds and the general tower otherwise.
DeformationReport check_infinitesimal_deformation(const HomotopyData& inst, const Scalar& k1, const Scalar& k2, int N);

struct MasseyTower {
  CohomologyModel model;
  Products M;     ///< from the module-induced tower
  Products M_ht;  ///< from the transfer tower
  std::vector<std::string> notes;
};

/// Transfers both towers to H(B); both outputs are defect-certified.
MasseyTower massey_transfer(const HomotopyData& inst, const AInftyTower& tower, int N);

}  // namespace hominduce
