#pragma once
/// Homotopy data with bimodule structure: validation, condition flags, homotopy modifications.

#include "hominduce/expr.hpp"
#include "hominduce/multimap.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hominduce {

/// One named identity or condition with its verdict and, when false, a witness.
struct Check {
  std::string name;
  bool holds = true;
  std::string witness;  ///< "basis-label -> nonzero output" for failures
};

/** Cached side-condition flags. */
struct ConditionReport {
  std::vector<Check> flags;  ///< fixed order, see condition_names()
  bool get(const std::string& name) const;
  const Check& at(const std::string& name) const;
};

const std::vector<std::string>& condition_names();

/**
 * Validated instance. Actions are stored on a basis of Im(Z) (image basis of Z,
 * pivot columns in order); the extended tables act through a projection of A onto Im(Z).
 */
class HomotopyData {
 public:
  struct Parts {
    SpacePtr A, B;
    GradedMap dA, dB, Y, Z, hA, hB;
    MultiMap wedge;  ///< arity 2, degree 0 on A
    std::map<std::pair<int, int>, SparseVec> lact;  ///< (Im Z basis index, B index) -> B
    std::map<std::pair<int, int>, SparseVec> ract;  ///< (B index, Im Z basis index) -> B
    std::map<std::string, std::string> provenance;
  };

  /// Validates; throws AxiomViolation naming the first failing identity.
  explicit HomotopyData(Parts parts);

  const Parts& parts() const { return p_; }
  const SpacePtr& A() const { return p_.A; }
  const SpacePtr& B() const { return p_.B; }
  const GradedMap& dA() const { return p_.dA; }
  const GradedMap& dB() const { return p_.dB; }
  const GradedMap& Y() const { return p_.Y; }
  const GradedMap& Z() const { return p_.Z; }
  const GradedMap& hA() const { return p_.hA; }
  const GradedMap& hB() const { return p_.hB; }
  const MultiMap& wedge() const { return p_.wedge; }
  const std::vector<SparseVec>& image_z_basis() const { return imz_; }
  const std::map<std::string, std::string>& provenance() const { return p_.provenance; }
  const ConditionReport& conditions() const { return flags_; }
  const std::vector<Check>& axioms() const { return axioms_; }
  bool flag(const std::string& name) const { return flags_.get(name); }

  /// Structure maps for expression evaluation (pointers into this instance).
  const Operations& ops() const { return ops_; }

  /// Copy with a replaced homotopy on B (re-validated, flags recomputed).
  HomotopyData with_hB(const GradedMap& hB, const std::string& note) const;
  HomotopyData with_hA(const GradedMap& hA, const std::string& note) const;

  HomotopyData(const HomotopyData& o);
  HomotopyData(HomotopyData&& o) noexcept;
  HomotopyData& operator=(const HomotopyData& o);
  HomotopyData& operator=(HomotopyData&& o) noexcept;

 private:
  void build();
  void rebind();
  Parts p_;
  std::vector<SparseVec> imz_;
  Bilinear wedge_bl_, lact_bl_, ract_bl_;
  Operations ops_;
  std::vector<Check> axioms_;
  ConditionReport flags_;
};

/// Runs every axiom check without throwing.
std::vector<Check> check_axioms(const HomotopyData::Parts& p);
ConditionReport compute_conditions(const HomotopyData::Parts& p);

/// Scans a map for the first nonzero column; empty string when the map vanishes.
std::string zero_witness(const GradedMap& m);

GradedMap differential_of(const GradedMap& h, const GradedMap& d);

HomotopyData modify_h_right(const HomotopyData& inst);
HomotopyData modify_h_left(const HomotopyData& inst);
HomotopyData modify_h_weak(const HomotopyData& inst);
HomotopyData modify_h_square(const HomotopyData& inst);
HomotopyData modify_hA_markl(const HomotopyData& inst);

struct MarklBResult {
  std::optional<HomotopyData> instance;  ///< empty when 1_B − Y∘Z = ∂h_B′ fails
  bool homotopy_identity = false;
  bool sc_right_before = false;
  bool sc_right_after = false;
};
MarklBResult modify_hB_markl(const HomotopyData& inst);

/// Degree −1 map h with d h + h d = 1 − projector; throws NoSolution.
GradedMap synthesize_homotopy(const GradedMap& d, const GradedMap& projector);

/// Projection of A onto Im(Z) along the echelon complement, as coefficients on the Im(Z) basis.
std::vector<SparseVec> image_z_coordinates(const GradedMap& Z, std::vector<SparseVec>* basis);

}  // namespace hominduce
