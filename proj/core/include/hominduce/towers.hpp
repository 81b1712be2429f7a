#pragma once
/// Homotopy-transfer and module-induced A∞ towers, plus the named low-arity maps.

#include "hominduce/homotopy_data.hpp"

#include <map>
#include <string>
#include <vector>

namespace hominduce {

/** Products m_1..m_N on B. Stored in the defect convention (Σ (−1)^{r+st} m(1⊗m⊗1) = 0). */
struct AInftyTower {
  std::string method;  ///< "ht", "hmi_sc" or "hmi_general"
  Scalar k1 = 0, k2 = 0;
  int N = 0;
  Products m;
  std::map<int, ExprSum> expr;  ///< symbolic forms, in the ∂m_n = Ass_n normalization
  std::vector<std::string> notes;
};

constexpr int kDefaultArity = 6;
constexpr int kMaxTowerArity = 8;

/// m_n ↦ (−1)^n m_n for n ≥ 3: switches between ∂m_n = −Ass_n and ∂m_n = +Ass_n.
Products to_paper_normalization(const Products& m);

/// Arities n ≤ N whose A∞ defect is nonzero.
std::vector<int> failing_arities(const Products& m, int N);

/// Expression library (∂m_n = +Ass_n normalization); k1, k2 are numeric.
namespace formulas {
ExprSum m2(const Scalar& k1, const Scalar& k2);
ExprSum m2_tilde(const Scalar& k1, const Scalar& k2);
ExprSum associator(const Scalar& k1, const Scalar& k2);
ExprSum m3(const Scalar& k1, const Scalar& k2);
ExprSum pentagonator(const Scalar& k1, const Scalar& k2);
/// ∂m4 = Pen + R_Y. Pen is −Ass_4, so a tower's m_4 equals −m4 where both are defined.
ExprSum m4(const Scalar& k1, const Scalar& k2);
ExprSum m4_sc(const Scalar& k1, const Scalar& k2);
ExprSum residual_RY(const Scalar& k1, const Scalar& k2);
ExprSum m2_ht();
ExprSum m3_ht();
/// Closed form of m_2 ∘ m_2^ht on instances with Z∘Y∘Z = Z.
ExprSum m2_after_m2_ht(const Scalar& k1, const Scalar& k2);
}  // namespace formulas

MultiMap hmi_m2(const HomotopyData& inst, const Scalar& k1, const Scalar& k2);
MultiMap hmi_m2_tilde(const HomotopyData& inst, const Scalar& k1, const Scalar& k2);
MultiMap hmi_m3(const HomotopyData& inst, const Scalar& k1, const Scalar& k2);
MultiMap hmi_m4(const HomotopyData& inst, const Scalar& k1, const Scalar& k2);
MultiMap hmi_m4_sc(const HomotopyData& inst, const Scalar& k1, const Scalar& k2);
MultiMap pentagonator_closed(const HomotopyData& inst, const Scalar& k1, const Scalar& k2);
MultiMap residual_RY(const HomotopyData& inst, const Scalar& k1, const Scalar& k2);

/// m_2(m_2 ⊗ 1) − m_2(1 ⊗ m_2).
MultiMap associator(const MultiMap& m2);
/// m_2(m_3⊗1) + m_2(1⊗m_3) − m_3(m_2⊗1⊗1) + m_3(1⊗m_2⊗1) − m_3(1⊗1⊗m_2), Koszul-signed.
MultiMap pentagonator(const MultiMap& m2, const MultiMap& m3);

/// Throws DefectNonzero when certification fails.
AInftyTower ht_tower(const HomotopyData& inst, int N = kDefaultArity);
/// Requires SC_left, SC_right, SC_sq; m_n = (m_{n−1} ∘ m_2) ∘ h_B.
AInftyTower hmi_tower_sc(const HomotopyData& inst, const Scalar& k1, const Scalar& k2, int N = kDefaultArity);
/// Requires WSC or k1 = −k2; m_n = m̃_2 ∘_Z m_{n−1} + m_{n−1} ∘_{h_B} m̃_2.
AInftyTower hmi_tower_general(const HomotopyData& inst, const Scalar& k1, const Scalar& k2, int N = 5);

}  // namespace hominduce
