#pragma once
/// Decorated planar trees, their formal sums, restricted grafting, and evaluation.

#include "hominduce/multimap.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hominduce {

enum class Op : std::uint8_t { Leaf, dA, dB, Y, Z, hA, hB, Wedge, Lact, Ract };
enum class Sp : std::uint8_t { A, B };

struct Node;
using Tree = std::shared_ptr<const Node>;

/**
 * Immutable tree node. Leaves carry no number: slots are numbered 1..n by
 * left-to-right position, so subtrees can be shared and grafted freely.
 */
struct Node {
  Op op = Op::Leaf;
  std::vector<Tree> kids;
  Sp space = Sp::B;
  bool in_image_z = false;  ///< value lies in Im(Z)
  int leaves = 1;
  int degree = 0;   ///< formal degree: sum of node degrees
  int odd_nodes = 0;
  std::string repr;  ///< bracketed shape, leaves drawn as "_"
};

Tree leaf();
/// Throws TypeCheckFailure on space violations.
Tree unary(Op op, Tree t);
Tree binary(Op op, Tree l, Tree r);
/// Parses the debug rendering, e.g. "lact(Z(1),hB(2))"; slots must read 1..n.
Tree parse_tree(const std::string& text);

/// 0-based positions of leaves whose immediate parent edge carries no unary decoration.
std::vector<int> free_slots(const Tree& t);
/// Leaves whose immediate parent is the given unary op (Z or hB).
std::vector<int> decorated_slots(const Tree& t, Op decoration);
/// Bit i set when (-1)^{|b_{i+1}|} enters the Koszul sign of the tree.
std::uint32_t koszul_mask(const Tree& t);

/** One signed term: coef * (-1)^{Σ_{i in mask}|b_i|} * tree, the tree evaluated with Koszul signs. */
struct Term {
  Scalar coef;
  std::uint32_t mask = 0;
  Tree tree;
};

/// SC-based pruning switches; each drops subtrees that vanish under the named condition.
struct Pruning {
  bool z_hb = false;   ///< Z∘h_B = 0
  bool hb_hb = false;  ///< h_B∘h_B = 0
  bool hb_y = false;   ///< h_B∘Y = 0
};

/** Formal sum of trees of common arity and degree, kept canonical (sorted, merged, no zeros). */
class ExprSum {
 public:
  ExprSum() = default;
  ExprSum(int arity, int degree) : arity_(arity), degree_(degree) {}

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  const std::vector<Term>& terms() const {
    ensure();
    return terms_;
  }
  bool empty() const { return terms().empty(); }

  /// Adds a term whose sign is computed by Koszul rules (mask adds explicit parities on top).
  void add(const Scalar& coef, const Tree& t, std::uint32_t mask = 0);
  /// Adds a term read as a pointwise formula: explicit_mask lists the printed (-1)^{|b_i|} factors.
  void add_literal(const Scalar& coef, const Tree& t, std::uint32_t explicit_mask = 0);
  void add_literal(const Scalar& coef, const std::string& tree, std::uint32_t explicit_mask = 0) {
    add_literal(coef, parse_tree(tree), explicit_mask);
  }

  ExprSum& operator+=(const ExprSum& o);
  ExprSum& operator-=(const ExprSum& o);
  friend ExprSum operator*(const Scalar& s, const ExprSum& e);
  friend bool operator==(const ExprSum& a, const ExprSum& b);

  /// Applies module/bimodule/associativity rewrites and optional pruning, then canonicalizes.
  ExprSum normalized(const Pruning& p = {}) const;
  std::string render() const;

 private:
  void canonicalize() const;
  void ensure() const {
    if (dirty_) canonicalize();
  }
  int arity_ = 0;
  int degree_ = 0;
  mutable std::vector<Term> terms_;
  mutable bool dirty_ = false;
};

ExprSum operator+(ExprSum a, const ExprSum& b);
ExprSum operator-(ExprSum a, const ExprSum& b);

/// f ∘ (1^{⊗j} ⊗ g ⊗ 1^{⊗t}) as a single term (0-based slot j).
Term graft(const Term& f, int j, const Term& g);
/// Inserts h_B on the unique free slot of each term; drops terms without one.
ExprSum compose_fb(const ExprSum& e, const Pruning& p = {});
/// Inserts h_B on every slot.
ExprSum compose_all_slots_hb(const ExprSum& e, const Pruning& p = {});
/// Grafts g into every slot of e decorated by `decoration` with the operadic sign (-1)^{j+i+k(i-j-1)}.
ExprSum compose_slot(const ExprSum& e, Op decoration, const ExprSum& g, const Pruning& p = {});
/// Grafts g into the free slots of e with the operadic sign.
ExprSum compose_free(const ExprSum& e, const ExprSum& g, const Pruning& p = {});
/// Full operadic composition e ∘ g over all slots.
ExprSum op_compose(const ExprSum& e, const ExprSum& g, const Pruning& p = {});

/// Bilinear structure table (left basis, right basis) -> output vector.
struct Bilinear {
  SpacePtr left, right, out;
  std::map<std::pair<int, int>, SparseVec> table;
  SparseVec apply(int i, int j) const;
};

/// The maps and products a tree may reference.
struct Operations {
  SpacePtr A, B;
  const GradedMap* dA = nullptr;
  const GradedMap* dB = nullptr;
  const GradedMap* Y = nullptr;
  const GradedMap* Z = nullptr;
  const GradedMap* hA = nullptr;
  const GradedMap* hB = nullptr;
  const Bilinear* wedge = nullptr;
  const Bilinear* lact = nullptr;  ///< extended to all of A via projection onto Im(Z)
  const Bilinear* ract = nullptr;
};

/** Memoizes subtree evaluations by rendering; valid for a single Operations value. */
class EvalCache {
 public:
  explicit EvalCache(const Operations& ops) : ops_(ops) {}
  const MultiMap& tree(const Tree& t);
  MultiMap sum(const ExprSum& e);
  std::size_t size() const { return cache_.size(); }

 private:
  const Operations& ops_;
  std::map<std::string, MultiMap> cache_;
};

MultiMap evaluate(const ExprSum& e, const Operations& ops);
/// Pointwise oracle: evaluates every basis tuple separately, no sharing.
MultiMap evaluate_naive(const ExprSum& e, const Operations& ops);

/// Bilinear combination op(L ⊗ R) with Koszul sign (-1)^{|R||x_L|}.
MultiMap combine(const Bilinear& op, const MultiMap& l, const MultiMap& r);

}  // namespace hominduce
