#pragma once
/// Finite-dimensional Z-graded spaces and homogeneous maps between them.

#include "hominduce/linalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hominduce {

/**
 * Graded space on an inclusive window [g_min, g_max]. Basis elements are
 * addressed globally, ordered by degree and then by position within the degree.
 */
class GradedSpace {
 public:
  GradedSpace() = default;
  /// labels[k] lists the basis of degree g_min + k.
  GradedSpace(int g_min, std::vector<std::vector<std::string>> labels);
  /// Anonymous labels "e<deg>_<i>".
  static GradedSpace from_dims(int g_min, const std::vector<int>& dims);

  int g_min() const { return g_min_; }
  int g_max() const { return g_min_ + static_cast<int>(dims_.size()) - 1; }
  bool in_window(int g) const { return g >= g_min() && g <= g_max(); }
  int dim(int g) const { return in_window(g) ? dims_[g - g_min_] : 0; }
  int total() const { return total_; }
  int offset(int g) const;
  int degree_of(int global) const { return degree_[global]; }
  int local_index(int global) const { return global - offset(degree_[global]); }
  const std::string& label(int global) const { return flat_labels_[global]; }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<std::vector<std::string>>& labels() const { return labels_; }
  /// Global index of a label, -1 if absent.
  int find(const std::string& label) const;

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
    return a.g_min_ == b.g_min_ && a.labels_ == b.labels_;
  }

 private:
  int g_min_ = 0;
  std::vector<int> dims_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<int> offsets_;
  std::vector<int> degree_;
  std::vector<std::string> flat_labels_;
  int total_ = 0;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;
SpacePtr make_space(GradedSpace s);
bool same_space(const SpacePtr& a, const SpacePtr& b);

/**
 * Homogeneous map of fixed degree, stored as one dense block per source degree.
 * A block exists exactly when source and shifted target degrees are both in their windows.
 */
struct GradedMap {
  SpacePtr src;
  SpacePtr tgt;
  int degree = 0;
  std::map<int, Matrix> blocks;
  bool overflow = false;  ///< set when a composite dropped out-of-window output

  static GradedMap zero(SpacePtr src, SpacePtr tgt, int degree);
  static GradedMap identity(SpacePtr space);

  /// Writes coefficient of target basis t in the image of source basis s (global indices).
  void set(int t, int s, const Scalar& v);
  void add(int t, int s, const Scalar& v);
  Scalar get(int t, int s) const;

  SparseVec apply(int s) const;
  SparseVec apply(const SparseVec& v) const;
  /// Image of every source basis vector.
  std::vector<SparseVec> columns() const;
  /// Total-dimension matrix (target x source).
  Matrix global_matrix() const;
  bool is_zero() const;

  friend bool operator==(const GradedMap& a, const GradedMap& b);
};

GradedMap compose(const GradedMap& f, const GradedMap& g);
GradedMap operator+(const GradedMap& a, const GradedMap& b);
GradedMap operator-(const GradedMap& a, const GradedMap& b);
GradedMap operator*(const Scalar& s, const GradedMap& a);

/// Per-degree rank, kernel and image, as coordinate vectors local to each degree.
struct DegreeRKI {
  int degree = 0;
  int rank = 0;
  std::vector<DenseVec> kernel;
  std::vector<DenseVec> image;
};
std::vector<DegreeRKI> rank_kernel_image(const GradedMap& f);

/// Graded commutator with a differential of degree +1: d_t f - (-1)^{|f|} f d_s.
GradedMap commutator(const GradedMap& f, const GradedMap& d_tgt, const GradedMap& d_src);

}  // namespace hominduce
