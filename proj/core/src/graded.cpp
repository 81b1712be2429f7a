#include "hominduce/graded.hpp"

#include "hominduce/errors.hpp"

#include <algorithm>
#include <set>

namespace hominduce {

GradedSpace::GradedSpace(int g_min, std::vector<std::vector<std::string>> labels)
    : g_min_(g_min), labels_(std::move(labels)) {
  for (const auto& deg : labels_) {
    std::set<std::string> seen(deg.begin(), deg.end());
    if (seen.size() != deg.size()) throw Error(ErrorCode::InvalidInput, "duplicate basis label within a degree");
    offsets_.push_back(total_);
    dims_.push_back(static_cast<int>(deg.size()));
    total_ += static_cast<int>(deg.size());
    for (const auto& l : deg) {
      degree_.push_back(g_min_ + static_cast<int>(dims_.size()) - 1);
      flat_labels_.push_back(l);
    }
  }
}

GradedSpace GradedSpace::from_dims(int g_min, const std::vector<int>& dims) {
  std::vector<std::vector<std::string>> labels;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    labels.emplace_back();
    for (int i = 0; i < dims[k]; ++i)
      labels.back().push_back("e" + std::to_string(g_min + static_cast<int>(k)) + "_" + std::to_string(i));
  }
  return GradedSpace(g_min, std::move(labels));
}

int GradedSpace::offset(int g) const {
  if (g < g_min()) return 0;
  if (g > g_max()) return total_;
  return offsets_[g - g_min_];
}

int GradedSpace::find(const std::string& label) const {
  auto it = std::find(flat_labels_.begin(), flat_labels_.end(), label);
  return it == flat_labels_.end() ? -1 : static_cast<int>(it - flat_labels_.begin());
}

SpacePtr make_space(GradedSpace s) { return std::make_shared<const GradedSpace>(std::move(s)); }

bool same_space(const SpacePtr& a, const SpacePtr& b) { return a == b || (a && b && *a == *b); }

GradedMap GradedMap::zero(SpacePtr src, SpacePtr tgt, int degree) {
  GradedMap m;
  m.src = std::move(src);
  m.tgt = std::move(tgt);
  m.degree = degree;
  for (int g = m.src->g_min(); g <= m.src->g_max(); ++g)
    if (m.tgt->in_window(g + degree)) m.blocks.emplace(g, Matrix(m.tgt->dim(g + degree), m.src->dim(g)));
  return m;
}

GradedMap GradedMap::identity(SpacePtr space) {
  GradedMap m = zero(space, space, 0);
  for (auto& [g, b] : m.blocks) b = Matrix::identity(space->dim(g));
  return m;
}

void GradedMap::set(int t, int s, const Scalar& v) {
  int gs = src->degree_of(s);
  if (tgt->degree_of(t) != gs + degree) throw Error(ErrorCode::SpaceMismatch, "inhomogeneous entry for graded map");
  blocks.at(gs).at(tgt->local_index(t), src->local_index(s)) = v;
}

void GradedMap::add(int t, int s, const Scalar& v) {
  int gs = src->degree_of(s);
  if (tgt->degree_of(t) != gs + degree) throw Error(ErrorCode::SpaceMismatch, "inhomogeneous entry for graded map");
  blocks.at(gs).at(tgt->local_index(t), src->local_index(s)) += v;
}

Scalar GradedMap::get(int t, int s) const {
  int gs = src->degree_of(s);
  if (tgt->degree_of(t) != gs + degree) return Scalar(0);
  auto it = blocks.find(gs);
  if (it == blocks.end()) return Scalar(0);
  return it->second.at(tgt->local_index(t), src->local_index(s));
}

SparseVec GradedMap::apply(int s) const {
  SparseVec out;
  int gs = src->degree_of(s);
  auto it = blocks.find(gs);
  if (it == blocks.end()) return out;
  const Matrix& b = it->second;
  int col = src->local_index(s);
  int base = tgt->offset(gs + degree);
  for (int r = 0; r < b.rows; ++r)
    if (!hominduce::is_zero(b.at(r, col))) out.emplace_back(base + r, b.at(r, col));
  return out;
}

SparseVec GradedMap::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [i, x] : v) axpy(out, x, apply(i));
  return out;
}

std::vector<SparseVec> GradedMap::columns() const {
  std::vector<SparseVec> cols(src->total());
  for (int s = 0; s < src->total(); ++s) cols[s] = apply(s);
  return cols;
}

Matrix GradedMap::global_matrix() const {
  Matrix m(tgt->total(), src->total());
  for (int s = 0; s < src->total(); ++s)
    for (const auto& [t, v] : apply(s)) m.at(t, s) = v;
  return m;
}

bool GradedMap::is_zero() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

bool operator==(const GradedMap& a, const GradedMap& b) {
  return same_space(a.src, b.src) && same_space(a.tgt, b.tgt) && a.degree == b.degree && a.blocks == b.blocks;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (!same_space(g.tgt, f.src)) throw Error(ErrorCode::SpaceMismatch, "compose: target of g differs from source of f");
  GradedMap h = GradedMap::zero(g.src, f.tgt, f.degree + g.degree);
  h.overflow = f.overflow || g.overflow;
  for (auto& [gdeg, block] : h.blocks) {
    auto ig = g.blocks.find(gdeg);
    auto jf = f.blocks.find(gdeg + g.degree);
    if (ig == g.blocks.end() || jf == f.blocks.end()) continue;
    block = jf->second * ig->second;
  }
  // Output of g that f sends outside its target window.
  for (const auto& [gdeg, gb] : g.blocks)
    if (!f.blocks.count(gdeg + g.degree) && !gb.is_zero() && f.src->dim(gdeg + g.degree) > 0) h.overflow = true;
  return h;
}

namespace {
void check_compatible(const GradedMap& a, const GradedMap& b) {
  if (!same_space(a.src, b.src) || !same_space(a.tgt, b.tgt) || a.degree != b.degree)
    throw Error(ErrorCode::SpaceMismatch, "graded maps with different shapes");
}
}  // namespace

GradedMap operator+(const GradedMap& a, const GradedMap& b) {
  check_compatible(a, b);
  GradedMap r = a;
  for (auto& [g, m] : r.blocks) m = m + b.blocks.at(g);
  r.overflow = a.overflow || b.overflow;
  return r;
}

GradedMap operator-(const GradedMap& a, const GradedMap& b) {
  check_compatible(a, b);
  GradedMap r = a;
  for (auto& [g, m] : r.blocks) m = m - b.blocks.at(g);
  r.overflow = a.overflow || b.overflow;
  return r;
}

GradedMap operator*(const Scalar& s, const GradedMap& a) {
  GradedMap r = a;
  for (auto& [g, m] : r.blocks) m = s * m;
  return r;
}

std::vector<DegreeRKI> rank_kernel_image(const GradedMap& f) {
  std::vector<DegreeRKI> out;
  for (int g = f.src->g_min(); g <= f.src->g_max(); ++g) {
    DegreeRKI d;
    d.degree = g;
    auto it = f.blocks.find(g);
    if (it == f.blocks.end()) {
      for (int i = 0; i < f.src->dim(g); ++i) {
        DenseVec e(f.src->dim(g));
        e[i] = 1;
        d.kernel.push_back(std::move(e));
      }
    } else {
      d.rank = rank(it->second);
      d.kernel = kernel_basis(it->second);
      d.image = image_basis(it->second);
    }
    out.push_back(std::move(d));
  }
  return out;
}

GradedMap commutator(const GradedMap& f, const GradedMap& d_tgt, const GradedMap& d_src) {
  GradedMap a = compose(d_tgt, f);
  GradedMap b = compose(f, d_src);
  return (f.degree % 2 == 0) ? a - b : a + b;
}

}  // namespace hominduce
