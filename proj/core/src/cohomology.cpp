#include "hominduce/cohomology.hpp"

#include "hominduce/errors.hpp"

namespace hominduce {

namespace {

// Greedily appends candidates that raise the rank of `basis`.
void extend_basis(std::vector<DenseVec>& basis, const std::vector<DenseVec>& candidates,
                  std::vector<DenseVec>* accepted) {
  for (const auto& c : candidates) {
    if (c.empty()) continue;
    Matrix m(static_cast<int>(c.size()), static_cast<int>(basis.size()) + 1);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t r = 0; r < c.size(); ++r) m.at(static_cast<int>(r), static_cast<int>(k)) = basis[k][r];
    for (std::size_t r = 0; r < c.size(); ++r) m.at(static_cast<int>(r), static_cast<int>(basis.size())) = c[r];
    if (rank(m) == static_cast<int>(basis.size()) + 1) {
      basis.push_back(c);
      if (accepted) accepted->push_back(c);
    }
  }
}

DenseVec unit(int n, int i) {
  DenseVec e(n);
  e[i] = 1;
  return e;
}

DenseVec mat_vec(const Matrix& m, const DenseVec& v) {
  DenseVec out(m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (!is_zero(v[c])) out[r] += m.at(r, c) * v[c];
  return out;
}

}  // namespace

CohomologyModel cohomology(const SpacePtr& space, const GradedMap& d) {
  if (d.degree != 1 || !same_space(d.src, space) || !same_space(d.tgt, space))
    throw Error(ErrorCode::NotADifferential, "differential must be a degree +1 endomorphism");
  if (!compose(d, d).is_zero()) throw Error(ErrorCode::NotADifferential, "d∘d is nonzero");

  const int lo = space->g_min(), hi = space->g_max();
  struct Split {
    std::vector<DenseVec> im, h, c;
  };
  std::vector<Split> split(hi - lo + 1);

  for (int g = lo; g <= hi; ++g) {
    const int n = space->dim(g);
    Split& s = split[g - lo];
    auto it = d.blocks.find(g);
    Matrix dg = it == d.blocks.end() ? Matrix(0, n) : it->second;
    // Complement of the kernel: unit vectors whose images stay independent.
    std::vector<DenseVec> images;
    for (int j = 0; j < n; ++j) {
      DenseVec img = mat_vec(dg, unit(n, j));
      std::vector<DenseVec> acc;
      extend_basis(images, {img}, &acc);
      if (!acc.empty()) s.c.push_back(unit(n, j));
    }
    if (g + 1 <= hi) split[g + 1 - lo].im = images;
    // Kernel, then extend im(d_{g-1}) to a kernel basis.
    std::vector<DenseVec> kern = kernel_basis(dg);
    if (dg.rows == 0) {
      kern.clear();
      for (int j = 0; j < n; ++j) kern.push_back(unit(n, j));
    }
    std::vector<DenseVec> acc_basis = s.im;
    extend_basis(acc_basis, kern, &s.h);
  }

  std::vector<std::vector<std::string>> hlabels;
  for (int g = lo; g <= hi; ++g) {
    hlabels.emplace_back();
    for (std::size_t k = 0; k < split[g - lo].h.size(); ++k)
      hlabels.back().push_back("H" + std::to_string(g) + "_" + std::to_string(k));
  }
  CohomologyModel model;
  model.B = space;
  model.d = d;
  model.H = make_space(GradedSpace(lo, std::move(hlabels)));
  model.i = GradedMap::zero(model.H, space, 0);
  model.p = GradedMap::zero(space, model.H, 0);
  model.h_split = GradedMap::zero(space, space, -1);

  for (int g = lo; g <= hi; ++g) {
    const int n = space->dim(g);
    if (n == 0) continue;
    const Split& s = split[g - lo];
    Matrix q(n, n);
    int col = 0;
    for (const auto* part : {&s.im, &s.h, &s.c})
      for (const auto& v : *part) {
        for (int r = 0; r < n; ++r) q.at(r, col) = v[r];
        ++col;
      }
    auto qinv = inverse(q);
    if (!qinv) throw Error(ErrorCode::NotADifferential, "splitting failed to span degree " + std::to_string(g));
    const int nim = static_cast<int>(s.im.size()), nh = static_cast<int>(s.h.size());
    Matrix& ib = model.i.blocks.at(g);
    for (int k = 0; k < nh; ++k)
      for (int r = 0; r < n; ++r) ib.at(r, k) = s.h[k][r];
    Matrix& pb = model.p.blocks.at(g);
    for (int k = 0; k < nh; ++k)
      for (int c = 0; c < n; ++c) pb.at(k, c) = qinv->at(nim + k, c);
    if (g - 1 >= lo) {
      // im(d_{g-1}) basis vectors are d(c_j) for the complement basis c_j of degree g-1.
      const Split& prev = split[g - 1 - lo];
      Matrix& hb = model.h_split.blocks.at(g);
      for (int k = 0; k < nim; ++k)
        for (int c = 0; c < n; ++c) {
          const Scalar& coef = qinv->at(k, c);
          if (is_zero(coef)) continue;
          for (int r = 0; r < space->dim(g - 1); ++r) hb.at(r, c) += coef * prev.c[k][r];
        }
    }
  }
  return model;
}

std::vector<std::string> CohomologyModel::failed_identities() const {
  std::vector<std::string> bad;
  if (!compose(d, i).is_zero()) bad.push_back("d∘i = 0");
  if (!compose(p, d).is_zero()) bad.push_back("p∘d = 0");
  if (!(compose(p, i) == GradedMap::identity(H))) bad.push_back("p∘i = 1_H");
  GradedMap lhs = GradedMap::identity(B) - compose(i, p);
  GradedMap rhs = compose(d, h_split) + compose(h_split, d);
  if (!(lhs == rhs)) bad.push_back("1 - i∘p = d h + h d");
  if (!compose(p, h_split).is_zero()) bad.push_back("p∘h = 0");
  if (!compose(h_split, i).is_zero()) bad.push_back("h∘i = 0");
  if (!compose(h_split, h_split).is_zero()) bad.push_back("h∘h = 0");
  return bad;
}

}  // namespace hominduce
