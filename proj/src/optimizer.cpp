#include <Eigen/Dense>

#include "feqlab/stability.hpp"

namespace feqlab {

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// r[x*n+y] = a h(xy) + b h(x sigma(y)) - 2 f(x) f(y), with h = x -> sum_i c_i f(x z_i).
// The residual is holomorphic in f, so the complex Jacobian drives Gauss-Newton directly.
class PairResidual {
 public:
  PairResidual(const FiniteSemigroup& s, const InvolutiveMorphism& sigma, const CentralMeasure& mu,
               double a)
      : s_(s), sigma_(sigma), mu_(mu), a_(a), n_(s.size()) {}

  Vec residual(const Vec& f) const {
    const Vec h = shift(f);
    Vec r(static_cast<Eigen::Index>(n_ * n_));
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        r(idx(x, y)) = a_ * h(plain(x, y)) + h(twisted(x, y)) - 2.0 * f(ix(x)) * f(ix(y));
    return r;
  }

  Mat jacobian(const Vec& f) const {
    const auto n = static_cast<Eigen::Index>(n_);
    Mat j = Mat::Zero(n * n, n);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        const auto row = idx(x, y);
        for (const auto& at : mu_.atoms()) {
          j(row, s_.op(static_cast<Element>(plain(x, y)), at.z)) += a_ * at.c;
          j(row, s_.op(static_cast<Element>(twisted(x, y)), at.z)) += at.c;
        }
        j(row, ix(x)) -= 2.0 * f(ix(y));
        j(row, ix(y)) -= 2.0 * f(ix(x));
      }
    return j;
  }

 private:
  static Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }
  Eigen::Index idx(std::size_t x, std::size_t y) const { return ix(x * n_ + y); }
  Eigen::Index plain(std::size_t x, std::size_t y) const {
    return s_.op(static_cast<Element>(x), static_cast<Element>(y));
  }
  Eigen::Index twisted(std::size_t x, std::size_t y) const {
    return s_.op(static_cast<Element>(x), sigma_(static_cast<Element>(y)));
  }
  Vec shift(const Vec& f) const {
    Vec h = Vec::Zero(ix(n_));
    for (std::size_t x = 0; x < n_; ++x)
      for (const auto& at : mu_.atoms()) h(ix(x)) += at.c * f(s_.op(static_cast<Element>(x), at.z));
    return h;
  }

  const FiniteSemigroup& s_;
  const InvolutiveMorphism& sigma_;
  const CentralMeasure& mu_;
  double a_;
  std::size_t n_;
};

CFunc to_cfunc(const Vec& v) { return CFunc(std::vector<Complex>(v.data(), v.data() + v.size())); }

}  // namespace

MinimizeResult minimize_defect(const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                               const CentralMeasure& mu, Equation equation, const CFunc& start,
                               std::size_t max_iters) {
  if (equation != Equation::Kannappan && equation != Equation::VanVleck)
    throw Error(ErrorCode::BadParams, "minimize_defect supports kannappan and vanvleck");
  if (start.size() != s.size()) throw Error(ErrorCode::SizeMismatch, "start has the wrong size");

  const PairResidual model(s, sigma, mu, equation == Equation::Kannappan ? 1.0 : -1.0);
  const auto n = static_cast<Eigen::Index>(s.size());
  Vec f = Eigen::Map<const Vec>(start.data(), n);
  Vec r = model.residual(f);
  double cost = r.squaredNorm();
  double lambda = 1e-3;

  MinimizeResult res;
  for (; res.iterations < max_iters; ++res.iterations) {
    if (r.cwiseAbs().maxCoeff() <= 1e-14) break;
    const Mat j = model.jacobian(f);
    const Mat jhj = j.adjoint() * j;
    const Vec grad = j.adjoint() * r;
    bool improved = false;
    for (int attempt = 0; attempt < 30 && !improved; ++attempt) {
      Mat lhs = jhj;
      lhs.diagonal().array() += lambda * (1.0 + jhj.diagonal().real().array());
      const Vec step = lhs.ldlt().solve(-grad);
      const Vec trial = f + step;
      const Vec rt = model.residual(trial);
      const double ct = rt.squaredNorm();
      if (ct < cost) {
        f = trial;
        r = rt;
        cost = ct;
        lambda = std::max(lambda / 3.0, 1e-12);
        improved = true;
      } else {
        lambda *= 4.0;
      }
    }
    if (!improved) break;
  }

  res.f = to_cfunc(f);
  res.defect = defect_of(equation, res.f, s, sigma, mu).max_defect;
  res.converged = res.defect <= 1e-10;
  return res;
}

}  // namespace feqlab
