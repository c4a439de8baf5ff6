#include <cmath>

#include "feqlab/kernels.hpp"

namespace feqlab::kernels::scalar {

void pair_row(const PairRow& row, double* out) {
  const double* h = reinterpret_cast<const double*>(row.h);
  const Element* twisted = row.twisted ? row.twisted : row.plain;
  const double* q = reinterpret_cast<const double*>(row.q);
  const double* s = reinterpret_cast<const double*>(row.s ? row.s : row.q);
  const double p_re = row.p.real(), p_im = row.p.imag();
  const double r_re = row.r.real(), r_im = row.r.imag();

  for (std::size_t y = 0; y < row.n; ++y) {
    const std::size_t i1 = 2 * static_cast<std::size_t>(row.plain[y]);
    const std::size_t i2 = 2 * static_cast<std::size_t>(twisted[y]);
    const double a_re = row.a * h[i1] + row.b * h[i2];
    const double a_im = row.a * h[i1 + 1] + row.b * h[i2 + 1];
    const double q_re = q[2 * y], q_im = q[2 * y + 1];
    const double s_re = s[2 * y], s_im = s[2 * y + 1];
    const double b_re = (p_re * q_re - p_im * q_im) + (r_re * s_re - r_im * s_im);
    const double b_im = (p_re * q_im + p_im * q_re) + (r_re * s_im + r_im * s_re);
    const double d_re = a_re - b_re;
    const double d_im = a_im - b_im;
    out[y] = std::sqrt(d_re * d_re + d_im * d_im);
  }
}

void gather_axpy(Complex c, const Complex* f, const Element* idx, std::size_t n, Complex* out) {
  const double* fd = reinterpret_cast<const double*>(f);
  double* od = reinterpret_cast<double*>(out);
  const double c_re = c.real(), c_im = c.imag();
  for (std::size_t w = 0; w < n; ++w) {
    const std::size_t i = 2 * static_cast<std::size_t>(idx[w]);
    const double t_re = c_re * fd[i] - c_im * fd[i + 1];
    const double t_im = c_re * fd[i + 1] + c_im * fd[i];
    od[2 * w] = od[2 * w] + t_re;
    od[2 * w + 1] = od[2 * w + 1] + t_im;
  }
}

}  // namespace feqlab::kernels::scalar
