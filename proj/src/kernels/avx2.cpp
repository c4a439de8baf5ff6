// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "feqlab/kernels.hpp"

namespace feqlab::kernels::avx2 {

namespace {

// Four consecutive interleaved complex values -> (re[0..3], im[0..3]).
inline void load_split(const double* p, __m256d& re, __m256d& im) {
  const __m256d v0 = _mm256_loadu_pd(p);
  const __m256d v1 = _mm256_loadu_pd(p + 4);
  re = _mm256_permute4x64_pd(_mm256_unpacklo_pd(v0, v1), _MM_SHUFFLE(3, 1, 2, 0));
  im = _mm256_permute4x64_pd(_mm256_unpackhi_pd(v0, v1), _MM_SHUFFLE(3, 1, 2, 0));
}

inline void store_merged(double* p, __m256d re, __m256d im) {
  const __m256d lo = _mm256_unpacklo_pd(re, im);
  const __m256d hi = _mm256_unpackhi_pd(re, im);
  _mm256_storeu_pd(p, _mm256_permute2f128_pd(lo, hi, 0x20));
  _mm256_storeu_pd(p + 4, _mm256_permute2f128_pd(lo, hi, 0x31));
}

// Gathers h[idx[0..3]] from an interleaved complex array.
inline void gather_split(const double* h, const Element* idx, __m256d& re, __m256d& im) {
  __m128i i = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx));
  i = _mm_add_epi32(i, i);
  re = _mm256_i32gather_pd(h, i, 8);
  im = _mm256_i32gather_pd(h + 1, i, 8);
}

}  // namespace

void pair_row(const PairRow& row, double* out) {
  const double* h = reinterpret_cast<const double*>(row.h);
  const Element* twisted = row.twisted ? row.twisted : row.plain;
  const double* q = reinterpret_cast<const double*>(row.q);
  const double* s = reinterpret_cast<const double*>(row.s ? row.s : row.q);

  const __m256d a = _mm256_set1_pd(row.a), b = _mm256_set1_pd(row.b);
  const __m256d p_re = _mm256_set1_pd(row.p.real()), p_im = _mm256_set1_pd(row.p.imag());
  const __m256d r_re = _mm256_set1_pd(row.r.real()), r_im = _mm256_set1_pd(row.r.imag());

  std::size_t y = 0;
  for (; y + 4 <= row.n; y += 4) {
    __m256d h1_re, h1_im, h2_re, h2_im, q_re, q_im, s_re, s_im;
    gather_split(h, row.plain + y, h1_re, h1_im);
    gather_split(h, twisted + y, h2_re, h2_im);
    load_split(q + 2 * y, q_re, q_im);
    load_split(s + 2 * y, s_re, s_im);

    const __m256d a_re = _mm256_add_pd(_mm256_mul_pd(a, h1_re), _mm256_mul_pd(b, h2_re));
    const __m256d a_im = _mm256_add_pd(_mm256_mul_pd(a, h1_im), _mm256_mul_pd(b, h2_im));
    const __m256d b_re =
        _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(p_re, q_re), _mm256_mul_pd(p_im, q_im)),
                      _mm256_sub_pd(_mm256_mul_pd(r_re, s_re), _mm256_mul_pd(r_im, s_im)));
    const __m256d b_im =
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(p_re, q_im), _mm256_mul_pd(p_im, q_re)),
                      _mm256_add_pd(_mm256_mul_pd(r_re, s_im), _mm256_mul_pd(r_im, s_re)));
    const __m256d d_re = _mm256_sub_pd(a_re, b_re);
    const __m256d d_im = _mm256_sub_pd(a_im, b_im);
    const __m256d mag =
        _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(d_re, d_re), _mm256_mul_pd(d_im, d_im)));
    _mm256_storeu_pd(out + y, mag);
  }
  if (y < row.n) {
    PairRow tail = row;
    tail.plain = row.plain + y;
    tail.twisted = twisted + y;
    tail.q = row.q + y;
    tail.s = (row.s ? row.s : row.q) + y;
    tail.n = row.n - y;
    scalar::pair_row(tail, out + y);
  }
}

void gather_axpy(Complex c, const Complex* f, const Element* idx, std::size_t n, Complex* out) {
  const double* fd = reinterpret_cast<const double*>(f);
  double* od = reinterpret_cast<double*>(out);
  const __m256d c_re = _mm256_set1_pd(c.real()), c_im = _mm256_set1_pd(c.imag());

  std::size_t w = 0;
  for (; w + 4 <= n; w += 4) {
    __m256d f_re, f_im, o_re, o_im;
    gather_split(fd, idx + w, f_re, f_im);
    load_split(od + 2 * w, o_re, o_im);
    const __m256d t_re = _mm256_sub_pd(_mm256_mul_pd(c_re, f_re), _mm256_mul_pd(c_im, f_im));
    const __m256d t_im = _mm256_add_pd(_mm256_mul_pd(c_re, f_im), _mm256_mul_pd(c_im, f_re));
    store_merged(od + 2 * w, _mm256_add_pd(o_re, t_re), _mm256_add_pd(o_im, t_im));
  }
  if (w < n) scalar::gather_axpy(c, f, idx + w, n - w, out + w);
}

}  // namespace feqlab::kernels::avx2
