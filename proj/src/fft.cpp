#include "gl3/fft.hpp"

#include <cmath>

#include "gl3/errors.hpp"

namespace gl3 {

void fft_radix2(std::vector<cx>& v, bool invert) {
  const std::size_t n = v.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw RangeExceeded("fft_radix2: size must be a power of two");
  }
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = kTwoPi / static_cast<double>(len) * (invert ? 1.0 : -1.0);
    cx wlen = cis(ang);
    for (std::size_t i = 0; i < n; i += len) {
      cx w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        cx u = v[i + k];
        cx t = v[i + k + len / 2] * w;
        v[i + k] = u + t;
        v[i + k + len / 2] = u - t;
        w *= wlen;
      }
    }
  }
  if (invert) {
    double inv_n = 1.0 / static_cast<double>(n);
    for (auto& z : v) z *= inv_n;
  }
}

std::vector<cx> linear_convolution(const std::vector<cx>& a, const std::vector<cx>& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t out_size = a.size() + b.size() - 1;
  std::size_t n = 1;
  while (n < out_size) n <<= 1;
  std::vector<cx> fa(a.begin(), a.end()), fb(b.begin(), b.end());
  fa.resize(n);
  fb.resize(n);
  fft_radix2(fa, false);
  fft_radix2(fb, false);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  fft_radix2(fa, true);
  fa.resize(out_size);
  return fa;
}

}  // namespace gl3
