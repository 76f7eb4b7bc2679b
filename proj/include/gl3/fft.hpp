// Minimal radix-2 FFT and linear convolution, used to collapse separable
// double-contour sums of the form sum_{i,j} a_i b_j g_{i+j}.
#pragma once

#include <vector>

#include "gl3/types.hpp"

namespace gl3 {

// In-place FFT; v.size() must be a power of two.  invert=true applies the
// inverse transform including the 1/N normalization.
void fft_radix2(std::vector<cx>& v, bool invert);

// Linear convolution c_k = sum_{i+j=k} a_i b_j, size a.size()+b.size()-1.
std::vector<cx> linear_convolution(const std::vector<cx>& a, const std::vector<cx>& b);

}  // namespace gl3
