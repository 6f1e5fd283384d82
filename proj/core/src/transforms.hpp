#ifndef FINHILB_TRANSFORMS_HPP
#define FINHILB_TRANSFORMS_HPP

// Internal FFTW-backed real transforms with a mutex-guarded plan cache.
// All entry points are safe for concurrent use; plans are created once per
// (kind, size) and executed through the new-array interface.

#include <vector>

namespace finhilb::detail {

// out_k = 2 sum_j in_j cos(pi (j+1/2) k / n)            (DCT-II, FFTW REDFT10)
std::vector<double> dct2(const std::vector<double>& in);

// out_j = in_0 + 2 sum_{k>=1} in_k cos(pi (j+1/2) k / n)  (DCT-III, FFTW REDFT01)
std::vector<double> dct3(const std::vector<double>& in);

// out_k = 2 sum_j in_j sin(pi (j+1/2) (k+1) / n)         (DST-II, FFTW RODFT10)
std::vector<double> dst2(const std::vector<double>& in);

// out_j = (-1)^j in_{n-1} + 2 sum_{k<n-1} in_k sin(pi (j+1/2) (k+1) / n)
//                                                        (DST-III, FFTW RODFT01)
std::vector<double> dst3(const std::vector<double>& in);

// Halfcomplex forward/backward (FFTW R2HC / HC2R), unnormalized.
std::vector<double> r2hc(const std::vector<double>& in);
std::vector<double> hc2r(const std::vector<double>& in);

}  // namespace finhilb::detail

#endif
