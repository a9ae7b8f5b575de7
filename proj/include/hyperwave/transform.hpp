#pragma once

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "hyperwave/grid.hpp"

namespace hyperwave {

// Type-I discrete sine transform on N interior samples, matching the grid
// convention r_j = j*dr, lambda_k = k*pi/R:
//
//   forward:  b_k = (2/(N+1)) * sum_j v_j sin(pi (j+1)(k+1)/(N+1))
//   inverse:  v_j = sum_k b_k sin(pi (j+1)(k+1)/(N+1))
//
// so the b_k are the coefficients of the sine interpolant
// v(r) = sum_k b_k sin(lambda_k r). Plans are immutable after construction
// and safe to share across threads (FFTW new-array execution).
class SineTransform {
 public:
  explicit SineTransform(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("SineTransform: empty size");
    std::vector<double> a(n), b(n);
    // FFTW_UNALIGNED so new-array execution accepts any buffers later.
    plan_ = fftw_plan_r2r_1d(static_cast<int>(n), a.data(), b.data(),
                             FFTW_RODFT00, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan_) throw std::runtime_error("SineTransform: fftw plan failed");
  }
  ~SineTransform() {
    if (plan_) fftw_destroy_plan(plan_);
  }
  SineTransform(const SineTransform&) = delete;
  SineTransform& operator=(const SineTransform&) = delete;

  std::size_t size() const { return n_; }

  // raw RODFT00: out_k = 2 sum_j in_j sin(pi (j+1)(k+1)/(n+1))
  void raw(const double* in, double* out) const {
    fftw_execute_r2r(plan_, const_cast<double*>(in), out);
  }

  void forward(const double* v, double* coeff) const {
    raw(v, coeff);
    const double scale = 1.0 / static_cast<double>(n_ + 1);
    for (std::size_t k = 0; k < n_; ++k) coeff[k] *= scale;
  }

  void inverse(const double* coeff, double* v) const {
    raw(coeff, v);
    for (std::size_t j = 0; j < n_; ++j) v[j] *= 0.5;
  }

 private:
  std::size_t n_;
  fftw_plan plan_;
};

// Shared plan registry keyed by transform size. Plan creation is serialized;
// execution is lock-free.
inline const SineTransform& sine_transform(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<SineTransform>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_unique<SineTransform>(n)).first;
  }
  return *it->second;
}

// Coefficient-space representation of a field, b_k as above.
template <class Scalar>
struct SpectralCoeffs {
  RadialGrid grid;
  std::vector<Scalar> b;
};

inline SpectralCoeffs<double> sine_coefficients(const RadialProfile& f) {
  SpectralCoeffs<double> out{f.grid, std::vector<double>(f.grid.N)};
  sine_transform(f.grid.N).forward(f.v.data(), out.b.data());
  return out;
}

inline RadialProfile sine_synthesis(const SpectralCoeffs<double>& c) {
  RadialProfile out(c.grid);
  sine_transform(c.grid.N).inverse(c.b.data(), out.v.data());
  return out;
}

inline SpectralCoeffs<std::complex<double>> sine_coefficients(const ComplexProfile& f) {
  const std::size_t n = f.grid.N;
  std::vector<double> re(n), im(n), tre(n), tim(n);
  for (std::size_t j = 0; j < n; ++j) {
    re[j] = f.v[j].real();
    im[j] = f.v[j].imag();
  }
  const auto& plan = sine_transform(n);
  plan.forward(re.data(), tre.data());
  plan.forward(im.data(), tim.data());
  SpectralCoeffs<std::complex<double>> out{f.grid, std::vector<std::complex<double>>(n)};
  for (std::size_t k = 0; k < n; ++k) out.b[k] = {tre[k], tim[k]};
  return out;
}

inline ComplexProfile sine_synthesis(const SpectralCoeffs<std::complex<double>>& c) {
  const std::size_t n = c.grid.N;
  std::vector<double> re(n), im(n), tre(n), tim(n);
  for (std::size_t k = 0; k < n; ++k) {
    re[k] = c.b[k].real();
    im[k] = c.b[k].imag();
  }
  const auto& plan = sine_transform(n);
  plan.inverse(re.data(), tre.data());
  plan.inverse(im.data(), tim.data());
  ComplexProfile out(c.grid);
  for (std::size_t j = 0; j < n; ++j) out.v[j] = {tre[j], tim[j]};
  return out;
}

}  // namespace hyperwave
