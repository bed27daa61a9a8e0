#include "gaugelab/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace gaugelab {

namespace {

// One r2c/c2r plan pair per lattice size. Plans are created once under a
// mutex and then only used through the thread-safe new-array execute calls.
class PlanPair {
 public:
  explicit PlanPair(int n) {
    const std::size_t real_size = static_cast<std::size_t>(n) * n * n;
    const std::size_t cplx_size = static_cast<std::size_t>(n) * n * (n / 2 + 1);
    double* in = fftw_alloc_real(real_size);
    fftw_complex* out = fftw_alloc_complex(cplx_size);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    r2c_ = fftw_plan_dft_r2c_3d(n, n, n, in, out, flags);
    c2r_ = fftw_plan_dft_c2r_3d(n, n, n, out, in, flags);
    fftw_free(in);
    fftw_free(out);
  }
  PlanPair(const PlanPair&) = delete;
  PlanPair& operator=(const PlanPair&) = delete;
  ~PlanPair() {
    fftw_destroy_plan(r2c_);
    fftw_destroy_plan(c2r_);
  }

  void r2c(const double* in, Complex* out) const {
    // FFTW never writes the input of an out-of-place r2c transform.
    fftw_execute_dft_r2c(r2c_, const_cast<double*>(in), reinterpret_cast<fftw_complex*>(out));
  }
  // c2r destroys its input, so callers pass a scratch copy.
  void c2r(Complex* in, double* out) const {
    fftw_execute_dft_c2r(c2r_, reinterpret_cast<fftw_complex*>(in), out);
  }

 private:
  fftw_plan r2c_;
  fftw_plan c2r_;
};

const PlanPair& plans_for(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<PlanPair>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<PlanPair>(n);
  return *slot;
}

}  // namespace

ScalarSpectrum::ScalarSpectrum(const Grid& grid)
    : grid_(grid), data_(static_cast<std::size_t>(grid.n()) * grid.n() * (grid.n() / 2 + 1)) {}

ScalarSpectrum forward(const ScalarField& f) {
  ScalarSpectrum s(f.grid());
  plans_for(f.grid().n()).r2c(f.values().data(), s.data().data());
  return s;
}

VectorSpectrum forward(const VectorField& v) {
  VectorSpectrum s(v.grid());
  const auto& p = plans_for(v.grid().n());
  for (int c = 0; c < 3; ++c) p.r2c(v.component(c).data(), s.comp[c].data().data());
  return s;
}

ScalarField inverse(const ScalarSpectrum& s) {
  ScalarField f(s.grid());
  std::vector<Complex> scratch = s.data();
  plans_for(s.grid().n()).c2r(scratch.data(), f.values().data());
  const double scale = 1.0 / static_cast<double>(s.grid().size());
  f *= scale;
  return f;
}

VectorField inverse(const VectorSpectrum& s) {
  return VectorField(inverse(s.comp[0]), inverse(s.comp[1]), inverse(s.comp[2]));
}

WaveVectors::WaveVectors(const Grid& grid) : n_(grid.n()), axis_(grid.n()), axis_d_(grid.n()) {
  const double dk = 2.0 * std::numbers::pi / grid.length();
  for (int i = 0; i < n_; ++i) {
    const int m = i <= n_ / 2 ? i : i - n_;
    axis_[i] = dk * m;
    axis_d_[i] = (i == n_ / 2) ? 0.0 : dk * m;
  }
}

}  // namespace gaugelab
