#include "fpalg/circle.hpp"

#include <bit>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace fpalg {
namespace {

// exp(2 pi i k / K) for k < K, cached per thread.
const std::vector<Complex>& roots_of_unity(std::size_t K) {
  thread_local std::unordered_map<std::size_t, std::vector<Complex>> cache;
  auto it = cache.find(K);
  if (it != cache.end()) return it->second;
  std::vector<Complex> w(K);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(K);
  for (std::size_t k = 0; k < K; ++k) {
    const double t = step * static_cast<double>(k);
    w[k] = {std::cos(t), std::sin(t)};
  }
  return cache.emplace(K, std::move(w)).first->second;
}

}  // namespace

std::size_t next_pow2(std::size_t n) { return std::bit_ceil(std::max<std::size_t>(n, 1)); }

void fft_forward_positive(std::span<Complex> data) {
  const std::size_t K = data.size();
  if (!std::has_single_bit(K)) throw std::invalid_argument("FFT size must be a power of two");
  if (K == 1) return;

  for (std::size_t i = 1, j = 0; i < K; ++i) {
    std::size_t bit = K >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  const auto& w = roots_of_unity(K);
  for (std::size_t len = 2; len <= K; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = K / len;
    for (std::size_t start = 0; start < K; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        // Plain product; std::complex's operator* carries inf/nan recovery.
        const Complex a = w[k * stride];
        const Complex b = data[start + k + half];
        const Complex t{a.real() * b.real() - a.imag() * b.imag(),
                        a.real() * b.imag() + a.imag() * b.real()};
        const Complex u = data[start + k];
        data[start + k] = u + t;
        data[start + k + half] = u - t;
      }
    }
  }
}

std::vector<Complex> circle_values(const TruncatedSeries& f, double r, std::size_t K,
                                   bool half_shift) {
  if (!std::has_single_bit(K) || K <= f.degree()) {
    throw std::invalid_argument("circle_values: K must be a power of two above the degree");
  }
  std::vector<Complex> buf(K, Complex{});
  const auto& shift = half_shift ? roots_of_unity(2 * K) : roots_of_unity(1);
  double rn = 1.0;
  for (std::size_t n = 0; n <= f.degree(); ++n) {
    Complex c = f[n] * rn;
    if (half_shift) c *= shift[n];
    buf[n] = c;
    rn *= r;
  }
  fft_forward_positive(buf);
  return buf;
}

}  // namespace fpalg
