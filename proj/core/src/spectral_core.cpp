#include "pniep/spectral_core.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "pniep/error.hpp"
#include "wide.hpp"

namespace pniep {

using detail::Wide;

MomentVector moments(const Spectrum& spec, std::size_t k_max, const Tolerances& tol) {
  if (k_max < 1) throw Error(ErrorCode::PreconditionFailed, "k_max must be at least 1");
  std::vector<Complex> powers(spec.values().begin(), spec.values().end());
  std::vector<double> s(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    Complex sum = 0.0;
    double magnitude = 0.0;
    for (std::size_t i = 0; i < powers.size(); ++i) {
      if (k > 1) powers[i] *= spec[i];
      sum += powers[i];
      magnitude += std::abs(powers[i]);
    }
    if (std::abs(sum.imag()) > tol.im * (1.0 + magnitude)) {
      throw Error(ErrorCode::ImaginaryResidue,
                  "power sum s_" + std::to_string(k) + " has imaginary part " +
                      std::to_string(sum.imag()));
    }
    s[k - 1] = sum.real();
  }
  return MomentVector(std::move(s));
}

MonicPolynomial poly_from_roots(const Spectrum& spec, const Tolerances& tol) {
  // coeffs[i] multiplies z^i, kept as wide real and imaginary parts;
  // magnitude tracks prod (z + |d|) for scaling.
  std::vector<Wide> re{1}, im{0};
  std::vector<double> magnitude{1.0};
  for (const Complex& root : spec) {
    const Wide rr = root.real(), ri = root.imag();
    std::vector<Wide> next_re(re.size() + 1, 0), next_im(re.size() + 1, 0);
    std::vector<double> next_mag(re.size() + 1, 0.0);
    for (std::size_t i = 0; i < re.size(); ++i) {
      next_re[i + 1] += re[i];
      next_im[i + 1] += im[i];
      next_re[i] -= rr * re[i] - ri * im[i];
      next_im[i] -= rr * im[i] + ri * re[i];
      next_mag[i + 1] += magnitude[i];
      next_mag[i] += std::abs(root) * magnitude[i];
    }
    re = std::move(next_re);
    im = std::move(next_im);
    magnitude = std::move(next_mag);
  }
  std::vector<double> real(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const double imag = static_cast<double>(im[i]);
    if (std::abs(imag) > tol.im * (1.0 + magnitude[i])) {
      throw Error(ErrorCode::ImaginaryResidue, "coefficient of z^" + std::to_string(i) +
                                                   " has imaginary part " + std::to_string(imag));
    }
    real[i] = static_cast<double>(re[i]);
  }
  return MonicPolynomial(std::move(real));
}

std::vector<Wide> detail::wide_coeffs_from_moments(const std::vector<Wide>& s) {
  const std::size_t n = s.size();
  // a[j] is the coefficient of z^j, a[n] = 1.
  std::vector<Wide> a(n + 1, 0);
  a[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Wide acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += s[j - 1] * a[n - k + j];
    a[n - k] = -acc / Wide(k);
  }
  a.pop_back();
  return a;
}

MonicPolynomial coeffs_from_moments(const MomentVector& m) {
  std::vector<Wide> s(m.size());
  for (std::size_t k = 1; k <= m.size(); ++k) s[k - 1] = Wide(m.at(k)) + Wide(m.low(k));
  const std::vector<Wide> a = detail::wide_coeffs_from_moments(s);
  return MonicPolynomial(std::vector<double>(a.begin(), a.end()));
}

MomentVector moments_from_coeffs(const MonicPolynomial& p) {
  const std::size_t n = p.degree();
  std::vector<Wide> s(n, 0);
  std::vector<double> hi(n), lo(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Wide acc = Wide(k) * Wide(p.coeff(n - k));
    for (std::size_t j = 1; j < k; ++j) acc += s[j - 1] * Wide(p.coeff(n - k + j));
    s[k - 1] = -acc;
    hi[k - 1] = static_cast<double>(s[k - 1]);
    lo[k - 1] = static_cast<double>(s[k - 1] - Wide(hi[k - 1]));
  }
  return MomentVector(std::move(hi), std::move(lo));
}

}  // namespace pniep
