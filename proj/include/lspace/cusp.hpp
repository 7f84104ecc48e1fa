#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lspace {

class CuspError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Similarity class of a cusp torus: the meridian translates by 1 and the
/// longitude by z, Im z > 0.
template <typename Real = double>
class CuspShape {
 public:
  explicit CuspShape(std::complex<Real> z) : z_(z) {
    if (!(z.imag() > Real(0))) throw CuspError("cusp shape needs Im(z) > 0");
  }
  CuspShape(Real re, Real im) : CuspShape(std::complex<Real>(re, im)) {}

  const std::complex<Real>& z() const { return z_; }
  /// Area of the torus for the lattice (1, z).
  Real area() const { return z_.imag(); }

 private:
  std::complex<Real> z_;
};

/// Parses "re,im".
CuspShape<double> parse_cusp_shape(std::string_view text);

namespace detail {
void require_primitive(long long p, long long q);
}

/// |p + q·z|, the translation length of the slope p/q.
template <typename Real>
Real slope_length(const CuspShape<Real>& shape, long long p, long long q) {
  detail::require_primitive(p, q);
  return std::abs(std::complex<Real>(Real(p)) + Real(q) * shape.z());
}

/// slope_length / sqrt(Im z).
template <typename Real>
Real normalized_length(const CuspShape<Real>& shape, long long p, long long q) {
  using std::sqrt;
  return slope_length(shape, p, q) / sqrt(shape.area());
}

/// Smallest n ≥ 1 with normalized_length(−1/n) ≥ threshold (plain IEEE ≥).
/// Past n > Re(z)/|z|² the length |nz − 1| only grows, so every larger n
/// also meets the threshold.
int min_twist_meeting_threshold(const CuspShape<double>& shape, double threshold);

/// Smallest n such that normalized_length(−1/m) is increasing for all m ≥ n.
int monotone_from(const CuspShape<double>& shape);

}  // namespace lspace
