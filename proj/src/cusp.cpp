#include "lspace/cusp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string>

namespace lspace {

namespace detail {

void require_primitive(long long p, long long q) {
  if (p == 0 && q == 0) throw CuspError("slope 0/0 is undefined");
  if (std::gcd(p, q) != 1) throw CuspError("slope " + std::to_string(p) + "/" + std::to_string(q) +
                                           " is not primitive");
}

}  // namespace detail

CuspShape<double> parse_cusp_shape(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw CuspError("cusp shape must be \"re,im\"");
  auto parse = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw CuspError("bad number in cusp shape: \"" + std::string(s) + "\"");
    return v;
  };
  return {parse(text.substr(0, comma)), parse(text.substr(comma + 1))};
}

int monotone_from(const CuspShape<double>& shape) {
  // |(n+1)z − 1|² − |nz − 1|² = (2n + 1)|z|² − 2 Re z, positive once
  // n > (2 Re z − |z|²) / (2|z|²).
  const double norm2 = std::norm(shape.z());
  const double bound = (2 * shape.z().real() - norm2) / (2 * norm2);
  return std::max(1, static_cast<int>(std::floor(bound)) + 1);
}

int min_twist_meeting_threshold(const CuspShape<double>& shape, double threshold) {
  if (!(threshold > 0)) throw CuspError("threshold must be positive");
  for (long long n = 1;; ++n) {
    if (normalized_length(shape, -1, n) >= threshold) return static_cast<int>(n);
    if (n > 100'000'000) throw CuspError("threshold search did not terminate");
  }
}

}  // namespace lspace
