#pragma once

#include "lspace/bigint.hpp"
#include "lspace/matrix.hpp"

#include <json.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lspace {

class SurgeryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Surgery slope p/q in meridian–longitude coordinates, stored reduced with
/// q ≥ 0. The slope 1/0 is ∞, the meridian (no filling).
class Slope {
 public:
  Slope(long long p, long long q = 1);

  static Slope infinity() { return {1, 0}; }

  long long p() const { return p_; }
  long long q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  bool is_integral() const { return q_ == 1; }
  double value() const { return static_cast<double>(p_) / static_cast<double>(q_); }

  /// "p/q", or "p" when q = 1, or "inf".
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  long long p_, q_;
};

/// Components with surgery slopes, plus pairwise linking numbers. Framings live
/// in the slopes, so the linking matrix has zero diagonal.
class SurgeryDiagram {
 public:
  SurgeryDiagram() = default;
  SurgeryDiagram(std::vector<Slope> slopes, MatrixX<long long> linking);

  std::size_t size() const { return slopes_.size(); }
  const std::vector<Slope>& slopes() const { return slopes_; }
  const MatrixX<long long>& linking() const { return linking_; }

  /// Drops the ∞-slope components.
  SurgeryDiagram filled_only() const;

  nlohmann::ordered_json to_json() const;
  static SurgeryDiagram from_json(const nlohmann::json& j);

 private:
  std::vector<Slope> slopes_;
  MatrixX<long long> linking_;
};

/// Finitely generated abelian group as invariant factors d_1 | d_2 | ... | d_k
/// (each ≥ 2) plus free rank.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Canonicalises arbitrary diagonal entries: units dropped, zeros counted as
  /// free factors, the torsion part rebuilt as a divisibility chain.
  static AbelianGroup from_diagonal(const std::vector<BigInt>& diagonal);

  const std::vector<BigInt>& torsion() const { return torsion_; }
  int free_rank() const { return free_rank_; }
  bool is_trivial() const { return torsion_.empty() && free_rank_ == 0; }
  bool is_cyclic() const { return torsion_.size() + static_cast<std::size_t>(free_rank_) <= 1; }
  /// Group order, 0 when infinite.
  BigInt order() const;

  /// "Z/d1 ⊕ Z/d2 ⊕ Z^r"; the trivial group is "0".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<BigInt> torsion_;
  int free_rank_ = 0;
};

/// A_ii = p_i, A_ij = q_i · lk(i, j). Throws on ∞ slopes.
IntMatrix presentation_matrix(const SurgeryDiagram& d);

/// H_1 of the surgered manifold (∞ components dropped first).
AbelianGroup first_homology(const SurgeryDiagram& d);

/// Slope on the twisted knot that corresponds to r before −1/n surgery on an
/// unknot with linking number w: (p + w²·n·q)/q.
Slope twist_image_slope(const Slope& r, long long w, long long n);

/// w²·q/p in lowest terms (sign kept). Throws when p = 0.
Slope homological_longitude_slope(const Slope& r, long long w);

/// For r > 0 and w ≠ 0, the integers n for which −1/n falls in the negative
/// interval between 0 and ∞ that two L-space fillings cover: n ≥ 0.
/// Throws SurgeryError when the hypotheses fail.
std::function<bool(long long)> twist_slopes_covered(const Slope& r, long long w);

/// The two-component diagram (K ∪ c)(r_knot, r_c) with lk(K, c) = w.
SurgeryDiagram two_component_diagram(const Slope& knot_slope, const Slope& c_slope, long long w);

}  // namespace lspace
