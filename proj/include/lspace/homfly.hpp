#pragma once

#include "lspace/braid.hpp"
#include "lspace/polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lspace {

class HomflyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Multiplication tables of the symmetric group S_s used to rewrite Hecke
/// algebra products in the permutation basis. Permutations are in one-line
/// notation on {0..s−1}; right multiplication by s_i swaps positions i, i+1.
class HeckeTables {
 public:
  explicit HeckeTables(int strands);

  int strands() const { return strands_; }
  std::size_t dimension() const { return perms_.size(); }
  const std::vector<int>& perm(std::size_t index) const { return perms_[index]; }
  std::size_t index_of(const std::vector<int>& perm) const;

  /// Index of w·s_i.
  std::size_t times_generator(std::size_t w, int i) const { return right_[w * gens() + i]; }
  /// True iff length(w·s_i) > length(w).
  bool lengthens(std::size_t w, int i) const { return lengthens_[w * gens() + i]; }

 private:
  std::size_t gens() const { return static_cast<std::size_t>(strands_ > 1 ? strands_ - 1 : 0); }

  int strands_;
  std::vector<std::vector<int>> perms_;
  std::vector<std::size_t> right_;
  std::vector<bool> lengthens_;
};

/// Shared immutable tables, built once per strand count.
std::shared_ptr<const HeckeTables> hecke_tables(int strands);

/// Element of the Hecke algebra H_s with generators g_i subject to the braid
/// relations and g_i^2 = 1 + z·g_i (so g_i − g_i^{-1} = z). Stored densely
/// over the basis {T_w : w in S_s}; T_w is the positive permutation braid of w.
class HeckeElement {
 public:
  explicit HeckeElement(int strands);  // the unit T_id
  static HeckeElement zero(int strands);

  int strands() const { return tables_->strands(); }
  const HeckeTables& tables() const { return *tables_; }
  const LaurentPoly1& coeff(std::size_t w) const { return coeffs_[w]; }
  const LaurentPoly1& coeff(const std::vector<int>& perm) const {
    return coeffs_[tables_->index_of(perm)];
  }
  std::size_t nonzero_terms() const;

  /// Right multiplication by g_|generator|^±1 (generator is 1-based).
  HeckeElement times_generator(int generator) const;

  friend bool operator==(const HeckeElement& x, const HeckeElement& y) {
    return x.strands() == y.strands() && x.coeffs_ == y.coeffs_;
  }

 private:
  HeckeElement(std::shared_ptr<const HeckeTables> tables, std::vector<LaurentPoly1> coeffs);

  std::shared_ptr<const HeckeTables> tables_;
  std::vector<LaurentPoly1> coeffs_;
};

/// hecke_multiply_generator(x, g) = x · g_g^±1.
inline HeckeElement hecke_multiply_generator(const HeckeElement& x, int generator) {
  return x.times_generator(generator);
}

/// Image of a braid word in H_s.
HeckeElement hecke_image(const BraidWord& b);

/// Ocneanu trace of a basis element, normalised to tr_s(1) = δ^{s−1} with
/// δ = (a − a^{-1})/z, tr(x·g_{s−1}) = a·tr(x), tr(x·g_{s−1}^{-1}) = a^{-1}·tr(x).
LaurentPoly2 ocneanu_trace(const HeckeTables& tables, std::size_t w);

/// HOMFLY-PT polynomial P(a, z) of the closure, with
///     a·P(L+) − a^{-1}·P(L−) = z·P(L0),   P(unknot) = 1.
/// Positive letters are positive crossings.
LaurentPoly2 homfly(const BraidWord& b);

/// a-breadth/2 + 1, a lower bound for the braid index (Morton–Franks–Williams).
int mfw_lower_bound(const LaurentPoly2& homfly_poly);

struct BraidIndexResult {
  int lower_bound = 0;  // MFW
  int upper_bound = 0;  // strands of the presentation
  std::optional<int> certified() const {
    if (lower_bound == upper_bound) return upper_bound;
    return std::nullopt;
  }
  std::string to_string() const;
};

BraidIndexResult braid_index_bounds(const BraidWord& b);

/// The braid index when the MFW bound meets the strand count, otherwise nullopt.
std::optional<int> braid_index_certified(const BraidWord& b);

}  // namespace lspace
