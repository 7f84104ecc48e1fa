#pragma once

#include <json.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lspace {

class BraidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A word in the braid group B_s. Letter e stands for sigma_|e| with the sign
/// of e as exponent.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t letter_count() const { return letters_.size(); }
  int exponent_sum() const;
  bool is_positive() const;
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  /// Same letters, viewed in B_strands for strands >= this->strands().
  BraidWord widened(int strands) const;

  /// Comma-separated letters, e.g. "1,2,-3".
  std::string to_string() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Parses "(1,2,3)^4,2,1,-3". Groups nest. Without `strands`, the strand
/// count is one more than the largest |letter|.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

/// [(1,2,3)^4, 2,1,3,2,2,1,1,2,1,1,1,1,1, 2^(2n)] in B_4.
BraidWord family_braid(int n);

/// Bijection of {1..size}. images[k-1] is the image of k.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int size);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }
  std::span<const int> images() const { return images_; }

  /// Cycles in order of their smallest element, each starting there.
  std::vector<std::vector<int>> cycles() const;
  /// Sorted cycle lengths, fixed points included.
  std::vector<int> cycle_type() const;

  /// Apply `first`, then `second`.
  static Permutation then(const Permutation& first, const Permutation& second);

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Where each strand position ends up after reading the word left to right:
/// every letter swaps the positions |e| and |e|+1 of the strand it meets.
Permutation permutation(const BraidWord& b);

bool is_knot_closure(const BraidWord& b);

/// Number of closure components (cycles of the permutation).
int closure_components(const BraidWord& b);

/// (crossings − strands + 1)/2, the genus of the fibered closure of a positive
/// braid. Throws BraidError on negative letters, on links, or on odd parity.
int bennequin_genus(const BraidWord& b);

/// All letters positive and some cyclic rotation of the word starts with the
/// literal full twist (1,2,...,s−1)^s.
bool is_twist_positive(const BraidWord& b);

/// Planar-diagram code of the braid closure. Crossing tuples follow the
/// X[a,b,c,d] convention: a is the incoming under edge and the others follow
/// counterclockwise. Strands are oriented downward and a positive letter is a
/// positive crossing, so the strand entering from the right passes over.
/// Edge labels run consecutively along each component from 1.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  nlohmann::ordered_json to_json() const;
  static PDCode from_json(const nlohmann::json& j);
};

/// Components that meet no crossing have no edges and do not appear.
PDCode closure_pd_code(const BraidWord& b);

}  // namespace lspace
