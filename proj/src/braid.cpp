#include "lspace/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace lspace {

namespace {

void check_letters(int strands, const std::vector<int>& letters) {
  if (strands < 1) throw BraidError("braid needs at least one strand");
  for (int e : letters) {
    if (e == 0) throw BraidError("braid letter 0 is not a generator");
    if (std::abs(e) > strands - 1)
      throw BraidError("generator " + std::to_string(e) + " out of range for " +
                       std::to_string(strands) + " strands");
  }
}

// Recursive-descent parser for: list := item (',' item)* ; item := INT | '(' list ')' '^' INT
class BraidParser {
 public:
  explicit BraidParser(std::string_view text) : text_(text) {}

  std::vector<int> parse() {
    skip_ws();
    if (pos_ == text_.size()) return {};
    std::vector<int> out = list();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  std::vector<int> list() {
    std::vector<int> out;
    while (true) {
      std::vector<int> part = item();
      out.insert(out.end(), part.begin(), part.end());
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      return out;
    }
  }

  std::vector<int> item() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::vector<int> inner = list();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '^') fail("expected '^' after group");
      ++pos_;
      int reps = integer();
      if (reps < 0) fail("negative repetition count");
      std::vector<int> out;
      out.reserve(inner.size() * static_cast<std::size_t>(reps));
      for (int r = 0; r < reps; ++r) out.insert(out.end(), inner.begin(), inner.end());
      return out;
    }
    int e = integer();
    if (e == 0) fail("letter 0 is not a generator");
    return {e};
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("malformed token");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw BraidError("cannot parse braid \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_letters(strands_, letters_);
}

int BraidWord::exponent_sum() const {
  int sum = 0;
  for (int e : letters_) sum += e > 0 ? 1 : -1;
  return sum;
}

bool BraidWord::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), [](int e) { return e > 0; });
}

BraidWord BraidWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& e : inv) e = -e;
  return {strands_, std::move(inv)};
}

BraidWord BraidWord::widened(int strands) const {
  if (strands < strands_) throw BraidError("cannot narrow a braid");
  return {strands, letters_};
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(letters_[k]);
  }
  return out;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  std::vector<int> letters(a.letters_);
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return {std::max(a.strands_, b.strands_), std::move(letters)};
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  std::vector<int> letters = BraidParser(text).parse();
  int s = 1;
  for (int e : letters) s = std::max(s, std::abs(e) + 1);
  if (strands) {
    if (*strands < s)
      throw BraidError("letter index requires " + std::to_string(s) + " strands, got " +
                       std::to_string(*strands));
    s = *strands;
  }
  return {s, std::move(letters)};
}

BraidWord family_braid(int n) {
  if (n < 0) throw BraidError("family index must be non-negative");
  std::vector<int> letters;
  letters.reserve(25 + 2 * static_cast<std::size_t>(n));
  for (int r = 0; r < 4; ++r) letters.insert(letters.end(), {1, 2, 3});
  letters.insert(letters.end(), {2, 1, 3, 2, 2, 1, 1, 2, 1, 1, 1, 1, 1});
  letters.insert(letters.end(), 2 * static_cast<std::size_t>(n), 2);
  return {4, std::move(letters)};
}

// --- Permutation ------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v]) throw BraidError("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(static_cast<std::size_t>(size));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int k = start; !seen[k]; k = (*this)(k)) {
      seen[k] = true;
      cycle.push_back(k);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Permutation Permutation::then(const Permutation& first, const Permutation& second) {
  if (first.size() != second.size()) throw BraidError("permutation size mismatch");
  std::vector<int> images(first.images_.size());
  for (int k = 1; k <= first.size(); ++k) images[k - 1] = second(first(k));
  return Permutation(std::move(images));
}

Permutation permutation(const BraidWord& b) {
  // strand_at[q-1] = starting position of the strand now at position q
  std::vector<int> strand_at(static_cast<std::size_t>(b.strands()));
  std::iota(strand_at.begin(), strand_at.end(), 1);
  std::vector<int> position(strand_at.size());
  for (int e : b.letters()) {
    int i = std::abs(e);
    std::swap(strand_at[i - 1], strand_at[i]);
  }
  for (int q = 1; q <= b.strands(); ++q) position[strand_at[q - 1] - 1] = q;
  return Permutation(std::move(position));
}

bool is_knot_closure(const BraidWord& b) {
  return permutation(b).cycles().size() == 1;
}

int closure_components(const BraidWord& b) {
  return static_cast<int>(permutation(b).cycles().size());
}

int bennequin_genus(const BraidWord& b) {
  if (!b.is_positive()) throw BraidError("bennequin_genus requires a positive braid word");
  if (!is_knot_closure(b)) throw BraidError("bennequin_genus requires a knot closure");
  int twice = static_cast<int>(b.letter_count()) - b.strands() + 1;
  if (twice % 2 != 0)
    throw BraidError("odd crossings − strands + 1 for a knot closure; inconsistent input");
  return twice / 2;
}

bool is_twist_positive(const BraidWord& b) {
  if (!b.is_positive()) return false;
  const int s = b.strands();
  std::vector<int> twist;
  for (int r = 0; r < s; ++r)
    for (int i = 1; i <= s - 1; ++i) twist.push_back(i);
  const auto letters = b.letters();
  const std::size_t len = letters.size();
  if (twist.empty()) return true;  // B_1: the full twist is the empty word
  if (len < twist.size()) return false;
  for (std::size_t rot = 0; rot < len; ++rot) {
    bool match = true;
    for (std::size_t k = 0; k < twist.size() && match; ++k)
      match = letters[(rot + k) % len] == twist[k];
    if (match) return true;
  }
  return false;
}

// --- PD code ----------------------------------------------------------------

nlohmann::ordered_json PDCode::to_json() const {
  nlohmann::ordered_json j;
  j["crossings"] = crossings;
  return j;
}

PDCode PDCode::from_json(const nlohmann::json& j) {
  PDCode pd;
  pd.crossings = j.at("crossings").get<std::vector<std::array<int, 4>>>();
  return pd;
}

PDCode closure_pd_code(const BraidWord& b) {
  const auto letters = b.letters();
  const std::size_t c = letters.size();
  // For crossing k: edge labels entering/leaving on the left (position |e|)
  // and right (position |e|+1).
  struct Slots {
    int in_left = 0, in_right = 0, out_left = 0, out_right = 0;
  };
  std::vector<Slots> slots(c);

  // A passage is one visit of a component to a crossing.
  struct Passage {
    std::size_t crossing;
    bool enters_left;
  };

  std::vector<bool> visited_start(static_cast<std::size_t>(b.strands()) + 1, false);
  int next_label = 1;
  for (int start = 1; start <= b.strands(); ++start) {
    if (visited_start[start]) continue;
    std::vector<Passage> passages;
    int pos = start;
    do {
      visited_start[pos] = true;
      for (std::size_t k = 0; k < c; ++k) {
        int i = std::abs(letters[k]);
        if (pos == i) {
          passages.push_back({k, true});
          pos = i + 1;
        } else if (pos == i + 1) {
          passages.push_back({k, false});
          pos = i;
        }
      }
    } while (pos != start);

    const std::size_t m = passages.size();
    for (std::size_t j = 0; j < m; ++j) {
      int in_edge = next_label + static_cast<int>((j + m - 1) % m);
      int out_edge = next_label + static_cast<int>(j);
      Slots& s = slots[passages[j].crossing];
      if (passages[j].enters_left) {
        s.in_left = in_edge;
        s.out_right = out_edge;
      } else {
        s.in_right = in_edge;
        s.out_left = out_edge;
      }
    }
    next_label += static_cast<int>(m);
  }

  PDCode pd;
  pd.crossings.reserve(c);
  for (std::size_t k = 0; k < c; ++k) {
    const Slots& s = slots[k];
    if (letters[k] > 0) {
      // Right strand over: under strand enters top-left.
      pd.crossings.push_back({s.in_left, s.out_left, s.out_right, s.in_right});
    } else {
      // Left strand over: under strand enters top-right.
      pd.crossings.push_back({s.in_right, s.in_left, s.out_left, s.out_right});
    }
  }
  return pd;
}

}  // namespace lspace
