#include "lspace/homfly.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>

namespace lspace {

namespace {

const LaurentPoly1& z_poly() {
  static const LaurentPoly1 z = LaurentPoly1::monomial(BigInt(1), {1}, {"z"});
  return z;
}

LaurentPoly2 az_monomial(int a_exp, int z_exp, const BigInt& c = BigInt(1)) {
  return LaurentPoly2::monomial(c, {a_exp, z_exp});
}

// Embeds a polynomial in z into Z[a^±, z^±].
LaurentPoly2 lift_z(const LaurentPoly1& p) {
  LaurentPoly2 out;
  for (const auto& [e, c] : p.terms()) out += az_monomial(0, e[0], c);
  return out;
}

// δ = (a − a^{-1}) z^{-1}, the value of one extra unknotted strand.
const LaurentPoly2& delta() {
  static const LaurentPoly2 d = az_monomial(1, -1) - az_monomial(-1, -1);
  return d;
}

class TraceCache {
 public:
  LaurentPoly2 trace(const std::vector<int>& w) {
    std::lock_guard lock(mutex_);
    return trace_locked(w);
  }

 private:
  LaurentPoly2 trace_locked(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    if (n <= 1) return LaurentPoly2(1);
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;

    LaurentPoly2 result;
    const int top = n - 1;
    const auto top_pos = static_cast<int>(std::find(w.begin(), w.end(), top) - w.begin());
    if (top_pos == top) {
      // T_w lies in H_{n-1}: closing the last strand contributes δ.
      std::vector<int> smaller(w.begin(), w.end() - 1);
      result = delta() * trace_locked(smaller);
    } else {
      // w = w'·s_{n-2}·s_{n-3}···s_p with w' fixing the top value; the single
      // occurrence of g_{n-2} closes to a factor a.
      std::vector<int> reduced = w;
      for (int k = top_pos; k < top; ++k) std::swap(reduced[k], reduced[k + 1]);
      reduced.pop_back();

      // Build T_{w'} in H_{n-1} and multiply by g_{n-3}···g_p (0-based indices).
      HeckeElement x = basis_element(top, reduced);
      const auto& tables = x.tables();
      for (int g = top - 2; g >= top_pos; --g) x = x.times_generator(g + 1);
      for (std::size_t u = 0; u < tables.dimension(); ++u) {
        const LaurentPoly1& c = x.coeff(u);
        if (c.is_zero()) continue;
        result += lift_z(c) * trace_locked(tables.perm(u));
      }
      result = az_monomial(1, 0) * result;
    }
    memo_.emplace(w, result);
    return result;
  }

  static HeckeElement basis_element(int strands, const std::vector<int>& perm) {
    // Right-multiply the unit by a reduced word for perm (bubble sort read
    // backwards gives one); every step lengthens, so no quadratic terms appear.
    std::vector<int> target = perm;
    std::vector<int> swaps;
    for (int pass = 0; pass < strands; ++pass)
      for (int k = 0; k + 1 < strands; ++k)
        if (target[k] > target[k + 1]) {
          std::swap(target[k], target[k + 1]);
          swaps.push_back(k);
        }
    HeckeElement x(strands);
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) x = x.times_generator(*it + 1);
    return x;
  }

  std::mutex mutex_;
  std::map<std::vector<int>, LaurentPoly2> memo_;
};

TraceCache& trace_cache() {
  static TraceCache cache;
  return cache;
}

}  // namespace

// --- HeckeTables ------------------------------------------------------------

HeckeTables::HeckeTables(int strands) : strands_(strands) {
  if (strands < 1) throw HomflyError("Hecke algebra needs at least one strand");
  std::vector<int> p(static_cast<std::size_t>(strands));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  right_.resize(perms_.size() * gens());
  lengthens_.resize(perms_.size() * gens());
  for (std::size_t w = 0; w < perms_.size(); ++w) {
    for (int i = 0; i + 1 < strands; ++i) {
      std::vector<int> q = perms_[w];
      lengthens_[w * gens() + i] = q[i] < q[i + 1];
      std::swap(q[i], q[i + 1]);
      right_[w * gens() + i] = index_of(q);
    }
  }
}

std::size_t HeckeTables::index_of(const std::vector<int>& perm) const {
  // perms_ is in lexicographic order.
  auto it = std::lower_bound(perms_.begin(), perms_.end(), perm);
  if (it == perms_.end() || *it != perm) throw HomflyError("not a permutation of the right size");
  return static_cast<std::size_t>(it - perms_.begin());
}

std::shared_ptr<const HeckeTables> hecke_tables(int strands) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const HeckeTables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[strands];
  if (!slot) slot = std::make_shared<const HeckeTables>(strands);
  return slot;
}

// --- HeckeElement -----------------------------------------------------------

HeckeElement::HeckeElement(int strands)
    : HeckeElement(hecke_tables(strands), {}) {
  coeffs_[tables_->index_of([&] {
    std::vector<int> id(static_cast<std::size_t>(strands));
    std::iota(id.begin(), id.end(), 0);
    return id;
  }())] = LaurentPoly1(1).with_names({"z"});
}

HeckeElement::HeckeElement(std::shared_ptr<const HeckeTables> tables,
                           std::vector<LaurentPoly1> coeffs)
    : tables_(std::move(tables)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    coeffs_.assign(tables_->dimension(), LaurentPoly1(LaurentPoly1::Names{"z"}));
}

HeckeElement HeckeElement::zero(int strands) { return {hecke_tables(strands), {}}; }

std::size_t HeckeElement::nonzero_terms() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return !c.is_zero(); }));
}

HeckeElement HeckeElement::times_generator(int generator) const {
  const int i = std::abs(generator) - 1;
  if (generator == 0 || i + 1 > strands() - 1)
    throw HomflyError("Hecke generator " + std::to_string(generator) + " out of range for " +
                      std::to_string(strands()) + " strands");
  HeckeElement out = zero(strands());
  const LaurentPoly1& z = z_poly();
  for (std::size_t w = 0; w < coeffs_.size(); ++w) {
    const LaurentPoly1& c = coeffs_[w];
    if (c.is_zero()) continue;
    const std::size_t ws = tables_->times_generator(w, i);
    // T_w g = T_{ws} when the length grows, else T_{ws} g^2 = T_{ws} + z T_w.
    out.coeffs_[ws] += c;
    if (!tables_->lengthens(w, i)) out.coeffs_[w] += z * c;
    // g^{-1} = g − z
    if (generator < 0) out.coeffs_[w] -= z * c;
  }
  return out;
}

HeckeElement hecke_image(const BraidWord& b) {
  HeckeElement x(b.strands());
  for (int e : b.letters()) x = x.times_generator(e);
  return x;
}

LaurentPoly2 ocneanu_trace(const HeckeTables& tables, std::size_t w) {
  return trace_cache().trace(tables.perm(w));
}

LaurentPoly2 homfly(const BraidWord& b) {
  const HeckeElement x = hecke_image(b);
  LaurentPoly2 framed;
  for (std::size_t w = 0; w < x.tables().dimension(); ++w) {
    const LaurentPoly1& c = x.coeff(w);
    if (c.is_zero()) continue;
    framed += lift_z(c) * ocneanu_trace(x.tables(), w);
  }
  // Each positive crossing contributes a framing factor a; undo it once.
  return az_monomial(-b.exponent_sum(), 0) * framed;
}

int mfw_lower_bound(const LaurentPoly2& homfly_poly) {
  if (homfly_poly.is_zero()) throw HomflyError("MFW bound of the zero polynomial");
  return breadth(homfly_poly, 0) / 2 + 1;
}

std::string BraidIndexResult::to_string() const {
  if (auto c = certified()) return std::to_string(*c);
  return "inconclusive (MFW lower bound " + std::to_string(lower_bound) + ", upper bound " +
         std::to_string(upper_bound) + ")";
}

BraidIndexResult braid_index_bounds(const BraidWord& b) {
  return {mfw_lower_bound(homfly(b)), b.strands()};
}

std::optional<int> braid_index_certified(const BraidWord& b) {
  return braid_index_bounds(b).certified();
}

}  // namespace lspace
