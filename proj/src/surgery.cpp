#include "lspace/surgery.hpp"

#include "lspace/smith.hpp"

#include <algorithm>
#include <numeric>

namespace lspace {

Slope::Slope(long long p, long long q) {
  if (p == 0 && q == 0) throw SurgeryError("slope 0/0 is undefined");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) {
    p_ = 1;
    q_ = 0;
    return;
  }
  const long long g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

std::string Slope::to_string() const {
  if (is_infinite()) return "inf";
  if (q_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "/" + std::to_string(q_);
}

SurgeryDiagram::SurgeryDiagram(std::vector<Slope> slopes, MatrixX<long long> linking)
    : slopes_(std::move(slopes)), linking_(std::move(linking)) {
  const auto n = static_cast<Eigen::Index>(slopes_.size());
  if (linking_.rows() != n || linking_.cols() != n)
    throw SurgeryError("linking matrix size does not match the component count");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (linking_(i, i) != 0) throw SurgeryError("linking matrix must have zero diagonal");
    for (Eigen::Index j = 0; j < i; ++j)
      if (linking_(i, j) != linking_(j, i)) throw SurgeryError("linking matrix is not symmetric");
  }
}

SurgeryDiagram SurgeryDiagram::filled_only() const {
  std::vector<Eigen::Index> keep;
  for (std::size_t i = 0; i < slopes_.size(); ++i)
    if (!slopes_[i].is_infinite()) keep.push_back(static_cast<Eigen::Index>(i));
  std::vector<Slope> slopes;
  MatrixX<long long> lk(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    slopes.push_back(slopes_[keep[a]]);
    for (std::size_t b = 0; b < keep.size(); ++b) lk(a, b) = linking_(keep[a], keep[b]);
  }
  return {std::move(slopes), std::move(lk)};
}

nlohmann::ordered_json SurgeryDiagram::to_json() const {
  nlohmann::ordered_json j;
  auto comps = nlohmann::ordered_json::array();
  for (const auto& s : slopes_) comps.push_back({{"p", s.p()}, {"q", s.q()}});
  j["components"] = std::move(comps);
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < linking_.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index k = 0; k < linking_.cols(); ++k) row.push_back(linking_(i, k));
    rows.push_back(std::move(row));
  }
  j["linking"] = std::move(rows);
  return j;
}

SurgeryDiagram SurgeryDiagram::from_json(const nlohmann::json& j) {
  std::vector<Slope> slopes;
  for (const auto& c : j.at("components"))
    slopes.emplace_back(c.at("p").get<long long>(), c.at("q").get<long long>());
  const auto n = static_cast<Eigen::Index>(slopes.size());
  const auto& rows = j.at("linking");
  if (static_cast<Eigen::Index>(rows.size()) != n)
    throw SurgeryError("linking matrix size does not match the component count");
  MatrixX<long long> lk(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != n) throw SurgeryError("linking matrix is not square");
    for (Eigen::Index k = 0; k < n; ++k) lk(i, k) = row.at(static_cast<std::size_t>(k)).get<long long>();
  }
  return {std::move(slopes), std::move(lk)};
}

AbelianGroup AbelianGroup::from_diagonal(const std::vector<BigInt>& diagonal) {
  AbelianGroup g;
  std::vector<BigInt> torsion;
  for (const auto& d : diagonal) {
    BigInt m = d < 0 ? BigInt(-d) : d;
    if (m == 0) {
      ++g.free_rank_;
    } else if (m != 1) {
      torsion.push_back(m);
    }
  }
  // Rebuild the divisibility chain: repeatedly replace (a, b) by (gcd, lcm).
  for (std::size_t i = 0; i < torsion.size(); ++i)
    for (std::size_t k = i + 1; k < torsion.size(); ++k) {
      BigInt g_ik = gcd(torsion[i], torsion[k]);
      BigInt l_ik = torsion[i] / g_ik * torsion[k];
      torsion[i] = g_ik;
      torsion[k] = l_ik;
    }
  for (const auto& d : torsion)
    if (d != 1) g.torsion_.push_back(d);
  return g;
}

BigInt AbelianGroup::order() const {
  if (free_rank_ > 0) return BigInt(0);
  BigInt n(1);
  for (const auto& d : torsion_) n *= d;
  return n;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  for (const auto& d : torsion_) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z/" + d.str();
  }
  if (free_rank_ > 0) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z";
    if (free_rank_ > 1) out += "^" + std::to_string(free_rank_);
  }
  return out;
}

IntMatrix presentation_matrix(const SurgeryDiagram& d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  IntMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Slope& s = d.slopes()[static_cast<std::size_t>(i)];
    if (s.is_infinite()) throw SurgeryError("presentation_matrix: drop ∞-slope components first");
    for (Eigen::Index k = 0; k < n; ++k)
      a(i, k) = i == k ? BigInt(s.p()) : BigInt(s.q()) * BigInt(d.linking()(i, k));
  }
  return a;
}

AbelianGroup first_homology(const SurgeryDiagram& d) {
  const IntMatrix a = presentation_matrix(d.filled_only());
  if (a.rows() == 0) return {};
  const auto snf = smith_normal_form(a);
  std::vector<BigInt> diag;
  for (Eigen::Index i = 0; i < snf.diagonal.rows(); ++i) diag.push_back(snf.diagonal(i, i));
  return AbelianGroup::from_diagonal(diag);
}

Slope twist_image_slope(const Slope& r, long long w, long long n) {
  return {r.p() + w * w * n * r.q(), r.q()};
}

Slope homological_longitude_slope(const Slope& r, long long w) {
  if (r.p() == 0) throw SurgeryError("homological longitude slope undefined for r = 0");
  return {w * w * r.q(), r.p()};
}

std::function<bool(long long)> twist_slopes_covered(const Slope& r, long long w) {
  if (r.is_infinite() || r.p() <= 0) throw SurgeryError("twist family needs a positive slope r");
  if (w == 0) throw SurgeryError("twist family needs nonzero linking number");
  // The homological longitude w²q/p is positive, so the negative slopes
  // −1/n between 0 and ∞ are all on one side of it.
  return [](long long n) { return n >= 0; };
}

SurgeryDiagram two_component_diagram(const Slope& knot_slope, const Slope& c_slope, long long w) {
  MatrixX<long long> lk(2, 2);
  lk << 0, w, w, 0;
  return {{knot_slope, c_slope}, std::move(lk)};
}

}  // namespace lspace
