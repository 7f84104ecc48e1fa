#include "lspace/smith.hpp"
#include "lspace/surgery.hpp"

#include <doctest.h>

#include <random>

using namespace lspace;

namespace {

IntMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index k = 0;
    for (long v : row) m(i, k++) = BigInt(v);
    ++i;
  }
  return m;
}

BigInt abs_det(const IntMatrix& m) {
  BigInt d = determinant(m);
  return d < 0 ? BigInt(-d) : d;
}

}  // namespace

TEST_CASE("Slope normalisation") {
  CHECK(Slope(4, 2) == Slope(2));
  CHECK(Slope(3, -6).to_string() == "-1/2");
  CHECK(Slope(5, 0).is_infinite());
  CHECK(Slope(-5, 0) == Slope::infinity());
  CHECK(Slope::infinity().to_string() == "inf");
  CHECK(Slope(0, 7) == Slope(0));
  CHECK(Slope(29).is_integral());
  CHECK(Slope(-1, 3).value() == doctest::Approx(-1.0 / 3));
  CHECK_THROWS_AS(Slope(0, 0), SurgeryError);
}

TEST_CASE("presentation matrices") {
  const SurgeryDiagram lens = two_component_diagram(Slope(29), Slope(0), 2);
  CHECK(presentation_matrix(lens) == ints({{29, 2}, {2, 0}}));
  for (int n : {1, 3, 7}) {
    const SurgeryDiagram d = two_component_diagram(Slope(29), Slope(-1, n), 2);
    CHECK(presentation_matrix(d) == ints({{29, 2}, {2L * n, -1}}));
  }
  CHECK_THROWS_AS(presentation_matrix(two_component_diagram(Slope(29), Slope::infinity(), 2)),
                  SurgeryError);
}

TEST_CASE("first homology of the family") {
  CHECK(first_homology(two_component_diagram(Slope(29), Slope(0), 2)).to_string() == "Z/4");
  for (int n = 0; n <= 20; ++n) {
    const Slope c = n == 0 ? Slope::infinity() : Slope(-1, n);
    const AbelianGroup h = first_homology(two_component_diagram(Slope(29), c, 2));
    CHECK(h.is_cyclic());
    CHECK(h.order() == 29 + 4 * n);
    CHECK(h.to_string() == "Z/" + std::to_string(29 + 4 * n));
    CHECK(Slope(h.order().convert_to<long long>()) == twist_image_slope(Slope(29), 2, n));
  }
}

TEST_CASE("first homology edge cases") {
  CHECK(first_homology(SurgeryDiagram()).to_string() == "0");
  CHECK(first_homology(SurgeryDiagram({Slope::infinity()}, MatrixX<long long>::Zero(1, 1)))
            .is_trivial());
  CHECK(first_homology(SurgeryDiagram({Slope(0)}, MatrixX<long long>::Zero(1, 1))).to_string() ==
        "Z");
  CHECK(first_homology(SurgeryDiagram({Slope(1)}, MatrixX<long long>::Zero(1, 1))).to_string() ==
        "0");
  CHECK(first_homology(SurgeryDiagram({Slope(5, 2)}, MatrixX<long long>::Zero(1, 1))).to_string() ==
        "Z/5");
  MatrixX<long long> unlinked = MatrixX<long long>::Zero(3, 3);
  CHECK(first_homology(SurgeryDiagram({Slope(2), Slope(3), Slope(0)}, unlinked)).to_string() ==
        "Z/6 ⊕ Z");
  CHECK(first_homology(SurgeryDiagram({Slope(2), Slope(4), Slope(0)}, unlinked)).to_string() ==
        "Z/2 ⊕ Z/4 ⊕ Z");
  CHECK(AbelianGroup::from_diagonal({BigInt(0), BigInt(0)}).to_string() == "Z^2");
  MatrixX<long long> bad(2, 2);
  bad << 0, 1, 2, 0;
  CHECK_THROWS_AS(SurgeryDiagram({Slope(1), Slope(1)}, bad), SurgeryError);
  bad << 1, 0, 0, 0;
  CHECK_THROWS_AS(SurgeryDiagram({Slope(1), Slope(1)}, bad), SurgeryError);
}

TEST_CASE("Smith normal form on random matrices") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(-9, 9), dim(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    IntMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) a(i, k) = BigInt(trial % 5 == 0 ? entry(rng) / 4 : entry(rng));

    const auto snf = smith_normal_form(a);
    CHECK(IntMatrix(snf.left * snf.diagonal * snf.right) == a);
    CHECK(abs_det(snf.left) == 1);
    CHECK(abs_det(snf.right) == 1);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k)
        if (i != k) CHECK(snf.diagonal(i, k) == 0);
    const int m = std::min(rows, cols);
    for (int i = 0; i < m; ++i) {
      CHECK(snf.diagonal(i, i) >= 0);
      if (i + 1 < m && snf.diagonal(i, i) != 0)
        CHECK(snf.diagonal(i + 1, i + 1) % snf.diagonal(i, i) == 0);
      if (i + 1 < m && snf.diagonal(i, i) == 0) CHECK(snf.diagonal(i + 1, i + 1) == 0);
    }
    if (rows == cols) {
      BigInt prod(1);
      for (int i = 0; i < m; ++i) prod *= snf.diagonal(i, i);
      CHECK(prod == abs_det(a));
    }
  }
}

TEST_CASE("homology order equals determinant") {
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> slope(-12, 12), lk(-3, 3), size(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size(rng);
    std::vector<Slope> slopes;
    for (int i = 0; i < n; ++i) {
      int q = 1 + trial % 3;
      int p = slope(rng);
      slopes.emplace_back(p == 0 && q != 1 ? 1 : p, q);
    }
    MatrixX<long long> link = MatrixX<long long>::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < i; ++k) link(i, k) = link(k, i) = lk(rng);
    const SurgeryDiagram d(slopes, link);
    const AbelianGroup h = first_homology(d);
    const BigInt det = abs_det(presentation_matrix(d));
    CHECK(h.order() == det);
    CHECK((h.free_rank() > 0) == (det == 0));
  }
}

TEST_CASE("twist slopes") {
  CHECK(twist_image_slope(Slope(29), 2, 1) == Slope(33));
  CHECK(twist_image_slope(Slope(29), 2, 0) == Slope(29));
  CHECK(twist_image_slope(Slope(35, 2), 2, 1) == Slope(43, 2));
  CHECK(homological_longitude_slope(Slope(29), 2) == Slope(4, 29));
  CHECK(homological_longitude_slope(Slope(4), 2) == Slope(1));
  CHECK(homological_longitude_slope(Slope(-3), 2) == Slope(-4, 3));
  CHECK_THROWS_AS(homological_longitude_slope(Slope(0), 2), SurgeryError);

  const auto covered = twist_slopes_covered(Slope(29), 2);
  for (long long n = 0; n <= 50; ++n) CHECK(covered(n));
  CHECK_FALSE(covered(-1));
  CHECK_THROWS_AS(twist_slopes_covered(Slope(-29), 2), SurgeryError);
  CHECK_THROWS_AS(twist_slopes_covered(Slope(29), 0), SurgeryError);
  CHECK_THROWS_AS(twist_slopes_covered(Slope::infinity(), 2), SurgeryError);
}

TEST_CASE("diagram JSON round trip") {
  const SurgeryDiagram d = two_component_diagram(Slope(29), Slope(-1, 3), 2);
  const auto j = d.to_json();
  CHECK(j.dump() == R"({"components":[{"p":29,"q":1},{"p":-1,"q":3}],"linking":[[0,2],[2,0]]})");
  const SurgeryDiagram back = SurgeryDiagram::from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.slopes() == d.slopes());
  CHECK(back.linking() == d.linking());
  CHECK_THROWS_AS(SurgeryDiagram::from_json(nlohmann::json::parse(
                      R"({"components":[{"p":1,"q":1}],"linking":[[0,1]]})")),
                  SurgeryError);
}
