#pragma once

#include "lspace/bigint.hpp"

#include <json.hpp>

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace lspace {

class PolynomialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse Laurent polynomial in N variables with unbounded integer
/// coefficients. Terms are kept in a map keyed by exponent vector; zero
/// coefficients are never stored, so equality of term maps is equality of
/// polynomials.
///
/// Variable names only matter for printing and for catching accidental mixes:
/// arithmetic between two non-constant polynomials with different names
/// throws. Constants adopt the names of the other operand, which is what lets
/// Eigen materialise `Scalar(0)` and `Scalar(1)` inside matrix products.
template <std::size_t N>
class Laurent {
 public:
  static_assert(N >= 1);
  using Exponent = std::array<int, N>;
  using Terms = std::map<Exponent, BigInt>;
  using Names = std::array<std::string, N>;

  static Names default_names() {
    if constexpr (N == 1) {
      return {"t"};
    } else if constexpr (N == 2) {
      return {"a", "z"};
    } else {
      Names names;
      for (std::size_t k = 0; k < N; ++k) names[k] = "x" + std::to_string(k);
      return names;
    }
  }

  Laurent() : names_(default_names()) {}
  Laurent(int c) : Laurent(BigInt(c)) {}  // NOLINT: implicit for Eigen
  Laurent(const BigInt& c) : names_(default_names()) {  // NOLINT
    if (c != 0) terms_.emplace(Exponent{}, c);
  }
  explicit Laurent(Names names) : names_(std::move(names)) {}

  static Laurent monomial(const BigInt& coeff, const Exponent& exp,
                          Names names = default_names()) {
    Laurent p(std::move(names));
    if (coeff != 0) p.terms_.emplace(exp, coeff);
    return p;
  }

  /// The single variable with index `k`, i.e. x_k^1.
  static Laurent variable(std::size_t k, Names names = default_names()) {
    Exponent e{};
    e.at(k) = 1;
    return monomial(BigInt(1), e, std::move(names));
  }

  const Terms& terms() const { return terms_; }
  const Names& names() const { return names_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
  }
  std::size_t size() const { return terms_.size(); }

  BigInt coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  int min_exponent(std::size_t var) const {
    require_nonzero("min_exponent");
    int m = terms_.begin()->first.at(var);
    for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
    return m;
  }
  int max_exponent(std::size_t var) const {
    require_nonzero("max_exponent");
    int m = terms_.begin()->first.at(var);
    for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
    return m;
  }

  /// Multiply by the monomial x^shift.
  Laurent shifted(const Exponent& shift) const {
    Laurent out(names_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(add_exp(e, shift), c);
    return out;
  }

  Laurent with_names(Names names) const {
    Laurent out = *this;
    out.names_ = std::move(names);
    return out;
  }

  Laurent& operator+=(const Laurent& o) {
    adopt_names(o);
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    adopt_names(o);
    for (const auto& [e, c] : o.terms_) accumulate(e, -c);
    return *this;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(Laurent p, const Laurent& q) { return p += q; }
  friend Laurent operator-(Laurent p, const Laurent& q) { return p -= q; }
  friend Laurent operator-(Laurent p) {
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }
  friend Laurent operator*(const Laurent& p, const Laurent& q) {
    Laurent out = p;
    out.adopt_names(q);
    out.terms_.clear();
    for (const auto& [ep, cp] : p.terms_)
      for (const auto& [eq, cq] : q.terms_) out.accumulate(add_exp(ep, eq), cp * cq);
    return out;
  }

  friend bool operator==(const Laurent& p, const Laurent& q) { return p.terms_ == q.terms_; }
  friend bool operator!=(const Laurent& p, const Laurent& q) { return !(p == q); }

  /// Canonical text: terms in ascending exponent order, each written as
  /// `coeff*x^k` (the variable is dropped at exponent 0, the `^1` is dropped).
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      out += mag.str();
      for (std::size_t k = 0; k < N; ++k) {
        if (e[k] == 0) continue;
        out += "*" + names_[k];
        if (e[k] != 1) out += "^" + std::to_string(e[k]);
      }
    }
    return out;
  }

  /// Parses the canonical text form and the obvious relaxations of it
  /// (implicit coefficient 1, any term order, repeated monomials).
  static Laurent parse(std::string_view text, Names names = default_names());

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["vars"] = names_;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_) {
      nlohmann::ordered_json t;
      t["exp"] = e;
      t["coeff"] = c.str();
      terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
  }

  static Laurent from_json(const nlohmann::json& j) {
    Names names = default_names();
    if (j.contains("vars")) names = j.at("vars").get<Names>();
    Laurent p(names);
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exp").get<Exponent>();
      p.accumulate(e, BigInt(t.at("coeff").get<std::string>()));
    }
    return p;
  }

 private:
  static Exponent add_exp(const Exponent& a, const Exponent& b) {
    Exponent r;
    for (std::size_t k = 0; k < N; ++k) r[k] = a[k] + b[k];
    return r;
  }

  void accumulate(const Exponent& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void adopt_names(const Laurent& o) {
    if (names_ == o.names_) return;
    if (o.is_constant()) return;
    if (is_constant()) {
      names_ = o.names_;
      return;
    }
    throw PolynomialError("variable mismatch in polynomial arithmetic");
  }

  void require_nonzero(const char* what) const {
    if (terms_.empty()) throw PolynomialError(std::string(what) + " of the zero polynomial");
  }

  Terms terms_;
  Names names_;
};

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const Laurent<N>& p) {
  return os << p.to_string();
}

using LaurentPoly1 = Laurent<1>;
using LaurentPoly2 = Laurent<2>;

/// max − min exponent of `var`. Throws on the zero polynomial.
template <std::size_t N>
int breadth(const Laurent<N>& p, std::size_t var) {
  return p.max_exponent(var) - p.min_exponent(var);
}

/// Exact integer value of p(±1). `at` must be 1 or −1.
BigInt evaluate_unit(const LaurentPoly1& p, int at);

/// p(t^-1).
LaurentPoly1 reflect(const LaurentPoly1& p);

/// Quotient of an exact division in Z[t, t^-1]. Throws PolynomialError when
/// `den` is zero or the remainder is nonzero.
LaurentPoly1 exact_quotient(const LaurentPoly1& num, const LaurentPoly1& den);

/// Substitutes a value for one variable of a two-variable polynomial, leaving
/// a polynomial in the other variable.
LaurentPoly1 specialize(const LaurentPoly2& p, std::size_t var, int value);

template <std::size_t N>
Laurent<N> Laurent<N>::parse(std::string_view text, Names names) {
  Laurent p(names);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto fail = [&](const std::string& why) -> PolynomialError {
    return PolynomialError("cannot parse polynomial \"" + std::string(text) + "\": " + why);
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    std::string s(text.substr(start, i - start));
    if (s.empty() || s == "-" || s == "+") throw fail("expected integer");
    return s;
  };

  skip_ws();
  if (text.substr(i) == "0") return p;
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) {
      if (first) throw fail("empty input");
      break;
    }
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw fail("expected '+' or '-' between terms");
    }
    first = false;

    BigInt coeff(1);
    bool have_coeff = false;
    if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      coeff = BigInt(read_int());
      have_coeff = true;
    }
    Exponent e{};
    bool have_var = false;
    while (true) {
      skip_ws();
      if (have_coeff || have_var) {
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip_ws();
        } else {
          break;
        }
      }
      std::size_t var = N;
      for (std::size_t k = 0; k < N; ++k) {
        if (text.substr(i, names[k].size()) == names[k]) {
          var = k;
          break;
        }
      }
      if (var == N) {
        if (!have_coeff && !have_var) throw fail("expected coefficient or variable");
        throw fail("unknown variable");
      }
      i += names[var].size();
      have_var = true;
      skip_ws();
      int power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        power = std::stoi(read_int());
      }
      e[var] += power;
    }
    p.accumulate(e, coeff * sign);
  }
  return p;
}

}  // namespace lspace

namespace Eigen {

template <std::size_t N>
struct NumTraits<lspace::Laurent<N>> : GenericNumTraits<lspace::Laurent<N>> {
  using Real = lspace::Laurent<N>;
  using NonInteger = lspace::Laurent<N>;
  using Literal = lspace::Laurent<N>;
  using Nested = lspace::Laurent<N>;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
};

}  // namespace Eigen
