#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ioelim/jet.hpp"

namespace ioelim {

using Rat = mpq_class;

// Power product of jet variables.  Factors are kept sorted by descending
// rank with strictly positive exponents; the empty product is 1.
class Monomial {
  public:
    using Factor = std::pair<JetVar, int>;

    Monomial() = default;
    explicit Monomial(JetVar v, int exp = 1);
    static Monomial from_factors(std::vector<Factor> factors);

    bool is_one() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }
    int degree(JetVar v) const;
    int total_degree() const;
    bool contains(JetVar v) const { return degree(v) > 0; }
    bool contains_kind(VarKind k) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;        // this | o
    Monomial divided_by(const Monomial& d) const; // exact division, d | this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    // Lexicographic comparison induced by the ranking: positive when
    // this > o.  Canonical form makes this a total order.
    int cmp(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  private:
    std::vector<Factor> factors_;
};

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.cmp(b) > 0; }
};

// Sparse multivariate polynomial over exact rationals in jet variables.
// Terms are sorted by descending monomial, coefficients never zero; the
// representation is canonical, so operator== is structural equality.
class Poly {
  public:
    using Term = std::pair<Monomial, Rat>;

    Poly() = default;
    Poly(int c) : Poly(Rat(c)) {}
    Poly(const Rat& c);
    explicit Poly(JetVar v);
    explicit Poly(Monomial m, Rat c = Rat(1));
    static Poly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Monomial& leading_monomial() const { return terms_.front().first; }
    const Rat& leading_coeff() const { return terms_.front().second; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Total time derivative: each jet steps to order+1, parameters are
    // constants, extended by linearity and the Leibniz rule.
    Poly derivative() const;
    Poly derivative(int times) const;

    int degree_in(JetVar v) const;
    bool contains(JetVar v) const;
    bool contains_kind(VarKind k) const;
    std::optional<JetVar> highest_var() const; // the leader under the ranking
    int max_order(VarKind k) const;            // -1 when no such kind occurs

    // Coefficient of v^k, a polynomial in the remaining variables.
    Poly coefficient_of(JetVar v, int k) const;

    Rat evaluate(const std::function<Rat(JetVar)>& value_of) const;

    // Signed content: the rational c such that *this / c has coprime
    // integer coefficients and a positive leading one.
    Rat content() const;
    Poly primitive_part() const;
    Poly monic() const;

  private:
    std::vector<Term> terms_; // descending by monomial
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

// Normal form of f modulo the basis under the ranking-induced lex order:
// no monomial of the result is divisible by any basis leading monomial,
// and f minus the result lies in the generated ideal.
Poly reduce(const Poly& f, std::span<const Poly> basis, const Ranking& rk = {});

struct PseudoDivision {
    Poly quotient;
    Poly remainder;
    int power; // lc^power * a == quotient * b + remainder
};

// Algebraic pseudodivision of a by b with respect to v.  The power is the
// minimal exponent actually used; throws DegenerateDivisor when b is free
// of v.
PseudoDivision pseudo_divide(const Poly& a, const Poly& b, JetVar v);

} // namespace ioelim
