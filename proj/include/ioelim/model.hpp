#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ioelim/names.hpp"
#include "ioelim/poly.hpp"

namespace ioelim {

// A ratio of polynomials; the denominator is never the zero polynomial.
struct RationalFn {
    Poly num;
    Poly den{Rat(1)};

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num == b.num && a.den == b.den;
    }
};

// The parsed ODE system: x' = f(x, u; p), y = g(x; p) with rational
// polynomial right-hand sides kept symbolically.
struct Model {
    int n = 0; // states
    int m = 0; // outputs
    int r = 0; // inputs
    std::vector<std::string> state_names;
    std::vector<std::string> output_names;
    std::vector<std::string> input_names;
    std::vector<std::string> param_names;
    std::vector<RationalFn> state_rhs;  // f_i, indexed by state
    std::vector<RationalFn> output_rhs; // g_j, indexed by output

    NameTable names() const { return {state_names, output_names, input_names, param_names}; }
    JetVar state(int index, int order = 0) const { return JetVar(VarKind::State, index, order); }
    JetVar output(int index, int order = 0) const { return JetVar(VarKind::Output, index, order); }
    JetVar input(int index, int order = 0) const { return JetVar(VarKind::Input, index, order); }
    JetVar param(int index) const { return JetVar(VarKind::Param, index, 0); }

    friend bool operator==(const Model& a, const Model& b) = default;
};

// One polynomial equation p = 0 with a record of the source equation and
// derivative order that produced it.
struct PolyEquation {
    Poly poly;
    VarKind source_kind; // State for an x_i' equation, Output for a y_j equation
    int source_index;    // 1-based within the kind
    int deriv_order;     // how many times the cleared source was differentiated
};

// Parses the line-oriented model grammar (see README / fixtures).  Throws
// Error with kind Syntax, UndeclaredSymbol, DuplicateDeclaration,
// OutputDependsOnInput, OutputDependsOnDerivative, InvalidReference or
// ZeroDenominator.
Model parse_model(std::string_view text);

// Canonical text form; parse_model(print_model(m)) == m.
std::string print_model(const Model& mdl);

// Clears denominators: den_i * x_i' - num_i = 0 and den_j * y_j - num_j = 0.
std::vector<PolyEquation> to_poly_system(const Model& mdl);

// Standalone expression parsing against a model's symbol table.  Used by
// the CLI pivot option and for reading polynomials back from reports;
// jets may carry prime marks here.
RationalFn parse_expression(std::string_view text, const Model& mdl);
Poly parse_poly(std::string_view text, const Model& mdl);     // denominator must be 1
Monomial parse_monomial(std::string_view text, const Model& mdl); // single term, coefficient 1

// Cancels the common monomial factor, scales so the denominator is
// primitive with a positive leading coefficient, and collapses num == den.
void normalize_fraction(Poly& num, Poly& den);

} // namespace ioelim
