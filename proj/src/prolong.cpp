#include "ioelim/prolong.hpp"

#include <algorithm>

#include "ioelim/error.hpp"

namespace ioelim {

int required_steps(int n, int m) {
    if (m < 1 || m > n)
        throw Error(ErrorKind::UnsupportedShape,
                    "need 1 <= outputs <= states (m=" + std::to_string(m) +
                        ", n=" + std::to_string(n) + ")");
    return n - (m - 1);
}

static void collect_unknowns(ProlongedSystem& sys) {
    sys.unknown_jets.clear();
    for (const PolyEquation& eq : sys.equations)
        for (const auto& [mono, c] : eq.poly.terms())
            for (const auto& [v, e] : mono.factors())
                if (v.kind() == VarKind::State) sys.unknown_jets.insert(v);
}

ProlongedSystem initial_system(const Model& mdl) {
    ProlongedSystem sys;
    sys.equations = to_poly_system(mdl);
    sys.step = 0;
    collect_unknowns(sys);
    return sys;
}

// The k-th derivative of a cleared source equation, recomputed from the base.
static Poly derived_equation(const Model& mdl, VarKind kind, int index, int order) {
    const RationalFn& rf = kind == VarKind::State ? mdl.state_rhs[index - 1]
                                                  : mdl.output_rhs[index - 1];
    Poly base = kind == VarKind::State ? rf.den * Poly(mdl.state(index, 1)) - rf.num
                                       : rf.den * Poly(mdl.output(index)) - rf.num;
    return base.derivative(order);
}

ProlongedSystem prolong_step(ProlongedSystem sys, const Model& mdl) {
    int k = sys.step + 1;
    for (int j = 1; j <= mdl.m; ++j)
        sys.equations.push_back({derived_equation(mdl, VarKind::Output, j, k), VarKind::Output, j, k});

    // housed[i] = highest q such that the equation defining x_i^(q) is
    // present, i.e. the (q-1)-th derivative of state equation i.
    std::vector<int> housed(mdl.n + 1, 0);
    for (const PolyEquation& eq : sys.equations)
        if (eq.source_kind == VarKind::State)
            housed[eq.source_index] = std::max(housed[eq.source_index], eq.deriv_order + 1);

    for (;;) {
        collect_unknowns(sys);
        bool added = false;
        for (JetVar v : sys.unknown_jets) {
            int i = static_cast<int>(v.index());
            int q = static_cast<int>(v.order());
            if (q >= 1 && q > housed[i]) {
                sys.equations.push_back(
                    {derived_equation(mdl, VarKind::State, i, q - 1), VarKind::State, i, q - 1});
                housed[i] = q;
                added = true;
            }
        }
        if (!added) break;
    }
    sys.step = k;
    return sys;
}

std::pair<int, int> count(const ProlongedSystem& sys) { return sys.counts(); }

ProlongedSystem prolong_steps(const Model& mdl, int steps) {
    ProlongedSystem sys = initial_system(mdl);
    for (int k = 0; k < steps; ++k) sys = prolong_step(std::move(sys), mdl);
    return sys;
}

ProlongedSystem prolong_to_bound(const Model& mdl) {
    return prolong_steps(mdl, required_steps(mdl.n, mdl.m));
}

} // namespace ioelim
