#pragma once

#include <set>
#include <utility>
#include <vector>

#include "ioelim/model.hpp"

namespace ioelim {

struct JetRankLess {
    bool operator()(JetVar a, JetVar b) const { return a.rank_key() < b.rank_key(); }
};

// The growing equation set produced by the differentiation steps, with its
// ledger of unknown state jets.  Invariant: for every state jet x_i^(k)
// with k >= 1 occurring anywhere, the (k-1)-th derivative of state
// equation i is present.
struct ProlongedSystem {
    std::vector<PolyEquation> equations;
    int step = 0;
    std::set<JetVar, JetRankLess> unknown_jets; // state jets occurring in equations

    std::pair<int, int> counts() const {
        return {static_cast<int>(equations.size()), static_cast<int>(unknown_jets.size())};
    }
};

// Theorem bound on the number of differentiation steps: n - (m - 1).
// Throws UnsupportedShape unless 1 <= m <= n.
int required_steps(int n, int m);

// The raw cleared system (step 0).
ProlongedSystem initial_system(const Model& mdl);

// One differentiation step: adjoins the next derivative of every output
// equation, then closes over state equations whose defining jets occur.
ProlongedSystem prolong_step(ProlongedSystem sys, const Model& mdl);

std::pair<int, int> count(const ProlongedSystem& sys);

// Runs exactly required_steps(n, m) steps from the raw system.
ProlongedSystem prolong_to_bound(const Model& mdl);

// Runs an explicit number of steps (the CLI --steps override).
ProlongedSystem prolong_steps(const Model& mdl, int steps);

} // namespace ioelim
