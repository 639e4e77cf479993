#pragma once

#include <string>
#include <vector>

#include "ioelim/poly.hpp"

namespace ioelim {

// Maps jet variables to user-facing names.  Derivatives print with prime
// marks (x1'', y2').
struct NameTable {
    std::vector<std::string> states;
    std::vector<std::string> outputs;
    std::vector<std::string> inputs;
    std::vector<std::string> params;

    std::string name(JetVar v) const;

    static NameTable generic(int n, int m, int r, int num_params);
};

std::string to_string(const Monomial& m, const NameTable& names);
std::string to_string(const Poly& p, const NameTable& names);

} // namespace ioelim
