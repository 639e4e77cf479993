#include "ioelim/names.hpp"

#include <sstream>

namespace ioelim {

static std::string pick(const std::vector<std::string>& pool, unsigned index,
                        const char* fallback) {
    if (index >= 1 && index <= pool.size()) return pool[index - 1];
    return fallback + std::to_string(index);
}

std::string NameTable::name(JetVar v) const {
    std::string base;
    switch (v.kind()) {
        case VarKind::State: base = pick(states, v.index(), "x"); break;
        case VarKind::Output: base = pick(outputs, v.index(), "y"); break;
        case VarKind::Input: base = pick(inputs, v.index(), "u"); break;
        case VarKind::Param: base = pick(params, v.index(), "p"); break;
    }
    base.append(v.order(), '\'');
    return base;
}

NameTable NameTable::generic(int n, int m, int r, int num_params) {
    NameTable t;
    for (int i = 1; i <= n; ++i) t.states.push_back("x" + std::to_string(i));
    for (int j = 1; j <= m; ++j) t.outputs.push_back("y" + std::to_string(j));
    for (int l = 1; l <= r; ++l) t.inputs.push_back("u" + std::to_string(l));
    for (int k = 1; k <= num_params; ++k) t.params.push_back("p" + std::to_string(k));
    return t;
}

std::string to_string(const Monomial& m, const NameTable& names) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty()) out += "*";
        out += names.name(v);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

static std::string rat_to_string(const Rat& c) { return c.get_str(); }

std::string to_string(const Poly& p, const NameTable& names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (m.is_one()) {
            out += rat_to_string(a);
        } else {
            if (a != 1) out += rat_to_string(a) + "*";
            out += to_string(m, names);
        }
        first = false;
    }
    return out;
}

} // namespace ioelim
