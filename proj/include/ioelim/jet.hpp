#pragma once

#include <cassert>
#include <compare>
#include <cstdint>

namespace ioelim {

enum class VarKind : unsigned { Param = 0, Input = 1, Output = 2, State = 3 };

// A jet variable: a state/output/input symbol at a fixed derivative order,
// or a parameter (order 0 always).  Everything downstream treats these as
// independent algebraic variables.
//
// The packed key is built so that a larger key means a higher rank under the
// elimination ranking: states above outputs above inputs above parameters,
// within a block higher derivative order first, lower index first.
class JetVar {
  public:
    JetVar(VarKind kind, unsigned index, unsigned order) {
        assert(index >= 1 && index <= 0xFFFF);
        assert(order <= 0xFFFFFF);
        assert(kind != VarKind::Param || order == 0);
        key_ = (static_cast<std::uint64_t>(kind) << 56) |
               (static_cast<std::uint64_t>(order) << 16) |
               (0xFFFFu - index);
    }

    VarKind kind() const { return static_cast<VarKind>(key_ >> 56); }
    unsigned index() const { return 0xFFFFu - static_cast<unsigned>(key_ & 0xFFFFu); }
    unsigned order() const { return static_cast<unsigned>((key_ >> 16) & 0xFFFFFFu); }

    // d/dt image of this variable; parameters have none.
    JetVar derivative() const {
        assert(kind() != VarKind::Param);
        return JetVar(kind(), index(), order() + 1);
    }

    std::uint64_t rank_key() const { return key_; }

    friend bool operator==(JetVar a, JetVar b) { return a.key_ == b.key_; }
    friend bool operator!=(JetVar a, JetVar b) { return a.key_ != b.key_; }

  private:
    std::uint64_t key_;
};

// The elimination ranking: a total order on jet variables.  Higher
// derivative orders of the same symbol rank strictly higher, and every
// state jet ranks above every output/input jet and every parameter, so a
// lexicographic monomial order induced by it has the elimination property
// for the state block.
struct Ranking {
    bool less(JetVar a, JetVar b) const { return a.rank_key() < b.rank_key(); }
    bool greater(JetVar a, JetVar b) const { return a.rank_key() > b.rank_key(); }
    int compare(JetVar a, JetVar b) const {
        if (a.rank_key() < b.rank_key()) return -1;
        if (a.rank_key() > b.rank_key()) return 1;
        return 0;
    }
};

} // namespace ioelim
