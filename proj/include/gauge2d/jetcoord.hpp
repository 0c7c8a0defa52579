#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace gauge2d {

// Reduced jet coordinates of a 2D evolutionary system.  The light-cone
// derivatives are written d (time-like) and dbar (space-like).  After the
// field equations are used to eliminate everything they determine, the
// surviving coordinates are:
//
//   PhiJ    constrained fields phi^J, order zero only (d phi^J and
//           dbar phi^J are both fixed by the equations),
//   PhiA    unconstrained fields phi^a together with their pure
//           dbar-jets (d phi^a is fixed by the equations),
//   Lambda  the lambda fields with unrestricted d- and dbar-jets.
//
// p counts d-derivatives, q counts dbar-derivatives.
enum class JetKind { PhiJ = 0, PhiA = 1, Lambda = 2 };

struct JetCoord {
    JetKind kind;
    int index = 0; // position within its kind
    int p = 0;     // d-order
    int q = 0;     // dbar-order

    friend auto operator<=>(const JetCoord&, const JetCoord&) = default;
};

// Throws std::invalid_argument unless (p, q) is admissible for the kind.
inline void check_jet(const JetCoord& j)
{
    if (j.index < 0 || j.p < 0 || j.q < 0)
        throw std::invalid_argument("jet coordinate with negative index or order");
    switch (j.kind) {
    case JetKind::PhiJ:
        if (j.p != 0 || j.q != 0)
            throw std::invalid_argument("constrained field carries no free derivatives");
        break;
    case JetKind::PhiA:
        if (j.p != 0)
            throw std::invalid_argument("d-jet of an unconstrained field is not a coordinate");
        break;
    case JetKind::Lambda:
        break;
    }
}

inline JetCoord make_jet(JetKind kind, int index, int p = 0, int q = 0)
{
    JetCoord j{kind, index, p, q};
    check_jet(j);
    return j;
}

} // namespace gauge2d
