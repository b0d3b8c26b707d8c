#pragma once

#include <string>

namespace fixtures {

// Virtual trefoil, both crossings positive.
inline const std::string trefoil = "O1+ O2+ U1+ U2+";

// Kishino-type knot: connected sum of two copies of a two-crossing trivial
// diagram, cut so that no single-chord or two-chord move applies.
// Chords 1..4 play a, b, c, d: p = -1, -1, 1, 1.
inline const std::string kishino = "O1+ O3+ U4- U3+ O4- O2- U1+ U2-";

// Irreducible four-chord diagram with parities a..d = 0, 1, -1, 2.
inline const std::string miyazawa = "O4+ O1+ O3+ U4+ U3+ U2- U1+ O2-";

// Irreducible five-chord diagram with parities a..e = 2, 0, -2, 1, -1.
inline const std::string pretzel = "O1+ O5+ O2+ O3+ U4+ U1+ O4+ U2+ U3+ U5+";

// A triangle move on this diagram (pairs starting at 0, 3, 6) changes S_(1,2):
// two smoothed triangle chords reconnect the three strands differently on
// the two sides of the move.
inline const std::string s12_triangle_before = "U2- O4+ O3+ O1- O2- U3+ U1- U4+";
inline const std::string s12_triangle_after = "O4+ U2- O3+ O2- O1- U3+ U4+ U1-";

// Flat diagrams related by one flat triangle move; neither side has a flat
// single-chord or two-chord site.
inline const std::string flat_r3_left = "3 2 4 3 4 5 1 5 2 1";
inline const std::string flat_r3_right = "3 4 2 3 5 4 1 2 5 1";

}  // namespace fixtures
