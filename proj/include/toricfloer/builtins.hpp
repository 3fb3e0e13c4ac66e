#ifndef TORICFLOER_BUILTINS_HPP
#define TORICFLOER_BUILTINS_HPP

#include <optional>
#include <string>
#include <vector>

#include "toricfloer/polytope.hpp"

namespace toricfloer {

/// Catalog of the worked examples. Parameterized entries take epsilon;
/// the rest reject it.
std::vector<std::string> builtin_names();

/// Throws ParseError for unknown names or out-of-range parameters.
Polytope builtin_polytope(const std::string& name,
                          std::optional<Rational> epsilon = std::nullopt);

Polytope segment_polytope();
Polytope cp_polytope(int n);            // projective space simplex, offsets 0,...,0,-1
Polytope hirzebruch1_polytope();        // CP^2 blown up at one point, reflexive
Polytope blowup3_polytope(Rational epsilon);       // CP^2 blown up at three points
Polytope cube_blowup_a_polytope(Rational epsilon);
Polytope cube_blowup_b_polytope(Rational epsilon);
/// epsilon -> 0 specialization of the cube blow-ups: all offsets -1.
Polytope cube_blowup_reflexive_polytope();

}  // namespace toricfloer

#endif
