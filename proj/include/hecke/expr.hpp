#ifndef HECKE_EXPR_HPP
#define HECKE_EXPR_HPP

#include <map>
#include <string>

#include "hecke/hprime.hpp"

namespace hecke {

/*
 * Parses arithmetic expressions over H' as they appear in group-spec
 * files: integers, parameters u1..uk, named ring constants, the
 * distinguished generator "s", and + - * / ^ with parentheses.
 * "s^-1" and "s^-2" reduce via the inverse Hecke relation; division
 * and negative powers of scalars require monomial units.
 */
HPrimeElement parse_hprime_expr(const std::string& text, int vars,
                                const HeckeRelation& rel,
                                const std::map<std::string, LaurentPoly>&
                                    constants);

// Same, but the result must be scalar (no sigma part).
LaurentPoly parse_scalar_expr(const std::string& text, int vars,
                              const HeckeRelation& rel,
                              const std::map<std::string, LaurentPoly>&
                                  constants);

}  // namespace hecke

#endif
