#ifndef MI_JSON_IO_HPP
#define MI_JSON_IO_HPP

#include <string>

#include "mi/complex.hpp"
#include "mi/ideal.hpp"
#include "mi/polarize.hpp"

namespace mi {

// Shared JSON schemas, bit-exact and canonical on output:
//   ideal    {"nvars": 3, "gens": [[3,0,0],[1,2,0]]}
//   complex  {"nvars": 3, "minimal_nonfaces": [[1],[3]]}        (1-based)
//   polarized {"extension": [3,2], "gens": [[[1,1],[1,2]], ...]} (1-based)

std::string to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const std::string& text);

std::string to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const std::string& text);

std::string to_json(const PolarizedIdeal& polarized);
PolarizedIdeal polarized_from_json(const std::string& text);

}  // namespace mi

#endif
