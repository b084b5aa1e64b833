#ifndef REVSYM_PRINT_HPP
#define REVSYM_PRINT_HPP

#include <string>

#include "revsym/term.hpp"

namespace revsym {

// Emits the concrete grammar the parser accepts; parse(print(f)) is
// alpha-equal to f. Non-list variables are annotated (x:elem, n:nat) at
// their first free occurrence, and at the binder for quantifiers.
std::string print(const Formula& f);
std::string print(const Term& t);

}  // namespace revsym

#endif  // REVSYM_PRINT_HPP
