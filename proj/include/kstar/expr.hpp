// Text form for polynomials and polyvector fields.
//
// Grammar (whitespace ignored):
//   poly    := chunk (('+'|'-') chunk)*
//   chunk   := ['-'] factor ('*' factor)*
//   factor  := rational | var | wedge          rational := int ['/' int]
//   var     := 'x' int ['^' int]               wedge    := 'd' int ('^' 'd' int)*
// A polyvector is a poly whose chunks each carry one wedge block of a common
// length; with no wedge blocks at all the text denotes a degree -1 field.

#pragma once

#include <string>

#include "kstar/polyvector.hpp"

namespace kstar {

struct syntax_error : std::runtime_error {
  size_t pos;
  syntax_error(const std::string& what, size_t at)
      : std::runtime_error(what + " (at offset " + std::to_string(at) + ")"),
        pos(at) {}
};

Poly parse_poly(const std::string& text, int dim);
PolyVec parse_polyvector(const std::string& text, int dim);

std::string print_poly(const Poly& p);
std::string print_polyvector(const PolyVec& v);

} // namespace kstar
