#pragma once

#include <jetsym/catalog.hpp>

#include <string>
#include <string_view>

namespace jetsym {

/// Text syntax:
///   identifiers  u u* Phi Phi* phi phi* x0..x3 tau m lambda n i
///   jets         u[0,3]  phi*[t,1]   (indices 0..3 for u, t/1/2 for Phi, phi)
///   operators    + - * / ^  with ^ taking a constant rational exponent
///   calls        exp(e)  box(f)  S<k>(f)  S<j><k>(f,g)  R<k>(f)  R<k>(f,g)
///   references   @name or @"name" for a catalog entry
/// A '*' right after a function name conjugates it when the next non-blank
/// character is one of [ * ^ ) + - / , ] or the end of input; otherwise it
/// is multiplication.
Expr parse(std::string_view text, const Settings& s = {});

/// Canonical text; parse(print(e)) == e.
std::string print(const Expr& e);

} // namespace jetsym
