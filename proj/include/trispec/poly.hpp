#pragma once

#include <vector>

#include "trispec/common.hpp"

namespace trispec {

// Integer polynomial, little-endian coefficients, no trailing zeros.
using ZPoly = std::vector<Int>;

void zpoly_trim(ZPoly& p);
int zpoly_degree(const ZPoly& p);  // -1 for the zero polynomial
ZPoly zpoly_derivative(const ZPoly& p);
// divide by the gcd of the coefficients, preserving the leading sign
ZPoly zpoly_primitive(const ZPoly& p);
int zpoly_sign_at(const ZPoly& p, const Rat& x);

// Clears denominators of a rational polynomial and takes the primitive part;
// roots are unchanged.
ZPoly zpoly_from_rational(const std::vector<Rat>& coeffs);

ZPoly zpoly_gcd(ZPoly a, ZPoly b);  // primitive, positive leading coefficient

// Quotient of an exact polynomial division; throws on a nonzero remainder.
ZPoly zpoly_exact_div(const ZPoly& num, const ZPoly& den);

// Sturm chain of the squarefree part of p (same distinct roots); built with
// positive-multiplier pseudo-remainders.
std::vector<ZPoly> sturm_chain(const ZPoly& p);

// Number of distinct real roots in the half-open interval (a, b].
int sturm_count(const std::vector<ZPoly>& chain, const Rat& a, const Rat& b);

// Upper bound B with all real roots in (-B, B].
Rat zpoly_root_bound(const ZPoly& p);

struct RootInterval {
    Rat lo, hi;  // half-open (lo, hi], contains exactly one real root
};

// Isolating interval of the LARGEST real root; requires one to exist.
RootInterval isolate_largest_root(const std::vector<ZPoly>& chain);

// Bisect an isolating interval until hi - lo <= width.
void refine_root(const std::vector<ZPoly>& chain, RootInterval& iv, const Rat& width);

}  // namespace trispec
