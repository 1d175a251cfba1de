#pragma once

#include "mzv/nc_poly.hpp"
#include "mzv/word.hpp"

namespace mzv {

// The involutive automorphism of Q[c]<x,y> with x -> x + y, y -> -y.
NcPoly phi(Word w);
NcPoly phi(const NcPoly& p);

// Harmonic (stuffle) product: commutative, associative, unit 1, defined on
// words by x-pullout and the block recursion on leading y x^{k-1} factors.
NcPoly harmonic(Word a, Word b);
NcPoly harmonic(const NcPoly& a, const NcPoly& b);

// Diamond product: w1 <> w2 = phi(phi(w1) * phi(w2)) with * the harmonic
// product. Commutative, associative, unit 1.
NcPoly diamond(Word a, Word b);
NcPoly diamond(const NcPoly& a, const NcPoly& b);

// Drops the phi/harmonic/diamond memo tables (used by fault injection).
void clear_product_caches();

}  // namespace mzv
