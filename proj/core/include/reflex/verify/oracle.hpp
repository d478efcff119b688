#ifndef REFLEX_VERIFY_ORACLE_HPP
#define REFLEX_VERIFY_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "reflex/fpmodule.hpp"

// Degree-truncated linear algebra over the coefficient field. Everything here
// works one graded piece at a time by exact row reduction and never touches a
// Groebner basis, which makes it an independent check on the engine.

namespace reflex::verify {

/// All monomials of total degree d in n variables, lex-descending.
std::vector<Monomial> monomialsOfDegree(int nvars, int d);

/// Membership of a homogeneous polynomial in an ideal of R = S/J, decided in
/// the single degree deg f by linear algebra over S_{deg f}.
template <class K>
bool oracleMember(const Polynomial<K>& f, const Ideal<K>& ideal);

/// dim_k M_d for M = coker(A) over R = S/J.
template <class K>
std::int64_t oracleHilbertValue(const FPModule<K>& m, int d);

template <class K>
HilbertFunction oracleHilbertFunction(const FPModule<K>& m, int low, int high);

/// A basis of the degree-d syzygies of `gens` over R, as vectors of the free
/// module with twists `degrees`, reduced modulo J.
template <class K>
std::vector<Vec<K>> oracleSyzygies(const std::vector<Vec<K>>& gens, const std::vector<int>& degrees,
                                   const FreeModule<K>& ambient, int d);

}  // namespace reflex::verify

#endif  // REFLEX_VERIFY_ORACLE_HPP
