#ifndef REFLEX_TESTS_SUPPORT_HPP
#define REFLEX_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "reflex/field.hpp"
#include "reflex/fpmodule.hpp"
#include "reflex/groebner.hpp"
#include "reflex/homology.hpp"
#include "reflex/invariants.hpp"
#include "reflex/ring.hpp"

namespace reflex::test {

template <class K>
RingPtr<K> ring(std::vector<std::string> vars, std::vector<std::string> ideal = {}) {
  return makeRing<K>(vars, OrderKind::Grevlex, ideal);
}

template <class K>
Ideal<K> ideal(const RingPtr<K>& r, std::vector<std::string> gens) {
  return Ideal<K>::parse(r, gens);
}

template <class K>
FPModule<K> cyclic(const RingPtr<K>& r, std::vector<std::string> gens) {
  return FPModule<K>::cyclic(ideal(r, gens));
}

/// Example 2.4: R = k[x,y,z,w]/(xy), p = (y,z,w).
template <class K>
RingPtr<K> example24() {
  return ring<K>({"x", "y", "z", "w"}, {"x*y"});
}

}  // namespace reflex::test

#endif  // REFLEX_TESTS_SUPPORT_HPP
