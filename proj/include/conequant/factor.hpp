#ifndef CONEQUANT_FACTOR_HPP
#define CONEQUANT_FACTOR_HPP

#include "conequant/poly.hpp"

#include <utility>
#include <vector>

namespace conequant {

/// Squarefree decomposition over Q (Yun): returns monic squarefree parts
/// with their multiplicities, product of parts^mult = monic(p).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Complete factorization over Q into monic irreducibles with
/// multiplicities (the constant content is dropped). Input must be nonzero.
std::vector<std::pair<Poly, int>> factor_poly(const Poly& p);

/// Irreducibility over Q; constants are not irreducible.
bool is_irreducible(const Poly& p);

} // namespace conequant

#endif
