#ifndef MV_VALIDATE_HPP
#define MV_VALIDATE_HPP

#include <string>
#include <vector>

#include "mv/calculus.hpp"

namespace mv {

struct ValidationReport {
  std::vector<std::string> failures;
  long long degrees_checked = 0;
  long long monomials_checked = 0;
  long long characters_checked = 0;
  long long tensor_products_checked = 0;
  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

// Runs the table invariants:
//   (i)   |admissible monomials| == Kostant partition count, per degree up to
//         the height bound;
//   (ii)  every monomial polytope has highest vertex 0 and lowest vertex at
//         its degree, strictly under the generic functional;
//   (iii) every edge of every monomial polytope is root-parallel, and every
//         vertex is a root-lattice point;
//   (iv)  polytopes within a degree are pairwise distinct;
//   (v)   containment-counted characters equal Freudenthal characters for
//         all dominant lambda with fund coords <= coords_bound;
//   (vi)  when with_tensor is set, containment-counted tensor multiplicities
//         equal Brauer-Klimyk for all dominant pairs with coords <=
//         tensor_coords_bound.
ValidationReport validate_table(const GeneratorTable& t, const RootSystem& rs,
                                long long height_bound, long long coords_bound = 2,
                                bool with_tensor = false,
                                long long tensor_coords_bound = 2);

bool is_root_parallel(const RootSystem& rs, const VecQ& direction);

// Enumerates -nu over all nonnegative integer root-coordinate vectors of
// height <= bound (the degree grid used by the checks above).
std::vector<VecZ> degrees_up_to_height(int rank, long long bound);

}  // namespace mv

#endif
