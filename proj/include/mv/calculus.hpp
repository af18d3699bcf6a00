#ifndef MV_CALCULUS_HPP
#define MV_CALCULUS_HPP

#include <map>
#include <vector>

#include "mv/table.hpp"

namespace mv {

// The graded family at one degree: admissible monomials with their polytopes.
struct MVPolytopeSet {
  VecZ degree;
  std::vector<std::pair<Monomial, Polytope>> entries;
};

// Per-monomial breakdown of a containment count.
struct CountDetail {
  long long total = 0;
  long long contained = 0;
  std::vector<std::pair<Monomial, bool>> monomials;
};

// All admissible monomials of the given degree (root coords, integral, all
// <= 0), in lexicographic exponent order.
std::vector<Monomial> admissible_monomials(const GeneratorTable& t, const VecQ& nu);

// Minkowski sum of the factors; the unit monomial gives the origin.
Polytope monomial_polytope(const GeneratorTable& t, const Monomial& m);

// The degree-nu family, with its structural invariants asserted.
MVPolytopeSet mv_polytopes(const GeneratorTable& t, const RootSystem& rs, const VecQ& nu);

// Convex hull of the Weyl orbit through lambda (any weight), in root coords.
Polytope weylgon(const RootSystem& rs, const Weight& lambda);

// Multiplicity of nu in V_lambda by containment counting.
long long weight_multiplicity(const GeneratorTable& t, const RootSystem& rs,
                              const Weight& lambda, const Weight& nu);
CountDetail weight_multiplicity_detail(const GeneratorTable& t, const RootSystem& rs,
                                       const Weight& lambda, const Weight& nu);

// Full character of V_lambda by containment counting.
std::map<Weight, long long> character(const GeneratorTable& t, const RootSystem& rs,
                                      const Weight& lambda);

// Multiplicity of V_nu in V_lambda (x) V_mu by containment counting.
long long tensor_multiplicity(const GeneratorTable& t, const RootSystem& rs,
                              const Weight& lambda, const Weight& mu, const Weight& nu);
CountDetail tensor_multiplicity_detail(const GeneratorTable& t, const RootSystem& rs,
                                       const Weight& lambda, const Weight& mu,
                                       const Weight& nu);

std::map<Weight, long long> tensor_decompose(const GeneratorTable& t, const RootSystem& rs,
                                             const Weight& lambda, const Weight& mu);

struct Theorem3Result {
  long long tensor_mult;
  long long weight_mult;
  long long kostant;
};

// (tensor mult of V_{lambda+mu-delta}, weight mult of lambda-delta, K(delta));
// throws if the chain tensor <= weight <= kostant fails.
Theorem3Result theorem3_check(const GeneratorTable& t, const RootSystem& rs,
                              const Weight& lambda, const Weight& mu, const VecQ& delta);

}  // namespace mv

#endif
