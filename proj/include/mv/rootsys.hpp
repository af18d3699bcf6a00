#ifndef MV_ROOTSYS_HPP
#define MV_ROOTSYS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mv/rat.hpp"

namespace mv {

enum class GroupId { A1, A2, C2, A3 };

std::string group_name(GroupId g);
std::optional<GroupId> parse_group(const std::string& s);

// Weights are integer tuples in the fundamental-weight basis.
using Weight = std::vector<long long>;

// A Weyl group element, stored as its matrix on simple-root coordinates.
struct WeylElement {
  std::vector<std::vector<long long>> mat;  // root coords -> root coords
  int sign;                                 // det, +1 or -1
  int length;
};

// Exact data for one of the four supported root systems.
//
// Internal canonical coordinates are the simple-root basis; user-facing
// weights are in the fundamental-weight basis.  fund = cartan * root.
// C2 note: simple roots are ordered alpha1 long, alpha2 short, so the
// positive roots are alpha1, alpha2, alpha1+alpha2, alpha1+2*alpha2 and the
// generator degrees of the Sp4 table live where its coproduct grading puts
// them.  The convention is carried in convention_note on every output.
struct RootSystem {
  GroupId id;
  std::string name;
  int rank;
  std::vector<std::vector<long long>> cartan;      // n x n
  std::vector<VecQ> cartan_inv;                    // exact inverse
  std::vector<std::vector<long long>> form;        // Gram matrix (alpha_i, alpha_j)
  std::vector<VecZ> positive_roots;                // root coords
  std::vector<WeylElement> weyl;                   // whole Weyl group
  VecQ rho_root;                                   // half-sum of positive roots
  std::string convention_note;

  VecQ fund_to_root(const Weight& w) const;
  Weight root_to_fund(const VecQ& v) const;        // throws off the weight lattice
  bool on_weight_lattice(const VecQ& v) const;

  bool is_dominant(const Weight& w) const;
  Weight reflect(const Weight& w, int i) const;    // simple reflection s_i
  Weight dominant_representative(const Weight& w) const;
  Weight antidominant_representative(const Weight& w) const;
  Weight apply(const WeylElement& we, const Weight& w) const;

  Rat form_root(const VecQ& x, const VecQ& y) const;  // on root coords
  long long height(const VecZ& v) const;              // sum of root coords

  Weight add(const Weight& a, const Weight& b) const;
  Weight sub(const Weight& a, const Weight& b) const;
  Weight neg(const Weight& a) const;
  Weight rho() const;                              // (1,...,1)
  Weight zero() const;
};

const RootSystem& load_root_system(GroupId id);
const RootSystem& load_root_system(const std::string& id);

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda);

// mu <= lambda in dominance order: lambda - mu a nonnegative integer
// combination of simple roots.
bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda);

// Number of multisets of positive roots summing to v (v in root coords,
// integral); 0 if any coordinate is negative.
long long kostant_partition_count(const RootSystem& rs, const VecQ& v);

// Weight multiplicities of the irreducible V_lambda via the Freudenthal
// recursion, memoized over dominant representatives.
class FreudenthalTable {
 public:
  FreudenthalTable(const RootSystem& rs, const Weight& lambda);

  long long mult(const Weight& nu) const;
  // Full character: every weight with nonzero multiplicity.
  std::map<Weight, long long> character() const;
  const Weight& highest() const { return lambda_; }

 private:
  long long mult_dominant(const Weight& nu) const;
  const RootSystem& rs_;
  Weight lambda_;
  VecQ lambda_root_;
  Rat norm_lr_;  // <lambda+rho, lambda+rho>
  mutable std::map<Weight, long long> memo_;
};

long long freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda,
                                   const Weight& nu);

// Brauer-Klimyk alternating sum; the independent tensor-multiplicity oracle.
long long klimyk_tensor_multiplicity(const RootSystem& rs, const Weight& lambda,
                                     const Weight& mu, const Weight& nu);

std::map<Weight, long long> klimyk_tensor_decompose(const RootSystem& rs,
                                                    const Weight& lambda,
                                                    const Weight& mu);

long long weyl_dimension(const RootSystem& rs, const Weight& lambda);

// Dominant weights nu with nu <= lambda in dominance order (the candidate
// summands / character support box for lambda).
std::vector<Weight> weights_below(const RootSystem& rs, const Weight& lambda);

std::string weight_to_string(const Weight& w);

}  // namespace mv

#endif
