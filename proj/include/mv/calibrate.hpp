#ifndef MV_CALIBRATE_HPP
#define MV_CALIBRATE_HPP

#include <string>
#include <vector>

#include "mv/calculus.hpp"
#include "mv/validate.hpp"

namespace mv {

struct CalibrationResult {
  GeneratorTable table;
  long long candidates_per_unknown = 0;  // product of candidate-set sizes
  long long assignments_tested = 0;
  long long passing_raw = 0;       // passing assignments before quotienting
  long long equivalence_classes = 0;  // must be 1 on success
  std::vector<std::string> notes;  // certificate text, one line each
};

// Thrown when the search finds no passing assignment (the candidate region
// heuristic was too tight) or several inequivalent ones.
struct CalibrationError : std::runtime_error {
  explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
  std::vector<std::string> candidates;  // listing, for the ambiguous case
};

// Candidate polytopes for a generator of the given degree: convex hulls of
// subsets of the lattice interval [degree, 0], required to have 0 and degree
// as strict highest/lowest vertices and all edges root-parallel.
std::vector<Polytope> shape_candidates(const RootSystem& rs, const VecZ& degree);

// Re-derives the polytopes of `unknowns` (degrees and incompatibilities are
// taken from `base`) by exhaustive search against the Freudenthal and Klimyk
// batteries; returns the unique passing table up to table automorphisms,
// canonically named.
CalibrationResult calibrate_shapes(const GeneratorTable& base, const RootSystem& rs,
                                   const std::vector<std::string>& unknowns,
                                   long long battery_coords = 2,
                                   long long tensor_coords = 2);

// Joint search for the A3 table: shape classes are fixed from the generator
// inventory (segments / triangles / square-based pyramids / tetrahedra /
// octahedron), degrees from the Kostant counts; the 15-edge incompatibility
// graph and the assignment of shapes to names are searched degree by degree.
CalibrationResult calibrate_structure_a3(long long battery_coords = 2,
                                         long long tensor_coords = 2);

// Dispatches to the appropriate search for the group and checks that the
// result reproduces the shipped table.
CalibrationResult calibrate_group(GroupId group);

}  // namespace mv

#endif
