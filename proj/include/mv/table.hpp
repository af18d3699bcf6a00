#ifndef MV_TABLE_HPP
#define MV_TABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mv/geometry.hpp"
#include "mv/rootsys.hpp"

namespace mv {

// One generator of the monomial calculus: a polytope hung from the origin
// with its lowest vertex at `degree` (a root-lattice point with all
// coordinates <= 0).
struct Generator {
  std::string name;
  VecZ degree;
  Polytope polytope;
  std::string provenance;
};

// Per-group generator data: the generators plus the incompatibility graph
// (pairs that may not occur together in an admissible monomial).
struct GeneratorTable {
  GroupId group;
  std::string convention_note;
  std::vector<Generator> generators;          // sorted by name
  std::vector<std::pair<int, int>> incompat;  // index pairs i<j, sorted
  std::vector<uint32_t> adj;                  // adjacency bitmasks

  int index_of(const std::string& name) const;
  bool edge(int i, int j) const { return (adj[i] >> j) & 1u; }
  void finalize();  // sorts, builds adjacency, checks basic shape
};

// Exponent vector over the table's generators; empty = the unit monomial.
struct Monomial {
  std::vector<std::pair<int, long long>> powers;  // (generator index, exp>0)

  bool operator==(const Monomial& m) const { return powers == m.powers; }
  bool operator<(const Monomial& m) const { return powers < m.powers; }
};

VecZ monomial_degree(const GeneratorTable& t, const Monomial& m);
std::string monomial_name(const GeneratorTable& t, const Monomial& m);
bool monomial_admissible(const GeneratorTable& t, const Monomial& m);

// Composite key ordering vertices by <rho, .> then lexicographically; total
// and strictly dominant, so highest/lowest vertices are always unique.
bool generic_less(const RootSystem& rs, const VecQ& a, const VecQ& b);
VecQ highest_vertex(const RootSystem& rs, const Polytope& p);
VecQ lowest_vertex(const RootSystem& rs, const Polytope& p);

// The shipped tables for A1, A2, C2, A3.
const GeneratorTable& builtin_table(GroupId group);

std::string table_to_json(const GeneratorTable& t);
GeneratorTable table_from_json(const std::string& text);
void save_table(const GeneratorTable& t, const std::string& path);
GeneratorTable load_table(const std::string& path);

}  // namespace mv

#endif
