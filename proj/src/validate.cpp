#include "mv/validate.hpp"

#include <set>
#include <sstream>

namespace mv {

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << (ok() ? "PASS" : "FAIL") << ": " << degrees_checked << " degrees, "
     << monomials_checked << " monomials, " << characters_checked << " characters, "
     << tensor_products_checked << " tensor products checked";
  if (!ok()) os << "; " << failures.size() << " failure(s)";
  return os.str();
}

bool is_root_parallel(const RootSystem& rs, const VecQ& direction) {
  for (const auto& alpha : rs.positive_roots) {
    // direction and alpha parallel iff all 2x2 minors vanish
    bool par = true;
    for (int i = 0; i < rs.rank && par; ++i)
      for (int j = i + 1; j < rs.rank && par; ++j)
        par = (direction[i] * Rat(alpha[j]) == direction[j] * Rat(alpha[i]));
    if (par) return true;
  }
  return false;
}

std::vector<VecZ> degrees_up_to_height(int rank, long long bound) {
  std::vector<VecZ> out;
  std::vector<long long> c(rank, 0);
  for (;;) {
    long long h = 0;
    for (auto x : c) h += x;
    if (h <= bound) {
      VecZ nu(rank);
      for (int i = 0; i < rank; ++i) nu[i] = -(long)c[i];
      out.push_back(nu);
    }
    int i = 0;
    while (i < rank && ++c[i] > bound) c[i++] = 0;
    if (i == rank) break;
  }
  std::sort(out.begin(), out.end(), [](const VecZ& a, const VecZ& b) {
    Int ha(0), hb(0);
    for (const auto& x : a) ha += x;
    for (const auto& x : b) hb += x;
    if (ha != hb) return ha > hb;  // increasing height of -nu
    return a < b;
  });
  return out;
}

ValidationReport validate_table(const GeneratorTable& t, const RootSystem& rs,
                                long long height_bound, long long coords_bound,
                                bool with_tensor, long long tensor_coords_bound) {
  ValidationReport rep;
  auto fail = [&](const std::string& s) { rep.failures.push_back(s); };

  for (const auto& nu : degrees_up_to_height(rs.rank, height_bound)) {
    VecQ nu_q = to_vecq(nu);
    ++rep.degrees_checked;
    auto monomials = admissible_monomials(t, nu_q);
    long long kostant = kostant_partition_count(rs, -nu_q);
    if ((long long)monomials.size() != kostant) {
      std::ostringstream os;
      os << "degree " << vec_to_string(nu_q) << ": " << monomials.size()
         << " admissible monomials but Kostant count " << kostant;
      fail(os.str());
    }
    std::set<std::vector<VecQ>> shapes;
    for (const auto& m : monomials) {
      ++rep.monomials_checked;
      Polytope p = monomial_polytope(t, m);
      std::string name = monomial_name(t, m);
      if (!is_zero(highest_vertex(rs, p)))
        fail("monomial " + name + ": highest vertex is not the origin");
      if (lowest_vertex(rs, p) != nu_q)
        fail("monomial " + name + ": lowest vertex differs from its degree");
      for (const auto& v : p.vertices)
        if (!is_integral(v)) {
          fail("monomial " + name + ": vertex " + vec_to_string(v) +
               " off the root lattice");
          break;
        }
      for (auto [a, b] : edges(p)) {
        if (!is_root_parallel(rs, p.vertices[a] - p.vertices[b])) {
          fail("monomial " + name + ": edge " + vec_to_string(p.vertices[a]) + "-" +
               vec_to_string(p.vertices[b]) + " not parallel to a root");
          break;
        }
      }
      if (!shapes.insert(p.vertices).second)
        fail("degree " + vec_to_string(nu_q) + ": monomial " + name +
             " duplicates another polytope (injectivity)");
    }
  }

  std::vector<Weight> battery;
  {
    std::vector<long long> c(rs.rank, 0);
    for (;;) {
      battery.push_back(Weight(c.begin(), c.end()));
      int i = 0;
      while (i < rs.rank && ++c[i] > coords_bound) c[i++] = 0;
      if (i == rs.rank) break;
    }
  }
  for (const auto& lambda : battery) {
    ++rep.characters_checked;
    auto mv_ch = character(t, rs, lambda);
    auto fr_ch = FreudenthalTable(rs, lambda).character();
    if (mv_ch != fr_ch)
      fail("character mismatch vs Freudenthal at lambda = " + weight_to_string(lambda));
  }

  if (with_tensor) {
    std::vector<Weight> tb;
    std::vector<long long> c(rs.rank, 0);
    for (;;) {
      tb.push_back(Weight(c.begin(), c.end()));
      int i = 0;
      while (i < rs.rank && ++c[i] > tensor_coords_bound) c[i++] = 0;
      if (i == rs.rank) break;
    }
    for (const auto& lambda : tb)
      for (const auto& mu : tb) {
        ++rep.tensor_products_checked;
        for (const auto& nu : weights_below(rs, rs.add(lambda, mu))) {
          long long got = tensor_multiplicity(t, rs, lambda, mu, nu);
          long long want = klimyk_tensor_multiplicity(rs, lambda, mu, nu);
          if (got != want) {
            std::ostringstream os;
            os << "tensor mismatch vs Klimyk at lambda = " << weight_to_string(lambda)
               << ", mu = " << weight_to_string(mu) << ", nu = " << weight_to_string(nu)
               << ": " << got << " vs " << want;
            fail(os.str());
          }
        }
      }
  }
  return rep;
}

}  // namespace mv
