#include "mv/calculus.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mv {

namespace {

// Linear conditions "support of the monomial polytope <= bound" expressing
// containment of P_phi + lambda in an intersection of weylgon regions.  The
// support function of a Minkowski sum is the sum of the factors' supports,
// so each monomial is tested without building its polytope.
struct Oracle {
  std::vector<VecQ> normals;
  std::vector<Rat> bounds;
  std::vector<std::vector<Rat>> gen_support;  // [generator][condition]

  void add_region(const Polytope& region, const VecQ& shift) {
    auto add = [&](const VecZ& n, const Rat& b) {
      VecQ nn(n.size());
      Rat shift_dot(0);
      for (size_t i = 0; i < n.size(); ++i) {
        nn[i] = Rat(n[i]);
        shift_dot += nn[i] * shift[i];
      }
      normals.push_back(nn);
      bounds.push_back(b - shift_dot);
    };
    for (const auto& f : region.facets) add(f.normal, Rat(f.offset));
    for (const auto& e : region.hull_eqs) {
      add(e.normal, Rat(e.offset));
      VecZ neg(e.normal.size());
      for (size_t i = 0; i < e.normal.size(); ++i) neg[i] = -e.normal[i];
      add(neg, Rat(-e.offset));
    }
  }

  void finalize(const GeneratorTable& t) {
    gen_support.assign(t.generators.size(), {});
    for (size_t g = 0; g < t.generators.size(); ++g) {
      gen_support[g].reserve(normals.size());
      for (const auto& n : normals)
        gen_support[g].push_back(support_value(t.generators[g].polytope, n));
    }
  }
};

// Bounded DFS over exponent vectors with the running support accumulated.
// Exponents are bounded coordinatewise by the remaining degree.
struct Enumerator {
  const GeneratorTable& t;
  const Oracle* oracle = nullptr;  // may be null (pure enumeration)
  std::vector<long long> target;  // -nu, all >= 0
  std::vector<Rat> acc;
  Monomial current;
  uint32_t support = 0;

  // callback(monomial, contained)
  std::function<void(const Monomial&, bool)> emit;

  void run() {
    acc.assign(oracle ? oracle->normals.size() : 0, Rat(0));
    descend(0, target);
  }

  void descend(size_t g, std::vector<long long> rem) {
    bool done = true;
    for (auto r : rem) done &= (r == 0);
    if (done) {  // adding factors only lowers the degree, so emit and stop
      bool inside = true;
      if (oracle)
        for (size_t c = 0; c < acc.size() && inside; ++c)
          inside = (acc[c] <= oracle->bounds[c]);
      emit(current, inside);
      return;
    }
    if (g == t.generators.size()) return;
    const auto& deg = t.generators[g].degree;
    long long emax = -1;  // unbounded until a negative coordinate binds
    for (size_t k = 0; k < deg.size(); ++k) {
      long long d = (long long)deg[k].get_si();
      if (d < 0) {
        long long cap = rem[k] / (-d);
        emax = emax < 0 ? cap : std::min(emax, cap);
      } else if (d == 0) {
        continue;
      }
    }
    if (emax < 0) emax = 0;
    // e = 0 branch
    descend(g + 1, rem);
    if (emax == 0) return;
    if (t.adj[g] & support) return;  // incompatible with the chosen support
    support |= (1u << g);
    current.powers.push_back({(int)g, 0});
    std::vector<long long> r = rem;
    for (long long e = 1; e <= emax; ++e) {
      bool ok = true;
      for (size_t k = 0; k < deg.size(); ++k) {
        r[k] += (long long)deg[k].get_si();
        if (r[k] < 0) ok = false;
      }
      if (!ok) break;
      current.powers.back().second = e;
      if (oracle)
        for (size_t c = 0; c < acc.size(); ++c) acc[c] += oracle->gen_support[(int)g][c];
      descend(g + 1, r);
    }
    if (oracle) {
      long long e = current.powers.back().second;
      for (size_t c = 0; c < acc.size(); ++c)
        acc[c] -= Rat((long)e) * oracle->gen_support[(int)g][c];
    }
    current.powers.pop_back();
    support &= ~(1u << g);
  }
};

std::vector<long long> degree_target(const GeneratorTable& t, const VecQ& nu) {
  if (!is_integral(nu))
    throw std::domain_error("degree outside the root lattice");
  std::vector<long long> target(nu.size());
  for (size_t k = 0; k < nu.size(); ++k) {
    long long v = (long long)nu[k].get_num().get_si();
    if (v > 0) throw std::domain_error("degree has a positive root coordinate");
    target[k] = -v;
  }
  return target;
}

CountDetail count_at_degree(const GeneratorTable& t, const VecQ& nu, const Oracle* oracle,
                            bool keep_monomials) {
  CountDetail out;
  Enumerator en{t, oracle, degree_target(t, nu)};
  en.emit = [&](const Monomial& m, bool inside) {
    ++out.total;
    if (inside) ++out.contained;
    if (keep_monomials) out.monomials.push_back({m, inside});
  };
  en.run();
  return out;
}

bool degree_in_lambda_minus(const RootSystem& rs, const Weight& lambda, const Weight& nu,
                            VecQ& diff_root) {
  diff_root = rs.fund_to_root(rs.sub(nu, lambda));
  if (!is_integral(diff_root)) return false;
  for (const auto& c : diff_root)
    if (c > 0) return false;
  return true;
}

}  // namespace

std::vector<Monomial> admissible_monomials(const GeneratorTable& t, const VecQ& nu) {
  std::vector<Monomial> out;
  Enumerator en{t, nullptr, degree_target(t, nu)};
  en.emit = [&](const Monomial& m, bool) { out.push_back(m); };
  en.run();
  return out;
}

Polytope monomial_polytope(const GeneratorTable& t, const Monomial& m) {
  if (!monomial_admissible(t, m))
    throw std::domain_error("monomial_polytope: inadmissible monomial " +
                            monomial_name(t, m));
  int d = (int)t.generators[0].degree.size();
  Polytope p = point_polytope(VecQ(d, Rat(0)));
  for (auto [g, e] : m.powers) {
    // e-fold Minkowski power of a convex set is its dilation by e
    std::vector<VecQ> scaled;
    for (const auto& v : t.generators[g].polytope.vertices)
      scaled.push_back(Rat((long)e) * v);
    p = minkowski_sum(p, convex_hull(scaled));
  }
  return p;
}

MVPolytopeSet mv_polytopes(const GeneratorTable& t, const RootSystem& rs, const VecQ& nu) {
  MVPolytopeSet set;
  set.degree = to_vecz(nu);
  std::set<std::vector<VecQ>> seen;
  for (const auto& m : admissible_monomials(t, nu)) {
    Polytope p = monomial_polytope(t, m);
    if (!is_zero(highest_vertex(rs, p)) || lowest_vertex(rs, p) != nu)
      throw std::logic_error("mv_polytopes: monomial " + monomial_name(t, m) +
                             " violates the grading (table bug)");
    if (!seen.insert(p.vertices).second)
      throw std::logic_error("mv_polytopes: monomial " + monomial_name(t, m) +
                             " duplicates another polytope of this degree (table bug)");
    set.entries.push_back({m, std::move(p)});
  }
  return set;
}

Polytope weylgon(const RootSystem& rs, const Weight& lambda) {
  std::vector<VecQ> pts;
  for (const auto& w : weyl_orbit(rs, lambda)) pts.push_back(rs.fund_to_root(w));
  return convex_hull(pts);
}

CountDetail weight_multiplicity_detail(const GeneratorTable& t, const RootSystem& rs,
                                       const Weight& lambda, const Weight& nu) {
  if (!rs.is_dominant(lambda))
    throw std::domain_error("weight_multiplicity: lambda must be dominant");
  VecQ deg;
  if (!degree_in_lambda_minus(rs, lambda, nu, deg)) return {};
  Oracle oracle;
  oracle.add_region(weylgon(rs, lambda), rs.fund_to_root(lambda));
  oracle.finalize(t);
  return count_at_degree(t, deg, &oracle, true);
}

long long weight_multiplicity(const GeneratorTable& t, const RootSystem& rs,
                              const Weight& lambda, const Weight& nu) {
  return weight_multiplicity_detail(t, rs, lambda, nu).contained;
}

std::map<Weight, long long> character(const GeneratorTable& t, const RootSystem& rs,
                                      const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw std::domain_error("character: lambda must be dominant");
  Oracle oracle;
  VecQ lambda_root = rs.fund_to_root(lambda);
  oracle.add_region(weylgon(rs, lambda), lambda_root);
  oracle.finalize(t);

  std::map<Weight, long long> ch;
  Weight low = rs.antidominant_representative(lambda);
  VecQ box = rs.fund_to_root(rs.sub(lambda, low));
  std::vector<long long> bound(rs.rank);
  for (int i = 0; i < rs.rank; ++i) bound[i] = (long long)box[i].get_num().get_si();
  std::vector<long long> c(rs.rank, 0);
  for (;;) {
    VecQ deg(rs.rank);
    for (int i = 0; i < rs.rank; ++i) deg[i] = Rat(-(long)c[i]);
    CountDetail d = count_at_degree(t, deg, &oracle, false);
    if (d.contained > 0) {
      VecQ nu_root = lambda_root + deg;
      ch[rs.root_to_fund(nu_root)] = d.contained;
    }
    int i = 0;
    while (i < rs.rank && ++c[i] > bound[i]) c[i++] = 0;
    if (i == rs.rank) break;
  }
  return ch;
}

CountDetail tensor_multiplicity_detail(const GeneratorTable& t, const RootSystem& rs,
                                       const Weight& lambda, const Weight& mu,
                                       const Weight& nu) {
  if (!rs.is_dominant(lambda) || !rs.is_dominant(mu) || !rs.is_dominant(nu))
    throw std::domain_error("tensor_multiplicity: weights must be dominant");
  VecQ deg;
  if (!degree_in_lambda_minus(rs, rs.add(lambda, mu), nu, deg)) return {};
  Oracle oracle;
  VecQ lambda_root = rs.fund_to_root(lambda);
  oracle.add_region(weylgon(rs, lambda), lambda_root);
  // weylgon(-mu) + nu, with the lambda shift folded in the same way
  Polytope wm = translate(weylgon(rs, rs.neg(mu)), rs.fund_to_root(nu));
  oracle.add_region(wm, lambda_root);
  oracle.finalize(t);
  return count_at_degree(t, deg, &oracle, true);
}

long long tensor_multiplicity(const GeneratorTable& t, const RootSystem& rs,
                              const Weight& lambda, const Weight& mu, const Weight& nu) {
  return tensor_multiplicity_detail(t, rs, lambda, mu, nu).contained;
}

std::map<Weight, long long> tensor_decompose(const GeneratorTable& t, const RootSystem& rs,
                                             const Weight& lambda, const Weight& mu) {
  std::map<Weight, long long> dec;
  for (const auto& nu : weights_below(rs, rs.add(lambda, mu))) {
    long long n = tensor_multiplicity(t, rs, lambda, mu, nu);
    if (n > 0) dec[nu] = n;
  }
  return dec;
}

Theorem3Result theorem3_check(const GeneratorTable& t, const RootSystem& rs,
                              const Weight& lambda, const Weight& mu, const VecQ& delta) {
  if (!rs.is_dominant(lambda) || !rs.is_dominant(mu))
    throw std::domain_error("theorem3_check: lambda, mu must be dominant");
  if (!is_integral(delta))
    throw std::domain_error("theorem3_check: delta must be integral in the root basis");
  for (const auto& c : delta)
    if (c < 0) throw std::domain_error("theorem3_check: delta must be >= 0");
  Weight delta_w = rs.root_to_fund(delta);
  Weight top = rs.sub(rs.add(lambda, mu), delta_w);
  if (!rs.is_dominant(top))
    throw std::domain_error("theorem3_check: lambda+mu-delta must be dominant");
  Theorem3Result r;
  r.tensor_mult = tensor_multiplicity(t, rs, lambda, mu, top);
  r.weight_mult = weight_multiplicity(t, rs, lambda, rs.sub(lambda, delta_w));
  r.kostant = kostant_partition_count(rs, delta);
  if (!(r.tensor_mult <= r.weight_mult && r.weight_mult <= r.kostant)) {
    std::ostringstream os;
    os << "theorem3_check: chain violated: " << r.tensor_mult << " <= " << r.weight_mult
       << " <= " << r.kostant << " fails";
    throw std::logic_error(os.str());
  }
  return r;
}

}  // namespace mv
