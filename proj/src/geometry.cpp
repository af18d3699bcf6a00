#include "mv/geometry.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mv {

namespace {

using ll = long long;
using I128 = __int128;

// The wrapping kernel works on denominator-cleared integer coordinates.
// Coordinates in this library are tiny (root-lattice points of height <= ~20,
// denominators <= 12); the bound keeps every predicate below 2^90 in __int128.
constexpr ll kCoordBound = 1LL << 13;

struct IntPoints {
  std::vector<std::array<ll, 3>> p;  // padded to 3 coords with zeros
  int dim;
  Int scale;
};

IntPoints clear_denominators(const std::vector<VecQ>& pts) {
  IntPoints out;
  out.dim = (int)pts[0].size();
  Int l(1);
  for (const auto& v : pts)
    for (const auto& q : v) {
      Int d = q.get_den();
      l = l / gcd(l, d) * d;
    }
  out.scale = l;
  out.p.reserve(pts.size());
  for (const auto& v : pts) {
    std::array<ll, 3> a{0, 0, 0};
    for (int i = 0; i < out.dim; ++i) {
      Int c = v[i].get_num() * (l / v[i].get_den());
      if (cmp(abs(c), (long)kCoordBound) > 0)
        throw std::logic_error("hull kernel: coordinate bound exceeded");
      a[i] = c.get_si();
    }
    out.p.push_back(a);
  }
  return out;
}

std::string tuple_str(const VecQ& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ")";
  return os.str();
}

// --- exact integer predicates ----------------------------------------------

I128 cross2(ll ax, ll ay, ll bx, ll by) { return (I128)ax * by - (I128)ay * bx; }

std::array<I128, 3> cross3(const std::array<ll, 3>& a, const std::array<ll, 3>& b) {
  return {(I128)a[1] * b[2] - (I128)a[2] * b[1],
          (I128)a[2] * b[0] - (I128)a[0] * b[2],
          (I128)a[0] * b[1] - (I128)a[1] * b[0]};
}

std::array<ll, 3> diff(const std::array<ll, 3>& a, const std::array<ll, 3>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

I128 dot3(const std::array<I128, 3>& n, const std::array<ll, 3>& x) {
  return n[0] * x[0] + n[1] * x[1] + n[2] * x[2];
}

int sgn(I128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Int i128_to_mpz(I128 v) {
  bool neg = v < 0;
  if (neg) v = -v;
  Int hi((unsigned long)(unsigned long long)(v >> 64));
  Int lo((unsigned long)(unsigned long long)(v & 0xFFFFFFFFFFFFFFFFULL));
  Int m = (hi << 64) + lo;
  return neg ? Int(-m) : m;
}

// --- canonical halfspace tuples ---------------------------------------------

Halfspace primitive_tuple(const std::vector<Rat>& normal, const Rat& offset,
                          bool canonical_sign) {
  size_t d = normal.size();
  Int l(1);
  for (const auto& q : normal) {
    Int den = q.get_den();
    l = l / gcd(l, den) * den;
  }
  {
    Int den = offset.get_den();
    l = l / gcd(l, den) * den;
  }
  VecZ n(d);
  Int g(0);
  for (size_t i = 0; i < d; ++i) {
    n[i] = normal[i].get_num() * (l / normal[i].get_den());
    g = gcd(g, n[i]);
  }
  Int b = offset.get_num() * (l / offset.get_den());
  g = gcd(g, b);
  if (g == 0) throw std::invalid_argument("halfspace: zero normal");
  for (auto& c : n) c /= g;
  b /= g;
  if (canonical_sign) {
    int s = 0;
    for (const auto& c : n)
      if (c != 0) { s = (c > 0) ? 1 : -1; break; }
    if (s < 0) {
      for (auto& c : n) c = -c;
      b = -b;
    }
  }
  return Halfspace{n, b};
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

// --- affine hull analysis ----------------------------------------------------

struct AffineHull {
  int rank = 0;
  std::vector<int> pivots;           // columns giving an injective projection
  std::vector<Halfspace> equations;  // n . x == b cutting out the hull
};

AffineHull affine_hull(const std::vector<VecQ>& pts) {
  int d = (int)pts[0].size();
  std::vector<VecQ> rows;
  for (size_t i = 1; i < pts.size(); ++i) rows.push_back(pts[i] - pts[0]);
  AffineHull ah;
  int r = 0;
  for (int c = 0; c < d && r < (int)rows.size(); ++c) {
    int p = -1;
    for (int i = r; i < (int)rows.size(); ++i)
      if (rows[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = rows[r][c];
    for (int j = 0; j < d; ++j) rows[r][j] /= inv;
    for (int i = 0; i < (int)rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (int j = 0; j < d; ++j) rows[i][j] -= f * rows[r][j];
    }
    ah.pivots.push_back(c);
    ++r;
  }
  ah.rank = r;
  std::vector<bool> is_pivot(d, false);
  for (int c : ah.pivots) is_pivot[c] = true;
  for (int f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> n(d, Rat(0));
    n[f] = 1;
    for (int k = 0; k < r; ++k) n[ah.pivots[k]] = -rows[k][f];
    Rat b(0);
    for (int j = 0; j < d; ++j) b += n[j] * pts[0][j];
    ah.equations.push_back(primitive_tuple(n, b, true));
  }
  std::sort(ah.equations.begin(), ah.equations.end(), halfspace_less);
  return ah;
}

// --- 2D monotone chain --------------------------------------------------------

// CCW hull cycle as indices into pts; strict corners only.
std::vector<int> hull2d(const std::vector<std::array<ll, 2>>& pts) {
  int n = (int)pts.size();
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] < pts[b]; });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](int a, int b) { return pts[a] == pts[b]; }),
            idx.end());
  n = (int)idx.size();
  if (n == 1) return {idx[0]};
  auto cr = [&](int o, int a, int b) {
    return cross2(pts[a][0] - pts[o][0], pts[a][1] - pts[o][1],
                  pts[b][0] - pts[o][0], pts[b][1] - pts[o][1]);
  };
  std::vector<int> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cr(h[k - 2], h[k - 1], idx[i]) <= 0) --k;
    h[k++] = idx[i];
  }
  for (int i = n - 2, lo = k + 1; i >= 0; --i) {
    while (k >= lo && cr(h[k - 2], h[k - 1], idx[i]) <= 0) --k;
    h[k++] = idx[i];
  }
  h.resize(k - 1);
  return h;
}

// --- 3D gift wrapping ----------------------------------------------------------

struct Facet3 {
  std::array<I128, 3> normal;  // outward
  std::vector<int> ring;       // CCW as seen from outside
};

// Around the supporting directed edge (u,v) of the plane with outward normal
// n, find a point reached at the smallest fold angle rotating into the body.
// Points on the current plane are ignored.
int pivot_edge(const std::vector<std::array<ll, 3>>& P, int u, int v,
               const std::array<I128, 3>& n) {
  auto e = diff(P[v], P[u]);
  std::array<I128, 3> m{e[1] * n[2] - e[2] * n[1], e[2] * n[0] - e[0] * n[2],
                        e[0] * n[1] - e[1] * n[0]};
  int best = -1;
  I128 bs = 0, bh = 0;
  for (int i = 0; i < (int)P.size(); ++i) {
    auto d = diff(P[i], P[u]);
    I128 h = -dot3(n, d);  // depth below the plane
    if (h <= 0) continue;
    I128 s = dot3(m, d);  // lateral position in the fold frame
    if (best < 0 || s * bh - h * bs > 0) {
      best = i;
      bs = s;
      bh = h;
    }
  }
  return best;
}

std::vector<Facet3> wrap3(const std::vector<std::array<ll, 3>>& P) {
  int n = (int)P.size();
  int v0 = 0;
  for (int i = 1; i < n; ++i)
    if (P[i] < P[v0]) v0 = i;

  // Bootstrap: pivot around the virtual vertical line through v0, starting
  // from the supporting plane { x = P[v0].x }.  All points have h >= 0 there
  // because v0 is lex-min.
  int p1 = -1;
  {
    I128 bs = 0, bh = 0;
    for (int i = 0; i < n; ++i) {
      auto d = diff(P[i], P[v0]);
      if (d[0] == 0 && d[1] == 0) continue;  // on the virtual line
      I128 h = d[0];
      I128 s = -d[1];
      if (h < 0 || (h == 0 && s >= 0)) throw std::logic_error("wrap3: lex-min violated");
      if (h == 0) {  // in the bounding plane itself: fold angle pi, last resort
        if (p1 < 0) { p1 = i; bs = s; bh = h; }
        continue;
      }
      if (p1 < 0 || bh == 0 || s * bh - h * bs > 0) { p1 = i; bs = s; bh = h; }
    }
  }
  if (p1 < 0) throw std::logic_error("wrap3: input not full-dimensional");

  // Supporting plane through v0, p1 and the virtual direction e_z.
  std::array<I128, 3> n1 = cross3(std::array<ll, 3>{0, 0, 1}, diff(P[p1], P[v0]));
  {
    int s_any = 0;
    for (int i = 0; i < n; ++i) {
      int s = sgn(dot3(n1, diff(P[i], P[v0])));
      if (s != 0) {
        if (s_any != 0 && s != s_any) throw std::logic_error("wrap3: bootstrap plane not supporting");
        s_any = s;
      }
    }
    if (s_any == 0) throw std::logic_error("wrap3: input not full-dimensional");
    if (s_any > 0)
      for (auto& c : n1) c = -c;
  }

  // Points lying on the bootstrap plane; either they span it (it is already a
  // facet plane) or they are collinear and contain a genuine hull edge.
  std::vector<int> on1;
  for (int i = 0; i < n; ++i)
    if (dot3(n1, diff(P[i], P[v0])) == 0) on1.push_back(i);

  auto facet_from_plane = [&](int base, std::array<I128, 3> N) -> Facet3 {
    std::vector<int> on;
    for (int i = 0; i < n; ++i)
      if (dot3(N, diff(P[i], P[base])) == 0) on.push_back(i);
    I128 a0 = N[0] < 0 ? -N[0] : N[0], a1 = N[1] < 0 ? -N[1] : N[1],
         a2 = N[2] < 0 ? -N[2] : N[2];
    int k = 0;
    if (a1 > a0) k = 1;
    if (a2 > (k == 1 ? a1 : a0)) k = 2;
    int i1 = (k + 1) % 3, i2 = (k + 2) % 3;
    std::vector<std::array<ll, 2>> proj;
    proj.reserve(on.size());
    for (int i : on) proj.push_back({P[i][i1], P[i][i2]});
    std::vector<int> ring2 = hull2d(proj);
    Facet3 f;
    f.normal = N;
    for (int r : ring2) f.ring.push_back(on[r]);
    if (N[k] < 0) std::reverse(f.ring.begin(), f.ring.end());
    return f;
  };

  std::vector<Facet3> facets;
  std::map<std::vector<Int>, int> plane_key;
  std::map<std::pair<int, int>, bool> edge_owned;
  std::vector<std::pair<std::pair<int, int>, int>> queue;  // directed edge, facet

  auto add_facet = [&](int base, const std::array<I128, 3>& N) {
    std::vector<Int> key(4);
    for (int c = 0; c < 3; ++c) key[c] = i128_to_mpz(N[c]);
    key[3] = key[0] * (long)P[base][0] + key[1] * (long)P[base][1] + key[2] * (long)P[base][2];
    Int g(0);
    for (const auto& c : key) g = gcd(g, c);
    std::vector<Int> k2 = key;
    for (auto& c : k2) c /= g;
    if (plane_key.count(k2)) return;
    Facet3 f = facet_from_plane(base, N);
    int idx = (int)facets.size();
    facets.push_back(f);
    plane_key[k2] = idx;
    int m = (int)f.ring.size();
    for (int i = 0; i < m; ++i) {
      int a = f.ring[i], b = f.ring[(i + 1) % m];
      edge_owned[{a, b}] = true;
      queue.push_back({{a, b}, idx});
    }
  };

  // Initial facet.
  {
    bool collinear = true;
    auto t = diff(P[on1[1]], P[on1[0]]);
    for (size_t i = 2; i < on1.size() && collinear; ++i) {
      auto u = cross3(t, diff(P[on1[i]], P[on1[0]]));
      collinear = (u[0] == 0 && u[1] == 0 && u[2] == 0);
    }
    if (!collinear) {
      add_facet(v0, n1);
    } else {
      // extremes along the line give a hull edge; fold once to a real facet
      int lo = on1[0], hi = on1[0];
      for (int i : on1) {
        I128 s = (I128)t[0] * (P[i][0] - P[lo][0]) + (I128)t[1] * (P[i][1] - P[lo][1]) +
                 (I128)t[2] * (P[i][2] - P[lo][2]);
        if (s < 0) lo = i;
        s = (I128)t[0] * (P[i][0] - P[hi][0]) + (I128)t[1] * (P[i][1] - P[hi][1]) +
            (I128)t[2] * (P[i][2] - P[hi][2]);
        if (s > 0) hi = i;
      }
      int w = pivot_edge(P, lo, hi, n1);
      if (w < 0) throw std::logic_error("wrap3: input not full-dimensional");
      auto N = cross3(diff(P[hi], P[lo]), diff(P[w], P[lo]));
      int s_any = 0;
      for (int i = 0; i < n && s_any == 0; ++i) s_any = sgn(dot3(N, diff(P[i], P[lo])));
      if (s_any > 0)
        for (auto& c : N) c = -c;
      add_facet(lo, N);
    }
  }

  for (size_t qi = 0; qi < queue.size(); ++qi) {
    auto [ab, fidx] = queue[qi];
    auto [a, b] = ab;
    if (edge_owned.count({b, a})) continue;
    int w = pivot_edge(P, a, b, facets[fidx].normal);
    if (w < 0) throw std::logic_error("wrap3: open surface");
    auto N = cross3(diff(P[b], P[a]), diff(P[w], P[a]));
    int s_any = 0;
    for (int i = 0; i < n && s_any == 0; ++i) s_any = sgn(dot3(N, diff(P[i], P[a])));
    if (s_any > 0)
      for (auto& c : N) c = -c;
    add_facet(a, N);
  }
  return facets;
}

}  // namespace

std::string vec_to_string(const VecQ& v) { return tuple_str(v); }

Halfspace make_halfspace(const VecQ& normal, const Rat& offset) {
  std::vector<Rat> n(normal.begin(), normal.end());
  return primitive_tuple(n, offset, false);
}

Polytope convex_hull(const std::vector<VecQ>& points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
  int d = (int)points[0].size();
  if (d < 1 || d > 3) throw std::invalid_argument("convex_hull: dimension must be 1..3");
  for (const auto& p : points)
    if ((int)p.size() != d) throw std::invalid_argument("convex_hull: mixed dimensions");

  std::vector<VecQ> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  AffineHull ah = affine_hull(pts);
  Polytope poly;
  poly.dim_ambient = d;
  poly.dim_affine = ah.rank;
  poly.hull_eqs = ah.equations;

  if (ah.rank == 0) {
    poly.vertices = {pts[0]};
    return poly;
  }

  IntPoints ip = clear_denominators(pts);
  Rat D(ip.scale);

  // Facet data is computed on scaled integer coordinates; rescaling the
  // normal by D and re-primitivizing restores the inequality on originals.
  auto mk_facet = [&](const std::vector<Rat>& n_scaled, const Rat& b_scaled) {
    std::vector<Rat> nn(d);
    for (int i = 0; i < d; ++i) nn[i] = n_scaled[i] * D;
    return primitive_tuple(nn, b_scaled, false);
  };

  std::vector<VecQ> verts;
  std::vector<std::vector<int>> rings_local;

  if (ah.rank == 1) {
    int j = ah.pivots[0];
    int lo = 0, hi = 0;
    for (int i = 1; i < (int)pts.size(); ++i) {
      if (pts[i][j] < pts[lo][j]) lo = i;
      if (pts[i][j] > pts[hi][j]) hi = i;
    }
    verts = {pts[lo], pts[hi]};
    std::vector<Rat> np(d, Rat(0)), nm(d, Rat(0));
    np[j] = 1;
    nm[j] = -1;
    poly.facets.push_back(mk_facet(np, Rat((long)ip.p[hi][j])));
    poly.facets.push_back(mk_facet(nm, Rat((long)-ip.p[lo][j])));
  } else if (ah.rank == 2) {
    int j0 = ah.pivots[0], j1 = ah.pivots[1];
    std::vector<std::array<ll, 2>> proj;
    proj.reserve(pts.size());
    for (const auto& a : ip.p) proj.push_back({a[j0], a[j1]});
    std::vector<int> ring = hull2d(proj);
    std::vector<int> ring_local;
    for (int i : ring) {
      ring_local.push_back((int)verts.size());
      verts.push_back(pts[i]);
    }
    int m = (int)ring.size();
    for (int t = 0; t < m; ++t) {
      int u = ring[t], v = ring[(t + 1) % m];
      ll tx = proj[v][0] - proj[u][0], ty = proj[v][1] - proj[u][1];
      std::vector<Rat> nn(d, Rat(0));
      nn[j0] = Rat((long)ty);
      nn[j1] = Rat((long)-tx);
      Rat b = Rat((long)ty) * Rat((long)proj[u][0]) - Rat((long)tx) * Rat((long)proj[u][1]);
      poly.facets.push_back(mk_facet(nn, b));
    }
    rings_local.push_back(ring_local);
  } else {
    std::vector<Facet3> fs = wrap3(ip.p);
    std::map<int, int> vmap;
    for (const auto& f : fs) {
      std::vector<int> rl;
      for (int i : f.ring) {
        auto it = vmap.find(i);
        if (it == vmap.end()) {
          it = vmap.emplace(i, (int)verts.size()).first;
          verts.push_back(pts[i]);
        }
        rl.push_back(it->second);
      }
      rings_local.push_back(rl);
      std::vector<Rat> nn(3);
      Rat b(0);
      for (int c = 0; c < 3; ++c) nn[c] = Rat(i128_to_mpz(f.normal[c]));
      for (int c = 0; c < 3; ++c) b += nn[c] * Rat((long)ip.p[f.ring[0]][c]);
      poly.facets.push_back(mk_facet(nn, b));
    }
  }

  std::vector<int> order(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(verts[a], verts[b]); });
  std::vector<int> inv(verts.size());
  for (size_t i = 0; i < order.size(); ++i) inv[order[i]] = (int)i;
  std::vector<VecQ> sorted;
  sorted.reserve(verts.size());
  for (int i : order) sorted.push_back(verts[i]);
  poly.vertices = std::move(sorted);
  for (auto& r : rings_local)
    for (auto& i : r) i = inv[i];
  poly.rings = std::move(rings_local);

  std::sort(poly.facets.begin(), poly.facets.end(), halfspace_less);
  poly.facets.erase(std::unique(poly.facets.begin(), poly.facets.end()),
                    poly.facets.end());
  return poly;
}

Polytope point_polytope(const VecQ& p) { return convex_hull({p}); }

Polytope segment(const VecQ& a, const VecQ& b) { return convex_hull({a, b}); }

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.dim_ambient != q.dim_ambient)
    throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::vector<VecQ> sums;
  sums.reserve(p.vertices.size() * q.vertices.size());
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) sums.push_back(a + b);
  return convex_hull(sums);
}

Polytope translate(const Polytope& p, const VecQ& v) {
  if ((int)v.size() != p.dim_ambient)
    throw std::invalid_argument("translate: dimension mismatch");
  Polytope r = p;
  for (auto& x : r.vertices) x = x + v;
  auto shifted = [&](const Halfspace& h, bool canonical_sign) {
    Rat dot(0);
    std::vector<Rat> n(p.dim_ambient);
    for (int i = 0; i < p.dim_ambient; ++i) {
      n[i] = Rat(h.normal[i]);
      dot += n[i] * v[i];
    }
    return primitive_tuple(n, Rat(h.offset) + dot, canonical_sign);
  };
  for (auto& h : r.facets) h = shifted(h, false);
  for (auto& h : r.hull_eqs) h = shifted(h, true);
  return r;
}

bool contains_point(const Polytope& p, const VecQ& x) {
  if ((int)x.size() != p.dim_ambient)
    throw std::invalid_argument("contains_point: dimension mismatch");
  if (p.dim_affine == 0) return x == p.vertices[0];
  for (const auto& e : p.hull_eqs) {
    Rat s(0);
    for (int i = 0; i < p.dim_ambient; ++i) s += Rat(e.normal[i]) * x[i];
    if (s != Rat(e.offset)) return false;
  }
  for (const auto& h : p.facets) {
    Rat s(0);
    for (int i = 0; i < p.dim_ambient; ++i) s += Rat(h.normal[i]) * x[i];
    if (s > Rat(h.offset)) return false;
  }
  return true;
}

bool contains(const Polytope& outer, const Polytope& inner) {
  if (outer.dim_ambient != inner.dim_ambient)
    throw std::invalid_argument("contains: dimension mismatch");
  for (const auto& v : inner.vertices)
    if (!contains_point(outer, v)) return false;
  return true;
}

std::vector<std::pair<int, int>> edges(const Polytope& p) {
  std::set<std::pair<int, int>> es;
  if (p.dim_affine == 1) {
    es.insert({0, 1});
  } else if (p.dim_affine >= 2) {
    for (const auto& r : p.rings) {
      int m = (int)r.size();
      for (int i = 0; i < m; ++i) {
        int a = r[i], b = r[(i + 1) % m];
        es.insert({std::min(a, b), std::max(a, b)});
      }
    }
  }
  return {es.begin(), es.end()};
}

std::optional<Polytope> clip(const Polytope& p, const Halfspace& h) {
  if ((int)h.normal.size() != p.dim_ambient)
    throw std::invalid_argument("clip: dimension mismatch");
  auto value = [&](const VecQ& x) -> Rat {
    Rat s(0);
    for (int i = 0; i < p.dim_ambient; ++i) s += Rat(h.normal[i]) * x[i];
    return s - Rat(h.offset);
  };
  std::vector<Rat> vals;
  vals.reserve(p.vertices.size());
  bool any_in = false, any_out = false;
  for (const auto& v : p.vertices) {
    vals.push_back(value(v));
    (vals.back() <= 0 ? any_in : any_out) = true;
  }
  if (!any_out) return p;
  if (!any_in) return std::nullopt;
  std::vector<VecQ> keep;
  for (size_t i = 0; i < p.vertices.size(); ++i)
    if (vals[i] <= 0) keep.push_back(p.vertices[i]);
  for (auto [a, b] : edges(p)) {
    if ((vals[a] < 0 && vals[b] > 0) || (vals[a] > 0 && vals[b] < 0)) {
      Rat t = vals[a] / (vals[a] - vals[b]);
      keep.push_back(p.vertices[a] + t * (p.vertices[b] - p.vertices[a]));
    }
  }
  return convex_hull(keep);
}

std::optional<Polytope> intersect(const Polytope& p, const Polytope& q) {
  if (p.dim_ambient != q.dim_ambient)
    throw std::invalid_argument("intersect: dimension mismatch");
  std::optional<Polytope> r = p;
  for (const auto& e : q.hull_eqs) {
    if (!r) return std::nullopt;
    r = clip(*r, e);
    if (!r) return std::nullopt;
    VecZ neg(e.normal.size());
    for (size_t i = 0; i < e.normal.size(); ++i) neg[i] = -e.normal[i];
    r = clip(*r, Halfspace{neg, -e.offset});
  }
  for (const auto& h : q.facets) {
    if (!r) return std::nullopt;
    r = clip(*r, h);
  }
  return r;
}

Rat volume(const Polytope& p) {
  if (p.dim_affine < p.dim_ambient) return Rat(0);
  if (p.dim_ambient == 1) return p.vertices.back()[0] - p.vertices.front()[0];
  if (p.dim_ambient == 2) {
    const auto& r = p.rings.at(0);
    Rat s(0);
    int m = (int)r.size();
    for (int i = 0; i < m; ++i) {
      const VecQ& a = p.vertices[r[i]];
      const VecQ& b = p.vertices[r[(i + 1) % m]];
      s += a[0] * b[1] - a[1] * b[0];
    }
    return abs(s) / 2;
  }
  const VecQ& o = p.vertices[0];
  Rat s(0);
  for (const auto& ring : p.rings) {
    const VecQ a = p.vertices[ring[0]] - o;
    for (size_t t = 1; t + 1 < ring.size(); ++t) {
      const VecQ b = p.vertices[ring[t]] - o;
      const VecQ c = p.vertices[ring[t + 1]] - o;
      s += a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
    }
  }
  return abs(s) / 6;
}

VecQ extreme_vertex(const Polytope& p, const VecQ& direction) {
  if ((int)direction.size() != p.dim_ambient)
    throw std::invalid_argument("extreme_vertex: dimension mismatch");
  if (is_zero(direction)) throw std::invalid_argument("extreme_vertex: zero direction");
  int best = 0;
  Rat bv(0);
  std::vector<int> ties;
  for (int i = 0; i < (int)p.vertices.size(); ++i) {
    Rat s(0);
    for (int j = 0; j < p.dim_ambient; ++j) s += direction[j] * p.vertices[i][j];
    if (i == 0 || s > bv) {
      best = i;
      bv = s;
      ties.assign(1, i);
    } else if (s == bv) {
      ties.push_back(i);
    }
  }
  if (ties.size() > 1) {
    std::ostringstream os;
    os << "extreme_vertex: tie between";
    for (int i : ties) os << " " << tuple_str(p.vertices[i]);
    throw std::domain_error(os.str());
  }
  return p.vertices[best];
}

Rat support_value(const Polytope& p, const VecQ& normal) {
  Rat best(0);
  for (int i = 0; i < (int)p.vertices.size(); ++i) {
    Rat s(0);
    for (int j = 0; j < p.dim_ambient; ++j) s += normal[j] * p.vertices[i][j];
    if (i == 0 || s > best) best = s;
  }
  return best;
}

}  // namespace mv
