#ifndef MV_RAT_HPP
#define MV_RAT_HPP

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mv {

using Int = mpz_class;
using Rat = mpq_class;

// Column vector of exact rationals; dimension 1..3 throughout this library.
using VecQ = std::vector<Rat>;
// Integer vector (root-lattice points, facet normals).
using VecZ = std::vector<Int>;

inline VecQ to_vecq(const VecZ& v) {
  VecQ r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline bool is_integral(const VecQ& v) {
  for (const auto& q : v)
    if (!is_integral(q)) return false;
  return true;
}

inline VecZ to_vecz(const VecQ& v) {
  VecZ r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i])) throw std::domain_error("to_vecz: non-integral coordinate");
    r[i] = v[i].get_num();
  }
  return r;
}

inline VecQ operator+(const VecQ& a, const VecQ& b) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline VecQ operator-(const VecQ& a, const VecQ& b) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline VecQ operator-(const VecQ& a) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline VecQ operator*(const Rat& c, const VecQ& a) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const VecQ& v) {
  for (const auto& q : v)
    if (q != 0) return false;
  return true;
}

// Lexicographic order; the canonical vertex order everywhere.
inline bool lex_less(const VecQ& a, const VecQ& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

// "p/q" for proper fractions, plain "p" for integers; parse accepts both.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace mv

#endif
