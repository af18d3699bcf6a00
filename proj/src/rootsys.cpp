#include "mv/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mv {

std::string group_name(GroupId g) {
  switch (g) {
    case GroupId::A1: return "A1";
    case GroupId::A2: return "A2";
    case GroupId::C2: return "C2";
    case GroupId::A3: return "A3";
  }
  return "?";
}

std::optional<GroupId> parse_group(const std::string& s) {
  if (s == "A1" || s == "a1") return GroupId::A1;
  if (s == "A2" || s == "a2") return GroupId::A2;
  if (s == "C2" || s == "c2") return GroupId::C2;
  if (s == "A3" || s == "a3") return GroupId::A3;
  return std::nullopt;
}

std::string weight_to_string(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

VecQ RootSystem::fund_to_root(const Weight& w) const {
  if ((int)w.size() != rank) throw std::invalid_argument("fund_to_root: wrong tuple length");
  VecQ r(rank, Rat(0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) r[i] += cartan_inv[i][j] * Rat((long)w[j]);
  return r;
}

bool RootSystem::on_weight_lattice(const VecQ& v) const {
  for (int i = 0; i < rank; ++i) {
    Rat f(0);
    for (int j = 0; j < rank; ++j) f += Rat((long)cartan[i][j]) * v[j];
    if (!is_integral(f)) return false;
  }
  return true;
}

Weight RootSystem::root_to_fund(const VecQ& v) const {
  if ((int)v.size() != rank) throw std::invalid_argument("root_to_fund: wrong tuple length");
  Weight w(rank);
  for (int i = 0; i < rank; ++i) {
    Rat f(0);
    for (int j = 0; j < rank; ++j) f += Rat((long)cartan[i][j]) * v[j];
    if (!is_integral(f))
      throw std::domain_error("root_to_fund: vector lies outside the weight lattice");
    w[i] = (long long)f.get_num().get_si();
  }
  return w;
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (auto c : w)
    if (c < 0) return false;
  return true;
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  // s_i(x) = x - x_i * alpha_i; fund coords of alpha_i are cartan column i.
  Weight r = w;
  for (int k = 0; k < rank; ++k) r[k] -= w[i] * cartan[k][i];
  return r;
}

Weight RootSystem::dominant_representative(const Weight& w) const {
  Weight x = w;
  for (;;) {
    int i = -1;
    for (int k = 0; k < rank; ++k)
      if (x[k] < 0) { i = k; break; }
    if (i < 0) return x;
    x = reflect(x, i);
  }
}

Weight RootSystem::antidominant_representative(const Weight& w) const {
  Weight x = w;
  for (;;) {
    int i = -1;
    for (int k = 0; k < rank; ++k)
      if (x[k] > 0) { i = k; break; }
    if (i < 0) return x;
    x = reflect(x, i);
  }
}

Weight RootSystem::apply(const WeylElement& we, const Weight& w) const {
  VecQ r = fund_to_root(w);
  VecQ s(rank, Rat(0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s[i] += Rat((long)we.mat[i][j]) * r[j];
  return root_to_fund(s);
}

Rat RootSystem::form_root(const VecQ& x, const VecQ& y) const {
  Rat s(0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += x[i] * Rat((long)form[i][j]) * y[j];
  return s;
}

long long RootSystem::height(const VecZ& v) const {
  Int s(0);
  for (const auto& c : v) s += c;
  return (long long)s.get_si();
}

Weight RootSystem::add(const Weight& a, const Weight& b) const {
  Weight r(rank);
  for (int i = 0; i < rank; ++i) r[i] = a[i] + b[i];
  return r;
}

Weight RootSystem::sub(const Weight& a, const Weight& b) const {
  Weight r(rank);
  for (int i = 0; i < rank; ++i) r[i] = a[i] - b[i];
  return r;
}

Weight RootSystem::neg(const Weight& a) const {
  Weight r(rank);
  for (int i = 0; i < rank; ++i) r[i] = -a[i];
  return r;
}

Weight RootSystem::rho() const { return Weight(rank, 1); }
Weight RootSystem::zero() const { return Weight(rank, 0); }

namespace {

std::vector<VecQ> invert(const std::vector<std::vector<long long>>& a) {
  int n = (int)a.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat((long)a[i][j]);
    m[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("singular Cartan matrix");
    std::swap(m[p], m[c]);
    Rat d = m[c][c];
    for (int j = 0; j < 2 * n; ++j) m[c][j] /= d;
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<VecQ> inv(n, VecQ(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

// Close the simple roots under simple reflections; keep the positive ones.
std::vector<VecZ> derive_positive_roots(const RootSystem& rs) {
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> queue;
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<long long> e(rs.rank, 0);
    e[i] = 1;
    queue.push_back(e);
    seen.insert(e);
  }
  for (size_t q = 0; q < queue.size(); ++q) {
    auto v = queue[q];
    for (int i = 0; i < rs.rank; ++i) {
      // s_i on root coords: subtract <v, alpha_i^vee> from coordinate i.
      long long f = 0;
      for (int j = 0; j < rs.rank; ++j) f += rs.cartan[i][j] * v[j];
      auto w = v;
      w[i] -= f;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<VecZ> pos;
  for (const auto& v : queue) {
    bool nonneg = true;
    for (auto c : v) nonneg &= (c >= 0);
    if (!nonneg) continue;
    VecZ z(rs.rank);
    for (int i = 0; i < rs.rank; ++i) z[i] = (long)v[i];
    pos.push_back(z);
  }
  std::sort(pos.begin(), pos.end(), [](const VecZ& a, const VecZ& b) {
    Int ha(0), hb(0);
    for (const auto& c : a) ha += c;
    for (const auto& c : b) hb += c;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return pos;
}

std::vector<WeylElement> derive_weyl_group(const RootSystem& rs) {
  int n = rs.rank;
  auto ident = [&] {
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  };
  // Generator s_i on root coords: row i becomes e_i - cartan row i.
  std::vector<std::vector<std::vector<long long>>> gens;
  for (int i = 0; i < n; ++i) {
    auto m = ident();
    for (int j = 0; j < n; ++j) m[i][j] -= rs.cartan[i][j];
    gens.push_back(m);
  }
  auto mul = [&](const std::vector<std::vector<long long>>& a,
                 const std::vector<std::vector<long long>>& b) {
    std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  std::map<std::vector<std::vector<long long>>, int> length;
  std::vector<WeylElement> out;
  std::vector<std::vector<std::vector<long long>>> queue{ident()};
  length[ident()] = 0;
  for (size_t q = 0; q < queue.size(); ++q) {
    auto w = queue[q];
    for (int i = 0; i < n; ++i) {
      auto wi = mul(gens[i], w);
      if (!length.count(wi)) {
        length[wi] = length[w] + 1;
        queue.push_back(wi);
      }
    }
  }
  for (const auto& [m, len] : length)
    out.push_back(WeylElement{m, (len % 2 == 0) ? 1 : -1, len});
  return out;
}

RootSystem make_system(GroupId id) {
  RootSystem rs;
  rs.id = id;
  rs.name = group_name(id);
  switch (id) {
    case GroupId::A1:
      rs.rank = 1;
      rs.cartan = {{2}};
      rs.form = {{2}};
      rs.convention_note = "A1: one simple root alpha, (alpha,alpha)=2";
      break;
    case GroupId::A2:
      rs.rank = 2;
      rs.cartan = {{2, -1}, {-1, 2}};
      rs.form = {{2, -1}, {-1, 2}};
      rs.convention_note = "A2: simply laced, (alpha_i,alpha_i)=2";
      break;
    case GroupId::C2:
      rs.rank = 2;
      rs.cartan = {{2, -1}, {-2, 2}};
      rs.form = {{4, -2}, {-2, 2}};
      rs.convention_note =
          "C2: alpha1 long, alpha2 short; positive roots alpha1, alpha2, "
          "alpha1+alpha2, alpha1+2*alpha2";
      break;
    case GroupId::A3:
      rs.rank = 3;
      rs.cartan = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
      rs.form = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
      rs.convention_note = "A3: simply laced, (alpha_i,alpha_i)=2";
      break;
  }
  rs.cartan_inv = invert(rs.cartan);
  rs.positive_roots = derive_positive_roots(rs);
  rs.weyl = derive_weyl_group(rs);
  rs.rho_root = rs.fund_to_root(rs.rho());
  return rs;
}

}  // namespace

const RootSystem& load_root_system(GroupId id) {
  static const RootSystem a1 = make_system(GroupId::A1);
  static const RootSystem a2 = make_system(GroupId::A2);
  static const RootSystem c2 = make_system(GroupId::C2);
  static const RootSystem a3 = make_system(GroupId::A3);
  switch (id) {
    case GroupId::A1: return a1;
    case GroupId::A2: return a2;
    case GroupId::C2: return c2;
    case GroupId::A3: return a3;
  }
  throw std::invalid_argument("unknown group id");
}

const RootSystem& load_root_system(const std::string& id) {
  auto g = parse_group(id);
  if (!g)
    throw std::invalid_argument("unknown group '" + id +
                                "'; supported groups: A1, A2, C2, A3");
  return load_root_system(*g);
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda) {
  std::set<Weight> seen{lambda};
  std::vector<Weight> queue{lambda};
  for (size_t q = 0; q < queue.size(); ++q) {
    Weight w = queue[q];
    for (int i = 0; i < rs.rank; ++i) {
      Weight r = rs.reflect(w, i);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return {seen.begin(), seen.end()};
}

bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  VecQ d = rs.fund_to_root(rs.sub(lambda, mu));
  for (const auto& c : d)
    if (!is_integral(c) || c < 0) return false;
  return true;
}

namespace {

long long kostant_rec(const RootSystem& rs, const VecZ& v, size_t i,
                      std::map<std::pair<std::vector<long long>, size_t>, long long>& memo) {
  bool zero = true, neg = false;
  std::vector<long long> key(rs.rank);
  for (int k = 0; k < rs.rank; ++k) {
    key[k] = (long long)v[k].get_si();
    zero &= (key[k] == 0);
    neg |= (key[k] < 0);
  }
  if (zero) return 1;
  if (neg || i == rs.positive_roots.size()) return 0;
  auto mk = std::make_pair(key, i);
  auto it = memo.find(mk);
  if (it != memo.end()) return it->second;
  long long total = 0;
  VecZ w = v;
  for (;;) {
    total += kostant_rec(rs, w, i + 1, memo);
    bool ok = true;
    for (int k = 0; k < rs.rank; ++k) {
      w[k] -= rs.positive_roots[i][k];
      if (w[k] < 0) ok = false;
    }
    if (!ok) break;
  }
  memo[mk] = total;
  return total;
}

}  // namespace

long long kostant_partition_count(const RootSystem& rs, const VecQ& v) {
  if (!is_integral(v))
    throw std::domain_error("kostant_partition_count: non-integral vector");
  for (const auto& c : v)
    if (c < 0) return 0;
  static thread_local std::map<std::pair<std::vector<long long>, size_t>, long long> memo;
  return kostant_rec(rs, to_vecz(v), 0, memo);
}

FreudenthalTable::FreudenthalTable(const RootSystem& rs, const Weight& lambda)
    : rs_(rs), lambda_(lambda) {
  if (!rs.is_dominant(lambda))
    throw std::domain_error("freudenthal: highest weight must be dominant");
  lambda_root_ = rs.fund_to_root(lambda);
  VecQ lr = lambda_root_ + rs_.rho_root;
  norm_lr_ = rs_.form_root(lr, lr);
}

long long FreudenthalTable::mult_dominant(const Weight& nu) const {
  if (nu == lambda_) return 1;
  auto it = memo_.find(nu);
  if (it != memo_.end()) return it->second;
  memo_[nu] = 0;  // cuts self-reference for weights off the support
  VecQ nu_root = rs_.fund_to_root(nu);
  // nu must lie under lambda in the root cone.
  {
    VecQ d = lambda_root_ - nu_root;
    for (const auto& c : d)
      if (!is_integral(c) || c < 0) return 0;
  }
  VecQ nr = nu_root + rs_.rho_root;
  Rat denom = norm_lr_ - rs_.form_root(nr, nr);
  if (denom <= 0) return 0;  // cannot happen for dominant nu strictly below lambda
  Rat s(0);
  for (const auto& alpha : rs_.positive_roots) {
    VecQ a = to_vecq(alpha);
    VecQ x = nu_root;
    for (long long k = 1;; ++k) {
      x = x + a;
      VecQ d = lambda_root_ - x;
      bool under = true;
      for (const auto& c : d) under &= (is_integral(c) && c >= 0);
      if (!under) break;
      long long m = mult(rs_.root_to_fund(x));
      if (m != 0) s += Rat((long)m) * rs_.form_root(x, a);
    }
  }
  Rat val = 2 * s / denom;
  if (!is_integral(val) || val < 0)
    throw std::logic_error("freudenthal: recursion produced a non-integer");
  long long m = (long long)val.get_num().get_si();
  memo_[nu] = m;
  return m;
}

long long FreudenthalTable::mult(const Weight& nu) const {
  return mult_dominant(rs_.dominant_representative(nu));
}

std::map<Weight, long long> FreudenthalTable::character() const {
  std::map<Weight, long long> ch;
  // Every weight of V_lambda lies in lambda - (nonnegative root span), inside
  // the box bounded by lambda - w0(lambda).
  Weight low = rs_.antidominant_representative(lambda_);
  VecQ box = rs_.fund_to_root(rs_.sub(lambda_, low));
  std::vector<long long> bound(rs_.rank);
  for (int i = 0; i < rs_.rank; ++i) bound[i] = (long long)box[i].get_num().get_si();
  std::vector<long long> c(rs_.rank, 0);
  for (;;) {
    VecQ nu_root = lambda_root_;
    for (int i = 0; i < rs_.rank; ++i) nu_root[i] -= (long)c[i];
    Weight nu = rs_.root_to_fund(nu_root);
    long long m = mult(nu);
    if (m > 0) ch[nu] = m;
    int i = 0;
    while (i < rs_.rank && ++c[i] > bound[i]) c[i++] = 0;
    if (i == rs_.rank) break;
  }
  return ch;
}

long long freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda,
                                   const Weight& nu) {
  return FreudenthalTable(rs, lambda).mult(nu);
}

long long klimyk_tensor_multiplicity(const RootSystem& rs, const Weight& lambda,
                                     const Weight& mu, const Weight& nu) {
  if (!rs.is_dominant(lambda) || !rs.is_dominant(mu) || !rs.is_dominant(nu))
    throw std::domain_error("klimyk: all three weights must be dominant");
  FreudenthalTable table(rs, mu);
  Weight nr = rs.add(nu, rs.rho());
  Weight lr = rs.add(lambda, rs.rho());
  long long total = 0;
  for (const auto& w : rs.weyl) {
    Weight x = rs.sub(rs.apply(w, nr), lr);
    total += w.sign * table.mult(x);
  }
  if (total < 0) throw std::logic_error("klimyk: negative multiplicity");
  return total;
}

std::map<Weight, long long> klimyk_tensor_decompose(const RootSystem& rs,
                                                    const Weight& lambda,
                                                    const Weight& mu) {
  std::map<Weight, long long> dec;
  for (const auto& nu : weights_below(rs, rs.add(lambda, mu))) {
    long long n = klimyk_tensor_multiplicity(rs, lambda, mu, nu);
    if (n > 0) dec[nu] = n;
  }
  return dec;
}

long long weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw std::domain_error("weyl_dimension: weight must be dominant");
  VecQ lr = rs.fund_to_root(lambda) + rs.rho_root;
  Rat prod(1);
  for (const auto& alpha : rs.positive_roots) {
    VecQ a = to_vecq(alpha);
    prod *= rs.form_root(lr, a) / rs.form_root(rs.rho_root, a);
  }
  if (!is_integral(prod) || prod <= 0)
    throw std::logic_error("weyl_dimension: non-integral product (broken form or root list)");
  return (long long)prod.get_num().get_si();
}

std::vector<Weight> weights_below(const RootSystem& rs, const Weight& lambda) {
  std::vector<Weight> out;
  Weight low = rs.antidominant_representative(lambda);
  VecQ box = rs.fund_to_root(rs.sub(lambda, low));
  std::vector<long long> bound(rs.rank);
  for (int i = 0; i < rs.rank; ++i) bound[i] = (long long)box[i].get_num().get_si();
  std::vector<long long> c(rs.rank, 0);
  VecQ lambda_root = rs.fund_to_root(lambda);
  for (;;) {
    VecQ nu_root = lambda_root;
    for (int i = 0; i < rs.rank; ++i) nu_root[i] -= (long)c[i];
    Weight nu = rs.root_to_fund(nu_root);
    if (rs.is_dominant(nu)) out.push_back(nu);
    int i = 0;
    while (i < rs.rank && ++c[i] > bound[i]) c[i++] = 0;
    if (i == rs.rank) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mv
