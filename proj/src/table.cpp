#include "mv/table.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mv {

int GeneratorTable::index_of(const std::string& name) const {
  for (int i = 0; i < (int)generators.size(); ++i)
    if (generators[i].name == name) return i;
  return -1;
}

void GeneratorTable::finalize() {
  std::sort(generators.begin(), generators.end(),
            [](const Generator& a, const Generator& b) { return a.name < b.name; });
  std::set<std::string> names;
  for (const auto& g : generators)
    if (!names.insert(g.name).second)
      throw std::invalid_argument("generator table: duplicate generator '" + g.name + "'");
  if (generators.size() > 32)
    throw std::invalid_argument("generator table: too many generators");
  for (auto& [i, j] : incompat) {
    if (i < 0 || j < 0 || i >= (int)generators.size() || j >= (int)generators.size())
      throw std::invalid_argument("generator table: incompatibility edge out of range");
    if (i == j) throw std::invalid_argument("generator table: self-edge");
    if (i > j) std::swap(i, j);
  }
  std::sort(incompat.begin(), incompat.end());
  incompat.erase(std::unique(incompat.begin(), incompat.end()), incompat.end());
  adj.assign(generators.size(), 0);
  for (auto [i, j] : incompat) {
    adj[i] |= (1u << j);
    adj[j] |= (1u << i);
  }
}

VecZ monomial_degree(const GeneratorTable& t, const Monomial& m) {
  int d = t.generators.empty() ? 0 : (int)t.generators[0].degree.size();
  VecZ deg(d, Int(0));
  for (auto [g, e] : m.powers)
    for (int k = 0; k < d; ++k) deg[k] += Int((long)e) * t.generators[g].degree[k];
  return deg;
}

std::string monomial_name(const GeneratorTable& t, const Monomial& m) {
  if (m.powers.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto [g, e] : m.powers) {
    if (!first) os << "*";
    first = false;
    os << t.generators[g].name;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

bool monomial_admissible(const GeneratorTable& t, const Monomial& m) {
  uint32_t support = 0;
  for (auto [g, e] : m.powers) {
    if (e <= 0) return false;
    if (t.adj[g] & support) return false;
    support |= (1u << g);
  }
  return true;
}

bool generic_less(const RootSystem& rs, const VecQ& a, const VecQ& b) {
  Rat fa = rs.form_root(rs.rho_root, a);
  Rat fb = rs.form_root(rs.rho_root, b);
  int c = cmp(fa, fb);
  if (c != 0) return c < 0;
  return lex_less(a, b);
}

VecQ highest_vertex(const RootSystem& rs, const Polytope& p) {
  const VecQ* best = &p.vertices[0];
  for (const auto& v : p.vertices)
    if (generic_less(rs, *best, v)) best = &v;
  return *best;
}

VecQ lowest_vertex(const RootSystem& rs, const Polytope& p) {
  const VecQ* best = &p.vertices[0];
  for (const auto& v : p.vertices)
    if (generic_less(rs, v, *best)) best = &v;
  return *best;
}

namespace {

VecQ qpt(std::initializer_list<long long> cs) {
  VecQ v;
  for (auto c : cs) v.push_back(Rat((long)c));
  return v;
}

Polytope lattice_hull(std::initializer_list<std::initializer_list<long long>> pts) {
  std::vector<VecQ> v;
  for (auto p : pts) v.push_back(qpt(p));
  return convex_hull(v);
}

VecZ zvec(std::initializer_list<long long> cs) {
  VecZ v;
  for (auto c : cs) v.push_back(Int((long)c));
  return v;
}

Generator gen(std::string name, VecZ degree, Polytope poly, std::string prov) {
  return Generator{std::move(name), std::move(degree), std::move(poly), std::move(prov)};
}

// weylgon(omega) - omega, the recentered reflection-orbit hull.
Polytope orbit_shift(const RootSystem& rs, const Weight& omega) {
  std::vector<VecQ> pts;
  VecQ shift = rs.fund_to_root(omega);
  for (const auto& w : weyl_orbit(rs, omega)) pts.push_back(rs.fund_to_root(w) - shift);
  return convex_hull(pts);
}

GeneratorTable make_a1() {
  GeneratorTable t;
  t.group = GroupId::A1;
  t.convention_note = load_root_system(GroupId::A1).convention_note;
  t.generators.push_back(gen("a", zvec({-1}), lattice_hull({{0}, {-1}}),
                             "fixed: simple-root segment"));
  t.finalize();
  return t;
}

GeneratorTable make_a2() {
  GeneratorTable t;
  t.group = GroupId::A2;
  t.convention_note = load_root_system(GroupId::A2).convention_note;
  const char* seg_prov = "fixed: simple-root segment";
  const char* tri_prov =
      "calibrated: unique triangle pair splitting a1+a2 along its diagonal; "
      "verified against the Freudenthal battery (fund coords <= 2)";
  t.generators.push_back(gen("a1", zvec({-1, 0}), lattice_hull({{0, 0}, {-1, 0}}), seg_prov));
  t.generators.push_back(gen("a2", zvec({0, -1}), lattice_hull({{0, 0}, {0, -1}}), seg_prov));
  t.generators.push_back(
      gen("b1", zvec({-1, -1}), lattice_hull({{0, 0}, {-1, 0}, {-1, -1}}), tri_prov));
  t.generators.push_back(
      gen("b2", zvec({-1, -1}), lattice_hull({{0, 0}, {0, -1}, {-1, -1}}), tri_prov));
  t.incompat = {{0, 1}};  // a1,a2
  t.finalize();
  return t;
}

GeneratorTable make_c2() {
  const RootSystem& rs = load_root_system(GroupId::C2);
  GeneratorTable t;
  t.group = GroupId::C2;
  t.convention_note = rs.convention_note;
  const char* seg_prov = "fixed: simple-root segment";
  const char* cal_prov =
      "calibrated: unique shape matching the Freudenthal and Klimyk batteries "
      "(fund coords <= 2)";
  t.generators.push_back(gen("a1", zvec({-1, 0}), lattice_hull({{0, 0}, {-1, 0}}), seg_prov));
  t.generators.push_back(gen("a2", zvec({0, -1}), lattice_hull({{0, 0}, {0, -1}}), seg_prov));
  t.generators.push_back(
      gen("b1", zvec({-1, -1}), lattice_hull({{0, 0}, {-1, 0}, {-1, -1}}), cal_prov));
  t.generators.push_back(
      gen("b2", zvec({-1, -1}), lattice_hull({{0, 0}, {0, -1}, {-1, -1}}), cal_prov));
  t.generators.push_back(
      gen("c1", zvec({-1, -2}), lattice_hull({{0, 0}, {-1, 0}, {-1, -2}}), cal_prov));
  t.generators.push_back(
      gen("c2", zvec({-1, -2}), lattice_hull({{0, 0}, {0, -2}, {-1, -2}}), cal_prov));
  t.generators.push_back(gen("c3", zvec({-1, -2}), orbit_shift(rs, Weight{0, 1}),
                             "fixed: reflection-orbit hull of omega2, recentered"));
  t.generators.push_back(gen("d1", zvec({-2, -2}), orbit_shift(rs, Weight{1, 0}),
                             "fixed: reflection-orbit hull of omega1, recentered"));
  auto e = [&](const char* x, const char* y) {
    return std::make_pair(t.index_of(x), t.index_of(y));
  };
  t.finalize();  // names first so index_of works on sorted order
  t.incompat = {e("a1", "a2"), e("a1", "c1"), e("a1", "c2"),
                e("a2", "b1"), e("a2", "b2"), e("b1", "b2"),
                e("b1", "c2"), e("b2", "c1"), e("c1", "c2")};
  t.finalize();
  return t;
}

GeneratorTable make_a3() {
  const RootSystem& rs = load_root_system(GroupId::A3);
  GeneratorTable t;
  t.group = GroupId::A3;
  t.convention_note = rs.convention_note;
  const char* seg_prov = "fixed: simple-root segment";
  const char* cal_prov =
      "calibrated: unique shape class assignment matching Kostant counts and the "
      "Freudenthal battery (fund coords <= 2)";
  t.generators.push_back(gen("a1", zvec({-1, 0, 0}), lattice_hull({{0, 0, 0}, {-1, 0, 0}}), seg_prov));
  t.generators.push_back(gen("a2", zvec({0, -1, 0}), lattice_hull({{0, 0, 0}, {0, -1, 0}}), seg_prov));
  t.generators.push_back(gen("a3", zvec({0, 0, -1}), lattice_hull({{0, 0, 0}, {0, 0, -1}}), seg_prov));
  t.generators.push_back(gen("b1", zvec({-1, -1, 0}),
                             lattice_hull({{0, 0, 0}, {-1, 0, 0}, {-1, -1, 0}}), cal_prov));
  t.generators.push_back(gen("b2", zvec({-1, -1, 0}),
                             lattice_hull({{0, 0, 0}, {0, -1, 0}, {-1, -1, 0}}), cal_prov));
  t.generators.push_back(gen("b3", zvec({0, -1, -1}),
                             lattice_hull({{0, 0, 0}, {0, -1, 0}, {0, -1, -1}}), cal_prov));
  t.generators.push_back(gen("b4", zvec({0, -1, -1}),
                             lattice_hull({{0, 0, 0}, {0, 0, -1}, {0, -1, -1}}), cal_prov));
  // square-based pyramids
  t.generators.push_back(gen(
      "c1", zvec({-1, -1, -1}),
      lattice_hull({{0, 0, 0}, {0, -1, 0}, {-1, -1, 0}, {0, -1, -1}, {-1, -1, -1}}), cal_prov));
  t.generators.push_back(gen(
      "c2", zvec({-1, -1, -1}),
      lattice_hull({{0, 0, 0}, {-1, 0, 0}, {0, 0, -1}, {-1, 0, -1}, {-1, -1, -1}}), cal_prov));
  // tetrahedra
  t.generators.push_back(gen(
      "c3", zvec({-1, -1, -1}),
      lattice_hull({{0, 0, 0}, {-1, 0, 0}, {-1, -1, 0}, {-1, -1, -1}}), cal_prov));
  t.generators.push_back(gen(
      "c4", zvec({-1, -1, -1}),
      lattice_hull({{0, 0, 0}, {0, 0, -1}, {0, -1, -1}, {-1, -1, -1}}), cal_prov));
  t.generators.push_back(gen("d1", zvec({-1, -2, -1}), orbit_shift(rs, Weight{0, 1, 0}),
                             "fixed: reflection-orbit hull of omega2, recentered"));
  t.finalize();
  auto e = [&](const char* x, const char* y) {
    return std::make_pair(t.index_of(x), t.index_of(y));
  };
  t.incompat = {e("a1", "a2"), e("a2", "a3"),
                e("a1", "b3"), e("a1", "b4"), e("a3", "b1"), e("a3", "b2"),
                e("a2", "c2"), e("b1", "b4"),
                e("a2", "c1"), e("b2", "b3"),
                e("b1", "c1"), e("b2", "c2"),
                e("b4", "c1"), e("b3", "c2"),
                e("c1", "c2")};
  t.finalize();
  return t;
}

}  // namespace

const GeneratorTable& builtin_table(GroupId group) {
  static const GeneratorTable a1 = make_a1();
  static const GeneratorTable a2 = make_a2();
  static const GeneratorTable c2 = make_c2();
  static const GeneratorTable a3 = make_a3();
  switch (group) {
    case GroupId::A1: return a1;
    case GroupId::A2: return a2;
    case GroupId::C2: return c2;
    case GroupId::A3: return a3;
  }
  throw std::invalid_argument("unknown group id");
}

std::string table_to_json(const GeneratorTable& t) {
  nlohmann::ordered_json j;
  j["group"] = group_name(t.group);
  j["convention_note"] = t.convention_note;
  j["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : t.generators) {
    nlohmann::ordered_json jg;
    jg["name"] = g.name;
    jg["degree"] = nlohmann::ordered_json::array();
    for (const auto& c : g.degree) jg["degree"].push_back((long long)c.get_si());
    jg["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.polytope.vertices) {
      nlohmann::ordered_json jv = nlohmann::ordered_json::array();
      for (const auto& q : v) jv.push_back(rat_to_string(q));
      jg["vertices"].push_back(jv);
    }
    jg["provenance"] = g.provenance;
    j["generators"].push_back(jg);
  }
  j["incompat_edges"] = nlohmann::ordered_json::array();
  for (auto [a, b] : t.incompat)
    j["incompat_edges"].push_back({t.generators[a].name, t.generators[b].name});
  return j.dump(2) + "\n";
}

GeneratorTable table_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("table parse error: ") + e.what());
  }
  GeneratorTable t;
  auto gid = parse_group(j.at("group").get<std::string>());
  if (!gid) throw std::invalid_argument("table: unknown group '" +
                                        j.at("group").get<std::string>() + "'");
  t.group = *gid;
  const RootSystem& rs = load_root_system(t.group);
  t.convention_note = j.value("convention_note", "");
  for (const auto& jg : j.at("generators")) {
    Generator g;
    g.name = jg.at("name").get<std::string>();
    for (const auto& c : jg.at("degree")) g.degree.push_back(Int((long)c.get<long long>()));
    if ((int)g.degree.size() != rs.rank)
      throw std::invalid_argument("table: generator '" + g.name + "': bad degree length");
    std::vector<VecQ> verts;
    for (const auto& jv : jg.at("vertices")) {
      VecQ v;
      for (const auto& s : jv) v.push_back(rat_from_string(s.get<std::string>()));
      if ((int)v.size() != rs.rank)
        throw std::invalid_argument("table: generator '" + g.name + "': bad vertex length");
      if (!is_integral(v))
        throw std::invalid_argument("table: generator '" + g.name +
                                    "': vertex off the root lattice");
      verts.push_back(v);
    }
    g.polytope = convex_hull(verts);
    if (g.polytope.vertices.size() != verts.size())
      throw std::invalid_argument("table: generator '" + g.name +
                                  "': vertex list is not a minimal V-representation");
    g.provenance = jg.value("provenance", "");
    t.generators.push_back(std::move(g));
  }
  t.finalize();
  for (const auto& je : j.at("incompat_edges")) {
    std::string a = je.at(0).get<std::string>(), b = je.at(1).get<std::string>();
    int ia = t.index_of(a), ib = t.index_of(b);
    if (ia < 0) throw std::invalid_argument("table: incompatibility edge names unknown generator '" + a + "'");
    if (ib < 0) throw std::invalid_argument("table: incompatibility edge names unknown generator '" + b + "'");
    t.incompat.push_back({ia, ib});
  }
  t.finalize();
  // structural invariants
  for (const auto& g : t.generators) {
    VecQ top = highest_vertex(rs, g.polytope);
    VecQ bot = lowest_vertex(rs, g.polytope);
    if (!is_zero(top))
      throw std::invalid_argument("table: generator '" + g.name +
                                  "': highest vertex is not the origin");
    if (to_vecz(bot) != g.degree)
      throw std::invalid_argument("table: generator '" + g.name +
                                  "': lowest vertex does not match the degree");
  }
  return t;
}

void save_table(const GeneratorTable& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << table_to_json(t);
}

GeneratorTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return table_from_json(ss.str());
}

}  // namespace mv
