#include "sheafltc/complex.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sheafltc {

std::string face_key(const Face& f) {
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(f[i]);
  }
  return s;
}

Face parse_face_key(const std::string& s) {
  Face f;
  if (s.empty()) return f;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '-')) f.push_back(std::stoi(part));
  if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end())
    throw std::invalid_argument("face key not strictly increasing: " + s);
  return f;
}

int SimplicialComplex::index_of(const Face& f) const {
  int k = static_cast<int>(f.size()) - 1;
  if (k < 0 || k > dim()) return -1;
  auto it = index[k].find(f);
  return it == index[k].end() ? -1 : it->second;
}

SimplicialComplex SimplicialComplex::from_maximal_faces(int n_vertices,
                                                        const std::vector<Face>& maximal) {
  std::vector<std::set<Face>> levels;
  std::vector<bool> seen(n_vertices, false);
  for (const Face& raw : maximal) {
    Face f = raw;
    std::sort(f.begin(), f.end());
    if (f.empty()) throw std::invalid_argument("empty maximal face");
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw std::invalid_argument("repeated vertex in face " + face_key(raw));
    if (f.front() < 0 || f.back() >= n_vertices)
      throw std::invalid_argument("vertex id out of range in face " + face_key(raw));
    for (int v : f) seen[v] = true;
    int m = static_cast<int>(f.size());
    if (static_cast<int>(levels.size()) < m) levels.resize(m);
    // downward closure via bitmask over the vertices of f
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      Face sub;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) sub.push_back(f[i]);
      levels[sub.size() - 1].insert(sub);
    }
  }
  for (int v = 0; v < n_vertices; ++v)
    if (!seen[v])
      throw std::invalid_argument("vertex " + std::to_string(v) + " not covered by any face");

  SimplicialComplex x;
  x.faces.resize(levels.size());
  for (size_t k = 0; k < levels.size(); ++k)
    x.faces[k] = std::vector<Face>(levels[k].begin(), levels[k].end());
  x.rebuild_tables();
  return x;
}

void SimplicialComplex::rebuild_tables() {
  int d = dim();
  index.assign(faces.size(), {});
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i < num(k); ++i) index[k][faces[k][i]] = i;

  facets.assign(faces.size(), {});
  cofacets.assign(faces.size(), {});
  for (int k = 0; k <= d; ++k) {
    facets[k].assign(num(k), {});
    cofacets[k].assign(num(k), {});
  }
  for (int k = 1; k <= d; ++k) {
    for (int i = 0; i < num(k); ++i) {
      const Face& f = faces[k][i];
      for (int pos = 0; pos <= k; ++pos) {
        Face sub;
        sub.reserve(k);
        for (int j = 0; j <= k; ++j)
          if (j != pos) sub.push_back(f[j]);
        auto it = index[k - 1].find(sub);
        if (it == index[k - 1].end())
          throw std::logic_error("complex not downward closed at " + face_key(f));
        facets[k][i].push_back({it->second, pos});
        cofacets[k - 1][it->second].push_back({i, pos});
      }
    }
  }

  top_count.assign(faces.size(), {});
  for (int k = 0; k <= d; ++k) top_count[k].assign(num(k), 0);
  for (int i = 0; i < num(d); ++i) {
    const Face& f = faces[d][i];
    for (unsigned mask = 1; mask < (1u << (d + 1)); ++mask) {
      Face sub;
      for (int j = 0; j <= d; ++j)
        if (mask & (1u << j)) sub.push_back(f[j]);
      ++top_count[sub.size() - 1][index[sub.size() - 1].at(sub)];
    }
  }
}

bool SimplicialComplex::is_pure() const {
  for (int k = 0; k <= dim(); ++k)
    for (int i = 0; i < num(k); ++i)
      if (top_count[k][i] == 0) return false;
  return true;
}

namespace {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int components() {
    std::set<int> roots;
    for (size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
  }
};
}  // namespace

bool SimplicialComplex::is_connected() const {
  int n = num_vertices();
  if (n <= 1) return true;
  UnionFind uf(n);
  for (int e = 0; e < num(1); ++e) uf.unite(faces[1][e][0], faces[1][e][1]);
  return uf.components() == 1;
}

bool SimplicialComplex::is_strongly_connected() const {
  if (!is_pure()) return false;
  int d = dim();
  if (d < 0) return true;
  if (d == 0) return num(0) <= 1;
  int n = num(d);
  if (n <= 1) return true;
  UnionFind uf(n);
  for (int i = 0; i < num(d - 1); ++i) {
    const auto& cf = cofacets[d - 1][i];
    for (size_t a = 1; a < cf.size(); ++a) uf.unite(cf[0].first, cf[a].first);
  }
  return uf.components() == 1;
}

std::vector<Face> SimplicialComplex::maximal_faces() const {
  std::vector<Face> out;
  for (int k = 0; k <= dim(); ++k)
    for (int i = 0; i < num(k); ++i)
      if (cofacets[k][i].empty()) out.push_back(faces[k][i]);
  return out;
}

int SimplicialComplex::degree(int i, int j) const {
  if (j < i || j > dim()) return 0;
  if (i == -1) return num(j);
  if (i == j) return 1;
  std::vector<int> count(num(i), 0);
  for (int t = 0; t < num(j); ++t) {
    const Face& f = faces[j][t];
    // all (i+1)-subsets of f
    std::vector<int> pick(i + 1);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == i + 1) {
        Face sub(pick.begin(), pick.end());
        ++count[index[i].at(sub)];
        return;
      }
      for (int a = start; a < static_cast<int>(f.size()); ++a) {
        pick[depth] = f[a];
        rec(a + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
  return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

Rat SimplicialComplex::weight(int k, int idx) const {
  if (k == -1) return 1;
  int d = dim();
  return Rat(top_count[k][idx], binom(d + 1, k + 1) * num(d));
}

Rat SimplicialComplex::total_weight(int k) const {
  Rat s = 0;
  for (int i = 0; i < num(k); ++i) s += weight(k, i);
  return s;
}

Link SimplicialComplex::link(const Face& z) const {
  Link L;
  L.center = z;
  L.center_index = index_of(z);
  if (L.center_index < 0) throw std::invalid_argument("link center not a face: " + face_key(z));
  int zs = static_cast<int>(z.size());
  int d = dim();

  auto joined = [&](const Face& y) -> Face {
    Face u;
    u.reserve(y.size() + z.size());
    std::merge(y.begin(), y.end(), z.begin(), z.end(), std::back_inserter(u));
    return u;
  };
  auto in_link = [&](const Face& y) -> bool {
    for (int v : z)
      if (std::binary_search(y.begin(), y.end(), v)) return false;
    return index_of(joined(y)) >= 0;
  };

  std::vector<int> verts;
  for (int i = 0; i < num(0); ++i)
    if (in_link(faces[0][i])) verts.push_back(faces[0][i][0]);
  L.vertex_to_parent = verts;
  std::map<int, int> to_local;
  for (size_t i = 0; i < verts.size(); ++i) to_local[verts[i]] = static_cast<int>(i);

  SimplicialComplex& C = L.complex;
  for (int k = 0; k + zs <= d; ++k) {
    std::vector<Face> level;
    std::vector<int> joins;
    for (int i = 0; i < num(k); ++i) {
      const Face& y = faces[k][i];
      if (!in_link(y)) continue;
      Face local;
      local.reserve(y.size());
      for (int v : y) local.push_back(to_local.at(v));
      level.push_back(local);
      joins.push_back(index[k + zs].at(joined(y)));
    }
    if (level.empty()) break;
    // local relabeling is monotone, so lexicographic order is preserved
    C.faces.push_back(level);
    L.join_index.push_back(joins);
  }
  if (!C.faces.empty()) C.rebuild_tables();
  return L;
}

Rat SimplicialComplex::skeleton_alpha_exact() const {
  int n = num_vertices();
  if (n == 0) return 0;
  if (n > 24) throw std::invalid_argument("skeleton_alpha_exact limited to 24 vertices");
  if (dim() < 1) return 0;
  int d = dim();
  long long T = num(d);
  long long c1 = static_cast<long long>(binom(d + 1, 1));
  long long c2 = static_cast<long long>(binom(d + 1, 2));

  struct E {
    unsigned mask;
    long long tc;
  };
  std::vector<E> edges;
  for (int e = 0; e < num(1); ++e)
    edges.push_back({(1u << faces[1][e][0]) | (1u << faces[1][e][1]), top_count[1][e]});
  std::vector<long long> vtc(n);
  for (int v = 0; v < n; ++v) vtc[v] = top_count[0][index[0].at({v})];

  __int128 best_num = 0;
  __int128 best_den = 1;  // alpha >= 0 always allowed
  for (unsigned S = 1; S < (1u << n); ++S) {
    long long A = 0, B = 0;
    for (const E& e : edges)
      if ((S & e.mask) == e.mask) A += e.tc;
    for (int v = 0; v < n; ++v)
      if (S & (1u << v)) B += vtc[v];
    if (B == 0) continue;
    // alpha_S = (A c1^2 T - B^2 c2) / (c1 T c2 B)
    __int128 nume = static_cast<__int128>(A) * c1 * c1 * T - static_cast<__int128>(B) * B * c2;
    if (nume <= 0) continue;
    __int128 deno = static_cast<__int128>(c1) * T * c2 * B;
    if (nume * best_den > best_num * deno) {
      best_num = nume;
      best_den = deno;
    }
  }
  if (best_num == 0) return 0;
  // convert __int128 back through long long pieces (values stay tiny)
  auto to_bigint = [](__int128 v) {
    bool neg = v < 0;
    if (neg) v = -v;
    BigInt out = 0;
    BigInt shift = 1;
    while (v > 0) {
      out += shift * static_cast<long long>(v & 0xffffffffLL);
      v >>= 32;
      shift <<= 32;
    }
    return neg ? -out : out;
  };
  return Rat(to_bigint(best_num), to_bigint(best_den));
}

std::pair<double, double> SimplicialComplex::spectral_interval() const {
  int n = num_vertices();
  if (n <= 1) return {0.0, 0.0};
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> wv(n);
  for (int v = 0; v < n; ++v) wv[v] = to_double(weight(0, v));
  for (int e = 0; e < num(1); ++e) {
    int u = faces[1][e][0], v = faces[1][e][1];
    double we = to_double(weight(1, e));
    double val = we / (2.0 * std::sqrt(wv[u] * wv[v]));
    S(u, v) = val;
    S(v, u) = val;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();  // ascending
  // one copy of the top eigenvalue belongs to the constants (sqrt-weight
  // vector); everything else is the operator on their complement
  return {ev(0), ev(n - 2)};
}

}  // namespace sheafltc
