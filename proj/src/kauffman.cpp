#include <numeric>

#include "zjones/error.hpp"
#include "zjones/knot.hpp"

namespace zj {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
  int count(const std::vector<bool>& used) {
    int n = 0;
    for (size_t i = 0; i < parent.size(); ++i) n += used[i] && find(static_cast<int>(i)) == static_cast<int>(i);
    return n;
  }
};

LaurentA multiply(const LaurentA& a, const LaurentA& b) {
  LaurentA out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out[i + j] += x * y;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

int max_label(const PlanarDiagram& pd) {
  int mx = 0;
  for (const auto& x : pd.crossings)
    for (int v : x) mx = std::max(mx, v);
  return mx;
}

}  // namespace

PlanarDiagram PlanarDiagram::from_json(const json& j) {
  PlanarDiagram pd;
  try {
    for (const auto& x : j.at("crossings")) {
      if (x.size() != 4) throw Error(ErrorKind::Parse, "crossing must have four labels");
      pd.crossings.push_back({x[0].get<int>(), x[1].get<int>(), x[2].get<int>(), x[3].get<int>()});
    }
    if (j.contains("writhe")) pd.writhe = j.at("writhe").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("planar diagram json: ") + e.what());
  }
  std::map<int, int> count;
  for (const auto& x : pd.crossings)
    for (int v : x) {
      if (v < 1) throw Error(ErrorKind::Parse, "arc labels must be positive");
      ++count[v];
    }
  for (const auto& [v, n] : count)
    if (n != 2) throw Error(ErrorKind::Parse, "arc label " + std::to_string(v) + " must occur exactly twice");
  if (!pd.crossings.empty() && static_cast<int>(count.size()) != max_label(pd))
    throw Error(ErrorKind::Parse, "arc labels must be 1..2c");
  return pd;
}

PlanarDiagram PlanarDiagram::trefoil() { return {{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}, -3}; }

PlanarDiagram PlanarDiagram::figure_eight() { return {{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}, 0}; }

PlanarDiagram PlanarDiagram::unknot() { return {{}, 0}; }

std::vector<int> PlanarDiagram::crossing_signs() const {
  const int top = max_label(*this);
  std::vector<int> signs;
  for (const auto& x : crossings) {
    int j = x[1], l = x[3];
    if (j - l == 1 || (l == top && j == 1 && top > 2)) signs.push_back(1);
    else if (l - j == 1 || (j == top && l == 1 && top > 2)) signs.push_back(-1);
    else throw Error(ErrorKind::Parse, "cannot orient crossing; labels must follow the knot");
  }
  return signs;
}

int PlanarDiagram::components() const {
  if (crossings.empty()) return 1;
  const int top = max_label(*this);
  DisjointSets ds(top + 1);
  std::vector<bool> used(top + 1, false);
  for (const auto& x : crossings) {
    ds.join(x[0], x[2]);
    ds.join(x[1], x[3]);
    for (int v : x) used[v] = true;
  }
  return ds.count(used);
}

LaurentA kauffman_bracket(const PlanarDiagram& pd) {
  const int c = static_cast<int>(pd.crossings.size());
  if (c > 16) throw Error(ErrorKind::ResourceBound, "state sum limited to 16 crossings");
  if (c == 0) return {{0, 1}};
  const int top = max_label(pd);
  std::vector<bool> used(top + 1, false);
  for (const auto& x : pd.crossings)
    for (int v : x) used[v] = true;
  // loops -> A^{#A - #B} d^{loops-1}, d = -A^2 - A^-2
  std::vector<LaurentA> dpow{{{0, 1}}};
  const LaurentA d{{2, -1}, {-2, -1}};
  LaurentA total;
  for (long state = 0; state < (1L << c); ++state) {
    DisjointSets ds(top + 1);
    int na = 0;
    for (int i = 0; i < c; ++i) {
      const auto& x = pd.crossings[i];
      if (state >> i & 1L) {
        ds.join(x[0], x[1]);
        ds.join(x[2], x[3]);
        ++na;
      } else {
        ds.join(x[0], x[3]);
        ds.join(x[1], x[2]);
      }
    }
    int loops = ds.count(used);
    while (static_cast<int>(dpow.size()) < loops) dpow.push_back(multiply(dpow.back(), d));
    for (const auto& [e, coef] : dpow[loops - 1]) total[e + na - (c - na)] += coef;
  }
  for (auto it = total.begin(); it != total.end();) it = it->second == 0 ? total.erase(it) : std::next(it);
  return total;
}

HSeries kauffman_jones_oracle(const PlanarDiagram& pd, int N, bool normalized, bool mirror) {
  if (pd.components() != 1) throw Error(ErrorKind::Unsupported, "only single-component diagrams are supported");
  std::vector<int> signs = pd.crossing_signs();
  int w = std::accumulate(signs.begin(), signs.end(), 0);
  if (pd.writhe && *pd.writhe != w)
    throw Error(ErrorKind::Domain, "writhe " + std::to_string(*pd.writhe) + " disagrees with crossing signs (" +
                                       std::to_string(w) + ")");
  LaurentA bracket = kauffman_bracket(pd);
  // V = (-A^3)^{-w} <K>
  LaurentA v;
  for (const auto& [e, coef] : bracket) v[e - 3 * w] = (w % 2 ? -coef : coef);
  RingPtr R = Ring::of("s");
  HSeries series(R, N);
  // A = exp(-h/4): A^e = exp_h(-e, shift 2)
  for (const auto& [e, coef] : v) series += exp_h(MPoly::constant(R, -e), 2, N) * Rational(coef);
  if (mirror) series = series.mirrored();
  if (!normalized) series = series * half_laurent_series({{1, Rational(1, 2)}, {-1, Rational(1, 2)}}, R, N);
  return series;
}

}  // namespace zj
