#include "zjones/chord.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zjones/conventions.hpp"
#include "zjones/error.hpp"

namespace zj {

namespace {

RingPtr casimir_ring() { return Ring::of("c"); }
RingPtr colour_ring() { return Ring::of("s"); }

std::vector<int> relabel(const std::vector<int>& w, size_t start) {
  std::map<int, int> names;
  std::vector<int> out(w.size());
  for (size_t k = 0; k < w.size(); ++k) {
    int t = w[(start + k) % w.size()];
    auto it = names.try_emplace(t, static_cast<int>(names.size())).first;
    out[k] = it->second;
  }
  return out;
}

}  // namespace

std::vector<int> canonical_word(const std::vector<int>& tokens) {
  std::map<int, int> count;
  for (int t : tokens) ++count[t];
  for (const auto& [t, n] : count)
    if (n != 2)
      throw Error(ErrorKind::MalformedDiagram, "label " + std::to_string(t) + " occurs " + std::to_string(n) + " times");
  if (tokens.empty()) return {};
  std::vector<int> best = relabel(tokens, 0);
  for (size_t r = 1; r < tokens.size(); ++r) {
    std::vector<int> cand = relabel(tokens, r);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

ChordDiagram ChordDiagram::from_word(const std::vector<int>& tokens) {
  ChordDiagram d;
  d.word_ = canonical_word(tokens);
  return d;
}

ChordDiagram ChordDiagram::parse(std::string_view text) {
  std::map<std::string, int> ids;
  std::vector<int> tokens;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) tokens.push_back(ids.try_emplace(tok, static_cast<int>(ids.size())).first->second);
  return from_word(tokens);
}

std::string ChordDiagram::str() const {
  std::string out;
  for (size_t i = 0; i < word_.size(); ++i) out += (i ? " " : "") + std::to_string(word_[i] + 1);
  return out;
}

std::vector<int> ChordDiagram::partner() const {
  std::vector<int> first(chords(), -1), p(word_.size());
  for (size_t i = 0; i < word_.size(); ++i) {
    int l = word_[i];
    if (first[l] < 0) {
      first[l] = static_cast<int>(i);
    } else {
      p[i] = first[l];
      p[first[l]] = static_cast<int>(i);
    }
  }
  return p;
}

bool ChordDiagram::crosses(int a, int b) const {
  if (a == b) return false;
  int inside = 0, seen = 0;
  for (int l : word_) {
    if (l == a) ++seen;
    else if (l == b && seen == 1) ++inside;
  }
  return inside == 1;
}

int ChordDiagram::crossing_number(int label) const {
  int n = 0;
  for (int b = 0; b < chords(); ++b) n += crosses(label, b);
  return n;
}

void DiagramSum::add(const ChordDiagram& d, const Rational& c) {
  if (!terms_.empty() && terms_.begin()->first.chords() != d.chords())
    throw Error(ErrorKind::MalformedDiagram, "diagram sum must be homogeneous in chord count");
  Rational& slot = terms_[d];
  slot += c;
  if (slot == 0) terms_.erase(d);
}

json DiagramSum::to_json() const {
  json j = json::object();
  for (const auto& [d, c] : terms_) j[d.str()] = rational_str(c);
  return j;
}

DiagramSum four_t_generate(const ChordDiagram& base, const std::array<int, 3>& pos) {
  const int k = base.chords();
  const int L = 2 * k + 3;
  for (int i = 0; i < 3; ++i) {
    if (pos[i] < 0 || pos[i] >= L) throw Error(ErrorKind::InvalidPositions, "position out of range");
    for (int j = 0; j < i; ++j)
      if (pos[i] == pos[j]) throw Error(ErrorKind::InvalidPositions, "coincident positions");
  }
  const int a = k, b = k + 1;
  std::vector<int> slots(L);
  for (int i = 0, src = 0; i < L; ++i) {
    if (i == pos[0] || i == pos[1]) slots[i] = a;
    else if (i == pos[2]) slots[i] = b;
    else slots[i] = base.word()[src++];
  }
  auto place = [&](int at, bool after) {
    std::vector<int> w;
    for (int i = 0; i < L; ++i) {
      if (i == at && !after) w.push_back(b);
      w.push_back(slots[i]);
      if (i == at && after) w.push_back(b);
    }
    return ChordDiagram::from_word(w);
  };
  DiagramSum sum;
  sum.add(place(pos[0], false), 1);
  sum.add(place(pos[0], true), -1);
  sum.add(place(pos[1], false), 1);
  sum.add(place(pos[1], true), -1);
  return sum;
}

MPoly CasimirWeights::operator()(const ChordDiagram& d) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(d.word());
    if (it != memo_.end()) return it->second;
  }
  MPoly w = eval(d, -1);
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.try_emplace(d.word(), std::move(w)).first->second;
}

MPoly CasimirWeights::with_pivot(const ChordDiagram& d, int pivot) {
  if (pivot < 0 || pivot >= d.chords()) throw Error(ErrorKind::MalformedDiagram, "pivot out of range");
  return eval(d, pivot);
}

void CasimirWeights::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  memo_.clear();
}

size_t CasimirWeights::cache_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

MPoly CasimirWeights::eval(const ChordDiagram& d, int pivot) {
  const int m = d.chords();
  const RingPtr R = casimir_ring();
  if (m == 0) return MPoly::constant(R, 1);
  if (pivot < 0) {
    int best = m + 1;
    for (int l = 0; l < m; ++l) {
      int x = d.crossing_number(l);
      if (x < best) {
        best = x;
        pivot = l;
      }
    }
  }
  const auto& w = d.word();
  int i = -1, j = -1;
  for (int p = 0; p < static_cast<int>(w.size()); ++p)
    if (w[p] == pivot) (i < 0 ? i : j) = p;

  std::vector<int> crossing;
  for (int l = 0; l < m; ++l)
    if (d.crosses(pivot, l)) crossing.push_back(l);

  std::vector<int> rest;
  for (int l : w)
    if (l != pivot) rest.push_back(l);
  MPoly c = MPoly::variable(R, "c");
  MPoly result = (c - MPoly::constant(R, 2 * static_cast<int>(crossing.size()))) * (*this)(ChordDiagram::from_word(rest));

  // endpoint of each crossing chord inside (i, j) and outside
  auto ends = [&](int label) {
    int e = -1, f = -1;
    for (int p = 0; p < static_cast<int>(w.size()); ++p)
      if (w[p] == label) (p > i && p < j ? e : f) = p;
    return std::pair{e, f};
  };
  MPoly pairs(R);
  const int fresh1 = m, fresh2 = m + 1;
  for (size_t x = 0; x < crossing.size(); ++x)
    for (size_t y = x + 1; y < crossing.size(); ++y) {
      auto [eb, fb] = ends(crossing[x]);
      auto [ec, fc] = ends(crossing[y]);
      auto rewire = [&](int p1, int q1, int p2, int q2) {
        std::vector<int> out;
        for (int p = 0; p < static_cast<int>(w.size()); ++p) {
          if (p == i || p == j) continue;
          if (p == p1 || p == q1) out.push_back(fresh1);
          else if (p == p2 || p == q2) out.push_back(fresh2);
          else out.push_back(w[p]);
        }
        return ChordDiagram::from_word(out);
      };
      pairs += (*this)(rewire(eb, fc, ec, fb));
      pairs -= (*this)(rewire(eb, ec, fb, fc));
    }
  result += pairs * Rational(2 * frozen::kPairSign);
  return result;
}

namespace {
CasimirWeights& shared_weights() {
  static CasimirWeights w;
  return w;
}
}  // namespace

MPoly cv_weight(const ChordDiagram& d) { return shared_weights()(d); }

MPoly casimir_to_colour(const MPoly& casimir_poly) {
  RingPtr S = colour_ring();
  MPoly s = MPoly::variable(S, "s");
  MPoly value = (s * s - MPoly::constant(S, 1)) * Rational(1, 2);
  return casimir_poly.compose(S, {{"c", value}});
}

MPoly weight_character(const ChordDiagram& d) {
  Rational kappa(1, 1);
  for (int i = 0; i < d.chords(); ++i) kappa /= 4;
  return casimir_to_colour(cv_weight(d)) * kappa;
}

MPoly weight_character(const DiagramSum& sum) {
  MPoly total(colour_ring());
  for (const auto& [d, c] : sum.terms()) total += weight_character(d) * c;
  return total;
}

MPoly verma_oracle(const ChordDiagram& d, int max_chords) {
  const int m = d.chords();
  if (m > max_chords)
    throw Error(ErrorKind::ResourceBound, "verma_oracle: " + std::to_string(m) + " chords exceeds bound " +
                                              std::to_string(max_chords));
  const RingPtr S = colour_ring();
  const MPoly lambda = MPoly::variable(S, "s") - MPoly::constant(S, 1);
  enum Op { E, F, H };
  const auto& w = d.word();
  const int len = static_cast<int>(w.size());
  std::vector<int> first(m, -1);
  for (int p = 0; p < len; ++p)
    if (first[w[p]] < 0) first[w[p]] = p;

  MPoly total(S);
  std::vector<int> choice(m, 0);
  long combos = 1;
  for (int i = 0; i < m; ++i) combos *= 3;
  for (long code = 0; code < combos; ++code) {
    long c = code;
    int nh = 0;
    for (int i = 0; i < m; ++i) {
      choice[i] = static_cast<int>(c % 3);
      c /= 3;
      nh += choice[i] == 2;
    }
    std::vector<Op> ops(len);
    for (int p = 0; p < len; ++p) {
      int ch = choice[w[p]];
      bool is_first = first[w[p]] == p;
      ops[p] = ch == 2 ? H : ((ch == 0) == is_first ? E : F);
    }
    // state[j] = coefficient of F^j v
    std::vector<MPoly> state(m + 1, MPoly(S));
    state[0] = MPoly::constant(S, 1);
    for (int p = len - 1; p >= 0; --p) {
      std::vector<MPoly> next(m + 1, MPoly(S));
      for (int j = 0; j <= m; ++j) {
        if (state[j].is_zero()) continue;
        switch (ops[p]) {
          case H: next[j] += state[j] * (lambda - MPoly::constant(S, 2 * j)); break;
          case F:
            if (j + 1 > m) throw Error(ErrorKind::ResourceBound, "verma_oracle: weight overflow");
            next[j + 1] += state[j];
            break;
          case E:
            if (j > 0) next[j - 1] += state[j] * (lambda - MPoly::constant(S, j - 1)) * Rational(j);
            break;
        }
      }
      state = std::move(next);
    }
    for (int j = 1; j <= m; ++j)
      if (!state[j].is_zero()) throw Error(ErrorKind::Domain, "verma_oracle: result not proportional to v");
    Rational weight(1);
    for (int i = 0; i < nh; ++i) weight /= 2;
    total += state[0] * weight;
  }
  return total;
}

std::vector<ChordDiagram> all_diagrams(int m) {
  std::set<ChordDiagram> out;
  std::vector<int> w(2 * m, -1);
  auto rec = [&](auto&& self, int label) -> void {
    int p = 0;
    while (p < 2 * m && w[p] >= 0) ++p;
    if (p == 2 * m) {
      out.insert(ChordDiagram::from_word(w));
      return;
    }
    w[p] = label;
    for (int q = p + 1; q < 2 * m; ++q) {
      if (w[q] >= 0) continue;
      w[q] = label;
      self(self, label + 1);
      w[q] = -1;
    }
    w[p] = -1;
  };
  rec(rec, 0);
  return {out.begin(), out.end()};
}

}  // namespace zj
