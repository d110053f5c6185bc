#pragma once

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zjones/json_io.hpp"
#include "zjones/mpoly.hpp"

namespace zj {

// Circular word of 2m labels, each occurring twice, stored in canonical form:
// labels 0..m-1 by first occurrence, lexicographically least over rotations.
class ChordDiagram {
 public:
  ChordDiagram() = default;

  static ChordDiagram from_word(const std::vector<int>& tokens);
  static ChordDiagram parse(std::string_view text);

  int chords() const { return static_cast<int>(word_.size() / 2); }
  const std::vector<int>& word() const { return word_; }
  std::string str() const;  // 1-based labels
  std::vector<int> partner() const;
  int crossing_number(int label) const;
  bool crosses(int a, int b) const;

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) { return a.word_ == b.word_; }
  friend bool operator<(const ChordDiagram& a, const ChordDiagram& b) { return a.word_ < b.word_; }

 private:
  std::vector<int> word_;
};

std::vector<int> canonical_word(const std::vector<int>& tokens);

class DiagramSum {
 public:
  void add(const ChordDiagram& d, const Rational& c);
  const std::map<ChordDiagram, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  json to_json() const;

 private:
  std::map<ChordDiagram, Rational> terms_;
};

// Positions index the augmented word of length 2k+3 (k = base chord count):
// positions[0], positions[1] are the endpoints of chord a, positions[2] is the
// fixed endpoint of chord b. The free endpoint of b is placed immediately
// before/after each endpoint of a.
DiagramSum four_t_generate(const ChordDiagram& base, const std::array<int, 3>& positions);

// sl2 Casimir-polynomial weight in ring {c}.
class CasimirWeights {
 public:
  MPoly operator()(const ChordDiagram& d);
  // Evaluates the top level of the recursion with a forced pivot label.
  MPoly with_pivot(const ChordDiagram& d, int pivot);
  void clear();
  size_t cache_size() const;

 private:
  MPoly eval(const ChordDiagram& d, int pivot);

  mutable std::mutex mu_;
  std::map<std::vector<int>, MPoly> memo_;
};

MPoly cv_weight(const ChordDiagram& d);
MPoly verma_oracle(const ChordDiagram& d, int max_chords = 4);
MPoly weight_character(const ChordDiagram& d);
MPoly weight_character(const DiagramSum& sum);
// c -> (s^2-1)/2
MPoly casimir_to_colour(const MPoly& casimir_poly);

std::vector<ChordDiagram> all_diagrams(int m);

}  // namespace zj
