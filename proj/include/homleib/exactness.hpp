#pragma once

#include <map>
#include <string>
#include <vector>

#include "homleib/linalg.hpp"

namespace hlb {

// Exactness of  U --in--> V --out--> W  at V, certified by ranks:
// out∘in = 0 and rank(in) + rank(out) = dim V.
struct Joint {
  std::string name;
  std::size_t dim = 0;
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  bool composite_zero = true;
  bool exact = false;
};

Joint exact_at(const std::string& name, const LinearMap& in, const LinearMap& out);
// V --out--> W --> 0 exact at W.
Joint surjective_onto(const std::string& name, const LinearMap& out);

struct ExactnessReport {
  std::vector<Joint> joints;
  std::vector<std::pair<std::string, bool>> checks;  // auxiliary certified facts
  std::map<std::string, std::size_t> dims;           // named objects

  bool ok() const;
  void check(const std::string& what, bool holds) { checks.emplace_back(what, holds); }
};

// Commutative diagram with exact rows
//      A --f--> B --g--> C --> 0
//      |a       |b       |c
//  0-> A'--i--> B'--p--> C'
// The six-term sequence Ker a -> Ker b -> Ker c -> Coker a -> Coker b -> Coker c
// is assembled explicitly, including the connecting map.
struct SnakeInput {
  LinearMap f, g, i, p, a, b, c;
};

struct SnakeResult {
  Subspace ker_a, ker_b, ker_c;
  QuotientSpace coker_a, coker_b, coker_c;
  LinearMap ker_f, ker_g, delta, coker_i, coker_p;  // in subspace/quotient coordinates
  ExactnessReport report;  // joints at Ker b, Ker c, Coker a, Coker b, and Coker c when p is onto
};

// Throws HypothesisNotMet naming the failing hypothesis.
SnakeResult snake(const SnakeInput& in);

}  // namespace hlb
