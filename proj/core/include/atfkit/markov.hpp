#pragma once

#include "atfkit/lattice.hpp"

#include <array>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace atf {

using Triple = std::array<Int, 3>;

// n1 p^2 + n2 q^2 + n3 r^2 = sqrt(d n1 n2 n3) pqr
struct MarkovEqnI {
    Int d;
    std::array<Int, 3> n;
    friend bool operator==(const MarkovEqnI&, const MarkovEqnI&) = default;
};

// k1 a^2 + k2 b^2 + k3 c^2 = K k1 k2 k3 abc
struct MarkovEqnII {
    Int K;
    std::array<Int, 3> k;
    friend bool operator==(const MarkovEqnII&, const MarkovEqnII&) = default;
};

using MarkovEqn = std::variant<MarkovEqnI, MarkovEqnII>;

class MarkovError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// d n1 n2 n3 square and d n_i n_j = 0 mod n_k.
bool admissible(const MarkovEqnI& eq);
// sqrt(d n1 n2 n3); throws if not a square.
Int root_coefficient(const MarkovEqnI& eq);

bool is_solution(const MarkovEqn& eq, const Triple& t);
// index in 1..3
Triple mutate_triple(const MarkovEqn& eq, const Triple& t, int index);
// Representative modulo permutations of slots with equal coefficients.
Triple symmetric_canonical(const MarkovEqn& eq, const Triple& t);

// Minimal solutions reachable from solutions with components <= search_bound.
std::vector<Triple> minimal_solutions(const MarkovEqn& eq, int search_bound = 64);
// All solutions with max component < bound, deduplicated up to symmetric slots.
std::set<Triple> enumerate_tree(const MarkovEqn& eq, const Int& bound);

struct Descent {
    Triple minimum;
    std::vector<int> word;
};
Descent minimize(const MarkovEqn& eq, const Triple& t);

std::vector<MarkovEqnI> classify_type_I(int search_bound = 64);

struct TypeIData {
    Rat lambda;
    Rat d;
    Triple pqr;
};
TypeIData derive_type_I_data(const MarkovEqnII& eq, const Triple& t, const std::array<Int, 3>& nodes);

std::string format_equation(const MarkovEqn& eq);
MarkovEqn parse_equation(const std::string& s);
std::string format_triple(const Triple& t);
Triple parse_triple(const std::string& s);

}  // namespace atf
