#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nalen/algebra.hpp"
#include "nalen/words.hpp"

namespace nalen {

// Line-oriented algebra file:
//   field rational | field gf <p>
//   dim <n>
//   unital <i> | unital none | unital vector <c1> ... <cn>
//   labels <l1> ... <ln>
//   mul <i> <j> <k> <scalar>      b_i b_j gains scalar * b_k
// Indices are 1-based, '#' starts a comment.
Algebra parse_algebra(std::string_view text);
std::string print_algebra(const Algebra& a);
Algebra load_algebra(const std::string& path);

// "basis", "all" or "1,3,4" (1-based basis indices)
GeneratorSet parse_generator_spec(const Algebra& a, std::string_view spec);
// one coordinate vector per line, '#' comments
GeneratorSet parse_generator_vectors(const Algebra& a, std::string_view text);

}  // namespace nalen
