#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nalen/algebra.hpp"

namespace nalen {

// F_2[Z_2^n]: e_x e_y = e_{x+y}, basis vector e_x at 0-based index x
Algebra make_group_algebra_z2n(std::size_t n, std::size_t cap = 6);

// the two five-dimensional tables separating the descending classes
Algebra make_a_flex(const FieldSpec& field = FieldSpec::prime(2));
Algebra make_a_alt(const FieldSpec& field = FieldSpec::prime(2));

// F 1 + F^n with v_i v_j = delta_ij 1
Algebra make_spin_factor(std::size_t n, const FieldSpec& field = FieldSpec::rationals());

// matrix units E_ij at 0-based index (i-1) n + (j-1)
Algebra make_matrix_algebra(std::size_t n, const FieldSpec& field = FieldSpec::rationals());

// a a = b, b a = c
Algebra make_chain3(const FieldSpec& field = FieldSpec::rationals());
// a a = b, A^3 = 0
Algebra make_nil3(const FieldSpec& field = FieldSpec::rationals());

// adjoins an identity e as the last basis vector
Algebra make_unital_hull(const Algebra& a);

// Doubling (a, b)(c, d) = (ac + g conj(d) b, da + b conj(c)), conj(a, b) = (conj(a), -b).
// One gamma per level; basis vector 0 is the unity.
Algebra make_cayley_dickson(const FieldSpec& field, std::size_t level, const std::vector<Scalar>& gammas);

enum class TwistSide { left, right, both };
const char* to_string(TwistSide s);

// x*y replaced by conj(x) y, x conj(y) or conj(x) conj(y), with the involution
// fixing b_0 = 1 and negating every other basis vector
Algebra twist_conjugation(const Algebra& a, TwistSide side);

// names accepted by the gen command: z2n, aflex, aalt, spin, matrix, chain3, nil3, cd
std::vector<std::string> example_names();

}  // namespace nalen
