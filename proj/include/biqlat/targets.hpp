#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "biqlat/matrix.hpp"

namespace biqlat {

enum class TargetLattice { D4, D4D4, D8, E8 };

// Classical integer Gram matrices of the four target lattices.
const GramMatrix& target_gram(TargetLattice t);

// Known invariants of the targets, used as cross-checks; determinant and
// minimum/kissing are re-derived by enumeration in the tests rather than
// trusted from here.
Int target_det(TargetLattice t);          // 4, 16, 4, 1
std::size_t target_kissing(TargetLattice t);  // 24, 48, 112, 240
int target_dim(TargetLattice t);

std::string_view target_name(TargetLattice t);       // "D4", "D4+D4", "D8", "E8"
std::optional<TargetLattice> parse_target(std::string_view s);  // "d4", "d4d4", "d8", "e8"

}  // namespace biqlat
