#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cayley {

// A permutation of 0..n-1 as its image array.
using Perm = std::vector<unsigned>;

Perm perm_identity(unsigned degree);
bool perm_is_identity(const Perm& p);

// Left-to-right application: compose(p, q) applies p first, then q.
// Fixed globally; the convention fixture test pins it.
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_invert(const Perm& p);

bool perm_is_valid(const Perm& p);

// Cycle notation for logs, e.g. "(0 1 2)(4 5)"; "()" for the identity.
std::string perm_cycle_string(const Perm& p);

}  // namespace cayley
