#include "cayley/perm.hpp"

#include <sstream>

#include "cayley/errors.hpp"

namespace cayley {

Perm perm_identity(unsigned degree) {
  Perm p(degree);
  for (unsigned i = 0; i < degree; ++i) p[i] = i;
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (unsigned i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw InvalidInput("compose: degree mismatch");
  Perm r(p.size());
  for (unsigned i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm perm_invert(const Perm& p) {
  Perm r(p.size());
  for (unsigned i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

bool perm_is_valid(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (unsigned v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::string perm_cycle_string(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> done(p.size(), false);
  bool any = false;
  for (unsigned i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    os << '(' << i;
    done[i] = true;
    for (unsigned j = p[i]; j != i; j = p[j]) {
      os << ' ' << j;
      done[j] = true;
    }
    os << ')';
    any = true;
  }
  if (!any) os << "()";
  return os.str();
}

}  // namespace cayley
