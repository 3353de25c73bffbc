#include "iwasawa/dot.hpp"

#include <sstream>

namespace iwasawa {

std::string hasse_dot(const SubgroupLattice& l) {
  std::ostringstream os;
  os << "digraph subgroup_lattice {\n";
  os << "  rankdir=BT;\n";

  for (int i = 0; i < l.size(); ++i)
    os << "  n" << i << " [label=\"" << l.order_of(i) << ":" << i << "\", shape="
       << (l.is_normal(i) ? "box" : "ellipse") << "];\n";

  // K covers H: H < K with nothing strictly between.
  for (int h = 0; h < l.size(); ++h)
    for (int k = h + 1; k < l.size(); ++k) {
      if (!l.leq(h, k) || l.order_of(h) == l.order_of(k)) continue;
      bool covering = true;
      for (int m = h + 1; m < k && covering; ++m)
        covering = !(m != h && m != k && l.leq(h, m) && l.leq(m, k) &&
                     l.order_of(m) > l.order_of(h) && l.order_of(m) < l.order_of(k));
      if (covering) os << "  n" << h << " -> n" << k << ";\n";
    }

  os << "}\n";
  return os.str();
}

}  // namespace iwasawa
