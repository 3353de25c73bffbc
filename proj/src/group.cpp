#include "iwasawa/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "iwasawa/numeric.hpp"

namespace iwasawa {

namespace {

std::string triple(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

// Inverses exist once range, identity, associativity and the Latin-square
// property hold: each row contains the identity exactly once.
std::vector<int> build_inverses(int n, const std::vector<int>& table) {
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a * n + b] == 0) {
        inv[a] = b;
        break;
      }
  return inv;
}

}  // namespace

int GroupTable::power(int a, long long e) const {
  int base = a;
  if (e < 0) {
    base = inv(a);
    e = -e;
  }
  int r = 0;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.degree = degree;
  p.images.resize(degree);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  Permutation r;
  r.degree = degree;
  r.images.resize(degree);
  for (int i = 0; i < degree; ++i) r.images[i] = images[other.images[i]];
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree; ++i)
    if (images[i] != i) return false;
  return true;
}

int order_cap() {
  if (const char* env = std::getenv("IWASAWA_ORDER_CAP")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(v);
  }
  return 20000;
}

GroupTable from_cayley_table(const std::vector<std::vector<int>>& raw) {
  int n = static_cast<int>(raw.size());
  if (n == 0) fail(ErrorKind::IndexOutOfRange, "empty table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(raw[a].size()) != n)
      fail(ErrorKind::IndexOutOfRange,
           "row " + std::to_string(a) + " has " + std::to_string(raw[a].size()) +
               " entries, expected " + std::to_string(n));
    for (int b = 0; b < n; ++b)
      if (raw[a][b] < 0 || raw[a][b] >= n)
        fail(ErrorKind::IndexOutOfRange, "entry (" + std::to_string(a) + "," +
                                             std::to_string(b) + ") = " +
                                             std::to_string(raw[a][b]) +
                                             " outside 0.." + std::to_string(n - 1));
  }

  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = raw[cand][a] == a && raw[a][cand] == a;
    if (ok) e = cand;
  }
  if (e < 0) fail(ErrorKind::NoIdentity, "no two-sided identity element");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (raw[raw[a][b]][c] != raw[a][raw[b][c]])
          fail(ErrorKind::NotAssociative,
               "(a*b)*c != a*(b*c) at (a,b,c)=" + triple(a, b, c));

  for (int a = 0; a < n; ++a) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (seen_row[raw[a][b]]++)
        fail(ErrorKind::NotLatinSquare, "row " + std::to_string(a) +
                                            " repeats value " +
                                            std::to_string(raw[a][b]));
      if (seen_col[raw[b][a]]++)
        fail(ErrorKind::NotLatinSquare, "column " + std::to_string(a) +
                                            " repeats value " +
                                            std::to_string(raw[b][a]));
    }
  }

  // Relabel so the identity lands at 0; elements below it shift up by one.
  std::vector<int> relabel(n);
  for (int x = 0; x < n; ++x) relabel[x] = x == e ? 0 : (x < e ? x + 1 : x);

  GroupTable g;
  g.order = n;
  g.table.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.table[relabel[a] * n + relabel[b]] = relabel[raw[a][b]];
  g.inverse = build_inverses(n, g.table);
  return g;
}

GroupTable from_permutations(int degree, const std::vector<Permutation>& generators) {
  if (degree < 1) fail(ErrorKind::DegreeMismatch, "degree must be positive");
  for (const Permutation& p : generators) {
    if (p.degree != degree || static_cast<int>(p.images.size()) != degree)
      fail(ErrorKind::DegreeMismatch,
           "generator degree " + std::to_string(p.degree) + " != " + std::to_string(degree));
    std::vector<char> seen(degree, 0);
    for (int img : p.images) {
      if (img < 0 || img >= degree)
        fail(ErrorKind::IndexOutOfRange, "permutation image " + std::to_string(img));
      if (seen[img]++)
        fail(ErrorKind::ParseError,
             "permutation images repeat " + std::to_string(img) + "; not a bijection");
    }
  }

  int cap = order_cap();
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::map<std::vector<int>, int> index{{elems[0].images, 0}};
  // Right-multiplying words by generators reaches every product of them.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Permutation& gen : generators) {
      Permutation next = elems[i].compose(gen);
      if (index.emplace(next.images, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > cap)
          fail(ErrorKind::OrderCapExceeded,
               "generated order exceeds cap " + std::to_string(cap));
      }
    }
  }

  int n = static_cast<int>(elems.size());
  GroupTable g;
  g.order = n;
  g.table.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.table[a * n + b] = index.at(elems[a].compose(elems[b]).images);
  g.inverse = build_inverses(n, g.table);
  return g;
}

GroupTable from_permutations(const std::vector<Permutation>& generators) {
  if (generators.empty())
    fail(ErrorKind::DegreeMismatch, "no generators and no degree given");
  return from_permutations(generators[0].degree, generators);
}

GroupTable cyclic(int n) {
  if (n < 1) fail(ErrorKind::IndexOutOfRange, "cyclic order must be >= 1");
  GroupTable g;
  g.order = n;
  g.name = "Z_" + std::to_string(n);
  g.table.assign(static_cast<std::size_t>(n) * n, 0);
  g.inverse.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
    g.inverse[a] = (n - a) % n;
  }
  return g;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  long long n = static_cast<long long>(a.order) * b.order;
  if (n > order_cap())
    fail(ErrorKind::OrderCapExceeded, "product order " + std::to_string(n) +
                                          " exceeds cap " + std::to_string(order_cap()));
  GroupTable g;
  g.order = static_cast<int>(n);
  g.name = (a.name.empty() ? "?" : a.name) + " x " + (b.name.empty() ? "?" : b.name);
  g.table.assign(n * n, 0);
  g.inverse.assign(n, 0);
  auto idx = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1) {
      int i = idx(x1, y1);
      g.inverse[i] = idx(a.inv(x1), b.inv(y1));
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          g.table[i * g.order + idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    }
  return g;
}

int least_metacyclic_action(int p, int q) {
  for (int t = 2; t < p; ++t)
    if (multiplicative_order(t, p) == q) return t;
  fail(ErrorKind::InvalidAction, "no action of order " + std::to_string(q) +
                                     " modulo " + std::to_string(p));
}

GroupTable metacyclic(const MetacyclicParams& params) {
  auto [p, q, n, t] = params;
  if (!is_prime(p) || !is_prime(q) || p == q)
    fail(ErrorKind::InvalidAction,
         "p and q must be distinct primes, got p=" + std::to_string(p) +
             " q=" + std::to_string(q));
  if (n < 1) fail(ErrorKind::InvalidAction, "n must be >= 1");
  if (t <= 1 || t >= p || multiplicative_order(t, p) != q)
    fail(ErrorKind::InvalidAction,
         "t=" + std::to_string(t) + " does not have order " + std::to_string(q) +
             " modulo " + std::to_string(p));

  long long qn = 1;
  for (int i = 0; i < n; ++i) {
    qn *= q;
    if (static_cast<long long>(p) * qn > order_cap())
      fail(ErrorKind::OrderCapExceeded,
           "metacyclic order exceeds cap " + std::to_string(order_cap()));
  }
  int m = static_cast<int>(p * qn);

  // t^b mod p for b = 0..q^n-1; well defined since ord(t) = q divides q^n.
  std::vector<int> tpow(qn);
  tpow[0] = 1;
  for (long long b = 1; b < qn; ++b) tpow[b] = static_cast<int>(tpow[b - 1] * static_cast<long long>(t) % p);

  GroupTable g;
  g.order = m;
  g.name = "Z_" + std::to_string(p) + ":Z_" + std::to_string(qn) +
           "(t=" + std::to_string(t) + ")";
  g.table.assign(static_cast<std::size_t>(m) * m, 0);
  g.inverse.assign(m, 0);
  auto idx = [&](long long a, long long b) { return static_cast<int>(a * qn + b); };
  for (int a1 = 0; a1 < p; ++a1)
    for (long long b1 = 0; b1 < qn; ++b1) {
      int i = idx(a1, b1);
      for (int a2 = 0; a2 < p; ++a2)
        for (long long b2 = 0; b2 < qn; ++b2)
          g.table[static_cast<std::size_t>(i) * m + idx(a2, b2)] =
              idx((a1 + static_cast<long long>(tpow[b1]) * a2) % p, (b1 + b2) % qn);
    }
  g.inverse = build_inverses(m, g.table);
  return g;
}

namespace {

Permutation perm_of(std::vector<int> images) {
  Permutation p;
  p.degree = static_cast<int>(images.size());
  p.images = std::move(images);
  return p;
}

// SL(2,3) acting on the eight nonzero vectors of F_3 x F_3.
GroupTable build_sl23() {
  auto vec_index = [](int x, int y) { return 3 * x + y - 1; };  // skips (0,0)
  auto matrix_perm = [&](int m00, int m01, int m10, int m11) {
    std::vector<int> images(8);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        if (x == 0 && y == 0) continue;
        int nx = (m00 * x + m01 * y) % 3;
        int ny = (m10 * x + m11 * y) % 3;
        images[vec_index(x, y)] = vec_index(nx, ny);
      }
    return perm_of(images);
  };
  // [[1,1],[0,1]] and [[0,-1],[1,0]] generate SL(2,3).
  return from_permutations(8, {matrix_perm(1, 1, 0, 1), matrix_perm(0, 2, 1, 0)});
}

// Groups of the form <x, y | x^8 = y^2 = 1, y x y = x^s> realized on the
// points of Z_8: x adds 1, y multiplies by s.
GroupTable build_mod8_extension(int s) {
  std::vector<int> add1(8), muls(8);
  for (int i = 0; i < 8; ++i) {
    add1[i] = (i + 1) % 8;
    muls[i] = s * i % 8;
  }
  return from_permutations(8, {perm_of(add1), perm_of(muls)});
}

GroupTable build_q8() {
  // Left multiplication by i and j on {1,-1,i,-i,j,-j,k,-k}.
  return from_permutations(8, {perm_of({2, 3, 1, 0, 6, 7, 5, 4}),
                               perm_of({4, 5, 7, 6, 1, 0, 2, 3})});
}

}  // namespace

GroupTable named(const std::string& name) {
  GroupTable g;
  if (name == "trivial") {
    g = cyclic(1);
  } else if (name.rfind("Z_", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(2));
    } catch (...) {
      fail(ErrorKind::UnknownName, name);
    }
    if (n < 1) fail(ErrorKind::UnknownName, name);
    g = cyclic(n);
  } else if (name == "S_3") {
    g = from_permutations(3, {perm_of({1, 0, 2}), perm_of({1, 2, 0})});
  } else if (name == "S_4") {
    g = from_permutations(4, {perm_of({1, 0, 2, 3}), perm_of({1, 2, 3, 0})});
  } else if (name == "A_4") {
    g = from_permutations(4, {perm_of({1, 2, 0, 3}), perm_of({1, 0, 3, 2})});
  } else if (name == "Q_8") {
    g = build_q8();
  } else if (name == "D_8") {
    g = from_permutations(4, {perm_of({1, 2, 3, 0}), perm_of({0, 3, 2, 1})});
  } else if (name == "QD16") {
    g = build_mod8_extension(3);
  } else if (name == "M16") {
    g = build_mod8_extension(5);
  } else if (name == "SL23") {
    g = build_sl23();
  } else if (name == "Dic3") {
    g = metacyclic({3, 2, 2, 2});
  } else {
    fail(ErrorKind::UnknownName, name);
  }
  g.name = name;
  return g;
}

GroupTable quotient(const GroupTable& g, const ElementSet& normal_subgroup) {
  for (int x = 0; x < g.order; ++x)
    for (int h : normal_subgroup.elements())
      if (!normal_subgroup.contains(g.conjugate(x, h)))
        fail(ErrorKind::NotNormal, "conjugate of member " + std::to_string(h) +
                                       " by " + std::to_string(x) + " escapes the subgroup");

  // Coset representative = minimal element of x*N.
  std::vector<int> rep_of(g.order, -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (rep_of[x] >= 0) continue;
    int least = x;
    for (int h : normal_subgroup.elements()) least = std::min(least, g.mul(x, h));
    for (int h : normal_subgroup.elements()) rep_of[g.mul(x, h)] = least;
  }
  for (int x = 0; x < g.order; ++x)
    if (rep_of[x] == x) reps.push_back(x);

  int m = static_cast<int>(reps.size());
  std::vector<int> coset_index(g.order, -1);
  for (int i = 0; i < m; ++i) coset_index[reps[i]] = i;

  GroupTable q;
  q.order = m;
  q.name = g.name.empty() ? "quotient" : g.name + "/N";
  q.table.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      q.table[i * m + j] = coset_index[rep_of[g.mul(reps[i], reps[j])]];
  q.inverse = build_inverses(m, q.table);
  return q;
}

int element_order(const GroupTable& g, int a) {
  if (a < 0 || a >= g.order)
    fail(ErrorKind::IndexOutOfRange, "element " + std::to_string(a));
  int x = a, k = 1;
  while (x != 0) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

std::vector<std::pair<int, int>> element_order_census(const GroupTable& g) {
  std::map<int, int> hist;
  for (int a = 0; a < g.order; ++a) ++hist[element_order(g, a)];
  return {hist.begin(), hist.end()};
}

GroupTable subgroup_table(const GroupTable& g, const ElementSet& members,
                          const std::string& name) {
  std::vector<int> elems = members.elements();
  int m = static_cast<int>(elems.size());
  std::vector<int> rank(g.order, -1);
  for (int i = 0; i < m; ++i) rank[elems[i]] = i;

  GroupTable h;
  h.order = m;
  h.name = name;
  h.table.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = rank[g.mul(elems[i], elems[j])];
      if (p < 0)
        fail(ErrorKind::IndexOutOfRange, "member set not closed under product");
      h.table[i * m + j] = p;
    }
  h.inverse = build_inverses(m, h.table);
  return h;
}

}  // namespace iwasawa
