#include "sjd/diagram.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "sjd/config.hpp"

namespace sjd {

namespace {

constexpr char TOK_EDGE = 0x01;
constexpr char TOK_LEG = 0x02;
constexpr char TOK_LEG_ORD = 0x03;
constexpr char TOK_STRUT = 0x06;
constexpr char TOK_STRUT_ORD = 0x07;
constexpr char HDR_BASE = 0x10;
constexpr char NUM_BASE = 0x20;

char num(int x) { return static_cast<char>(NUM_BASE + x); }
int unnum(char c) { return static_cast<unsigned char>(c) - NUM_BASE; }

char lab_kind_byte(const Label& l) { return num(static_cast<int>(l.kind)); }

Label lab_from(char kind, char idx) {
  return Label{static_cast<LabelKind>(unnum(kind)), unnum(idx)};
}

}  // namespace

void Diagram::check() const {
  int n = ports();
  if (static_cast<int>(mate.size()) != n) throw std::invalid_argument("mate size mismatch");
  for (int p = 0; p < n; ++p) {
    if (mate[p] < 0 || mate[p] >= n || mate[p] == p || mate[mate[p]] != p)
      throw std::invalid_argument("mate is not a fixed-point-free involution");
  }
}

int loop_degree(const Diagram& d) {
  if (d.empty()) return 0;
  int edges = d.ports() / 2;
  int vertices = d.nv + d.nlegs();
  return edges - vertices + component_count(d);
}

int omega_count(const Diagram& d) {
  int n = 0;
  for (const auto& l : d.legs)
    if (l.kind == LabelKind::Omega) ++n;
  return n;
}

namespace {

// Union-find over ports.
struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void join(int a, int b) { p[find(a)] = find(b); }
};

std::vector<int> port_components(const Diagram& d) {
  UF uf(d.ports());
  for (int v = 0; v < d.nv; ++v) {
    uf.join(3 * v, 3 * v + 1);
    uf.join(3 * v, 3 * v + 2);
  }
  for (int p = 0; p < d.ports(); ++p) uf.join(p, d.mate[p]);
  std::vector<int> comp(d.ports());
  std::map<int, int> renum;
  for (int p = 0; p < d.ports(); ++p) {
    int r = uf.find(p);
    auto [it, fresh] = renum.emplace(r, static_cast<int>(renum.size()));
    comp[p] = it->second;
  }
  return comp;
}

}  // namespace

int component_count(const Diagram& d) {
  if (d.empty()) return 0;
  auto comp = port_components(d);
  return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

Diagram take_components(const Diagram& d, const std::vector<bool>& take) {
  auto comp = port_components(d);
  Diagram sub;
  sub.ordered = d.ordered;
  std::map<int, int> vmap, lmap;
  for (int v = 0; v < d.nv; ++v)
    if (take[comp[3 * v]]) vmap[v] = sub.nv++;
  for (int i = 0; i < d.nlegs(); ++i) {
    if (!take[comp[d.leg_port(i)]]) continue;
    // ascending leg order keeps the induced total order
    lmap[i] = sub.nlegs();
    sub.legs.push_back(d.legs[i]);
  }
  sub.mate.assign(sub.ports(), -1);
  auto newport = [&](int p) {
    if (d.is_leg_port(p)) return sub.leg_port(lmap.at(d.leg_index(p)));
    return 3 * vmap.at(d.vertex_of(p)) + d.slot_of(p);
  };
  for (const auto& [v, nv] : vmap)
    for (int s = 0; s < 3; ++s) sub.mate[newport(3 * v + s)] = newport(d.mate[3 * v + s]);
  for (const auto& [i, ni] : lmap) sub.mate[newport(d.leg_port(i))] = newport(d.mate[d.leg_port(i)]);
  return sub;
}

std::vector<Diagram> split_components(const Diagram& d) {
  int nc = component_count(d);
  std::vector<Diagram> out;
  out.reserve(nc);
  for (int c = 0; c < nc; ++c) {
    std::vector<bool> take(nc, false);
    take[c] = true;
    out.push_back(take_components(d, take));
  }
  return out;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  if (a.ordered != b.ordered && !a.empty() && !b.empty())
    throw std::invalid_argument("disjoint_union: mixed orderedness");
  Diagram r;
  r.nv = a.nv + b.nv;
  r.ordered = a.ordered || b.ordered;
  r.legs = a.legs;
  r.legs.insert(r.legs.end(), b.legs.begin(), b.legs.end());
  r.mate.assign(r.ports(), -1);
  auto mapA = [&](int p) { return a.is_leg_port(p) ? r.leg_port(a.leg_index(p)) : p; };
  auto mapB = [&](int p) {
    return b.is_leg_port(p) ? r.leg_port(a.nlegs() + b.leg_index(p)) : 3 * a.nv + p;
  };
  for (int p = 0; p < a.ports(); ++p) r.mate[mapA(p)] = mapA(a.mate[p]);
  for (int p = 0; p < b.ports(); ++p) r.mate[mapB(p)] = mapB(b.mate[p]);
  return r;
}

Diagram glue_legs(const Diagram& d, const std::vector<std::pair<int, int>>& leg_pairs,
                  bool keep_order) {
  std::vector<int> partner(d.nlegs(), -1);
  for (auto [x, y] : leg_pairs) {
    if (x == y || x < 0 || y < 0 || x >= d.nlegs() || y >= d.nlegs())
      throw std::invalid_argument("glue_legs: bad pair");
    if (partner[x] != -1 || partner[y] != -1)
      throw std::invalid_argument("glue_legs: overlapping pairing");
    partner[x] = y;
    partner[y] = x;
  }

  Diagram r;
  r.nv = d.nv;
  r.ordered = d.ordered && keep_order;
  std::vector<int> lmap(d.nlegs(), -1);
  for (int i = 0; i < d.nlegs(); ++i) {
    if (partner[i] != -1) continue;
    lmap[i] = r.nlegs();
    r.legs.push_back(d.legs[i]);
  }
  r.mate.assign(r.ports(), -1);

  // Follow fused edges through glued leg pairs.
  auto resolve = [&](int start) {
    int q = d.mate[start];
    int steps = 0;
    while (d.is_leg_port(q) && partner[d.leg_index(q)] != -1) {
      q = d.mate[d.leg_port(partner[d.leg_index(q)])];
      if (++steps > d.nlegs()) throw std::invalid_argument("glue_legs: closed circle");
    }
    return q;
  };
  auto newport = [&](int p) {
    if (d.is_leg_port(p)) return r.leg_port(lmap[d.leg_index(p)]);
    return p;
  };
  for (int p = 0; p < d.ports(); ++p) {
    if (d.is_leg_port(p) && partner[d.leg_index(p)] != -1) continue;
    r.mate[newport(p)] = newport(resolve(p));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Canonicalization: per component, minimize a rooted traversal encoding over
// all roots, root orientations and per-vertex reflections. A reflection
// contributes -1; if the minimum is reached with both signs the diagram has a
// sign-reversing automorphism and is zero.

namespace {

struct CompCanon {
  std::string key;
  int sign = 1;
  bool zero = false;
};

// Orientation of a vertex: its 3 ports in traversal order.
using Orient = std::array<int, 3>;

struct CanonSearch {
  const Diagram* d;
  std::vector<int> vlist;              // global vertex ids in this component
  std::vector<int> local;              // global vertex -> local index or -1
  std::vector<int> order;              // local index -> global vertex
  std::vector<Orient> orient;          // by local index
  std::string tokens;
  int sign = 1;
  std::string best;
  bool best_set = false;
  bool seen_plus = false, seen_minus = false;

  void candidate() {
    if (!best_set || tokens < best) {
      best = tokens;
      best_set = true;
      seen_plus = sign > 0;
      seen_minus = sign < 0;
    } else if (tokens == best) {
      (sign > 0 ? seen_plus : seen_minus) = true;
    }
  }

  int slot_pos(int li, int port) const {
    for (int s = 0; s < 3; ++s)
      if (orient[li][s] == port) return s;
    throw std::logic_error("slot_pos");
  }

  static Orient rotate_from(int v3, int entry, bool flip) {
    // Cyclic order of vertex v is (v3, v3+1, v3+2); start at `entry`.
    int k = entry - v3;
    Orient o;
    for (int s = 0; s < 3; ++s) o[s] = v3 + (k + (flip ? 3 - s : s)) % 3;
    return o;
  }

  void rec(size_t pos) {
    if (best_set && tokens.size() <= best.size() &&
        tokens.compare(0, tokens.size(), best, 0, tokens.size()) > 0)
      return;  // prefix already beaten
    size_t done = order.size() * 3;
    if (pos == done) {
      candidate();
      return;
    }
    int li = static_cast<int>(pos / 3);
    int s = static_cast<int>(pos % 3);
    int p = orient[li][s];
    int q = d->mate[p];
    size_t mark = tokens.size();
    if (d->is_leg_port(q)) {
      const Label& lb = d->legs[d->leg_index(q)];
      if (d->ordered) {
        tokens += TOK_LEG_ORD;
        tokens += num(d->leg_index(q));
      } else {
        tokens += TOK_LEG;
      }
      tokens += lab_kind_byte(lb);
      tokens += num(lb.index);
      rec(pos + 1);
      tokens.resize(mark);
      return;
    }
    int w = d->vertex_of(q);
    if (local[w] >= 0) {
      tokens += TOK_EDGE;
      tokens += num(local[w]);
      tokens += num(slot_pos(local[w], q));
      rec(pos + 1);
      tokens.resize(mark);
      return;
    }
    for (int flip = 0; flip < 2; ++flip) {
      local[w] = static_cast<int>(order.size());
      order.push_back(w);
      orient.push_back(rotate_from(3 * w, q, flip != 0));
      if (flip) sign = -sign;
      tokens += TOK_EDGE;
      tokens += num(local[w]);
      tokens += num(0);
      rec(pos + 1);
      tokens.resize(mark);
      if (flip) sign = -sign;
      orient.pop_back();
      order.pop_back();
      local[w] = -1;
    }
  }
};

CompCanon canon_vertex_component(const Diagram& d, const std::vector<int>& vlist) {
  if (static_cast<int>(vlist.size()) > Config::get().caps.canon_max_vertices)
    throw cap_error("canonicalization cap exceeded (component too large)");
  CanonSearch cs;
  cs.d = &d;
  cs.vlist = vlist;
  cs.local.assign(d.nv, -1);
  for (int root : vlist) {
    for (int rot = 0; rot < 3; ++rot) {
      for (int flip = 0; flip < 2; ++flip) {
        cs.local[root] = 0;
        cs.order = {root};
        cs.orient = {CanonSearch::rotate_from(3 * root, 3 * root + rot, flip != 0)};
        cs.sign = flip ? -1 : 1;
        cs.tokens.clear();
        cs.rec(0);
        cs.local[root] = -1;
      }
    }
  }
  CompCanon out;
  out.key = std::string(1, static_cast<char>(HDR_BASE + vlist.size())) + cs.best;
  out.zero = cs.seen_plus && cs.seen_minus;
  out.sign = cs.seen_plus ? 1 : -1;
  return out;
}

CompCanon canon_strut(const Diagram& d, int leg_a, int leg_b) {
  const Label& la = d.legs[leg_a];
  const Label& lb = d.legs[leg_b];
  std::string key(1, static_cast<char>(HDR_BASE));
  if (d.ordered) {
    int pa = leg_a, pb = leg_b;
    if (pa > pb) std::swap(pa, pb);
    key += TOK_STRUT_ORD;
    key += num(pa);
    key += lab_kind_byte(d.legs[pa]);
    key += num(d.legs[pa].index);
    key += num(pb);
    key += lab_kind_byte(d.legs[pb]);
    key += num(d.legs[pb].index);
  } else {
    Label x = la, y = lb;
    if (y < x) std::swap(x, y);
    key += TOK_STRUT;
    key += lab_kind_byte(x);
    key += num(x.index);
    key += lab_kind_byte(y);
    key += num(y.index);
  }
  return {key, 1, false};
}

}  // namespace

Canon canonical(const Diagram& d) {
  d.check();
  auto comp = port_components(d);
  int nc = d.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<std::vector<int>> verts(nc);
  std::vector<std::vector<int>> legids(nc);
  for (int v = 0; v < d.nv; ++v) verts[comp[3 * v]].push_back(v);
  for (int i = 0; i < d.nlegs(); ++i) legids[comp[d.leg_port(i)]].push_back(i);

  std::vector<std::string> keys;
  int sign = 1;
  bool zero = false;
  for (int c = 0; c < nc; ++c) {
    CompCanon cc;
    if (verts[c].empty()) {
      if (legids[c].size() != 2) throw std::invalid_argument("component with no vertex is not a strut");
      cc = canon_strut(d, legids[c][0], legids[c][1]);
    } else {
      cc = canon_vertex_component(d, verts[c]);
    }
    zero = zero || cc.zero;
    sign *= cc.sign;
    keys.push_back(std::move(cc.key));
  }
  std::sort(keys.begin(), keys.end());
  std::string key;
  for (size_t i = 0; i < keys.size(); ++i) {
    if (i) key += '\0';
    key += keys[i];
  }
  return {key, zero ? 1 : sign, zero};
}

Diagram decode_key(const std::string& key, bool ordered) {
  Diagram d;
  d.ordered = ordered;
  if (key.empty()) return d;

  struct PendingLeg {
    int attach_port;  // -1 for strut halves resolved later
    Label label;
    int position;  // -1 if unordered
  };
  std::vector<PendingLeg> pending;
  std::vector<std::pair<int, int>> edges;  // global ports
  std::vector<std::pair<int, int>> strut_pairs;  // indices into pending

  size_t i = 0;
  while (i < key.size()) {
    int nv0 = d.nv;
    int cnv = static_cast<unsigned char>(key[i]) - HDR_BASE;
    ++i;
    d.nv += cnv;
    for (int v = 0; v < cnv; ++v) {
      for (int s = 0; s < 3; ++s) {
        if (i >= key.size()) throw std::invalid_argument("truncated key");
        char t = key[i];
        if (t == TOK_EDGE) {
          int w = unnum(key[i + 1]), u = unnum(key[i + 2]);
          edges.emplace_back(3 * (nv0 + v) + s, 3 * (nv0 + w) + u);
          i += 3;
        } else if (t == TOK_LEG) {
          pending.push_back({3 * (nv0 + v) + s, lab_from(key[i + 1], key[i + 2]), -1});
          i += 3;
        } else if (t == TOK_LEG_ORD) {
          pending.push_back({3 * (nv0 + v) + s, lab_from(key[i + 2], key[i + 3]), unnum(key[i + 1])});
          i += 4;
        } else {
          throw std::invalid_argument("bad slot token");
        }
      }
    }
    // strut tokens until separator / end
    while (i < key.size() && key[i] != '\0') {
      char t = key[i];
      if (t == TOK_STRUT) {
        int a = static_cast<int>(pending.size());
        pending.push_back({-1, lab_from(key[i + 1], key[i + 2]), -1});
        pending.push_back({-1, lab_from(key[i + 3], key[i + 4]), -1});
        strut_pairs.emplace_back(a, a + 1);
        i += 5;
      } else if (t == TOK_STRUT_ORD) {
        int a = static_cast<int>(pending.size());
        pending.push_back({-1, lab_from(key[i + 2], key[i + 3]), unnum(key[i + 1])});
        pending.push_back({-1, lab_from(key[i + 5], key[i + 6]), unnum(key[i + 4])});
        strut_pairs.emplace_back(a, a + 1);
        i += 7;
      } else {
        break;  // next component header after separator handled below
      }
    }
    if (i < key.size()) {
      if (key[i] != '\0') throw std::invalid_argument("bad component separator");
      ++i;
    }
  }

  // Assign leg indices. Ordered keys carry positions; unordered use encounter order.
  std::vector<int> legidx(pending.size());
  if (ordered) {
    std::vector<int> by_pos(pending.size(), -1);
    for (size_t k = 0; k < pending.size(); ++k) {
      int pos = pending[k].position;
      if (pos < 0 || pos >= static_cast<int>(pending.size()) || by_pos[pos] != -1)
        throw std::invalid_argument("bad leg positions in ordered key");
      by_pos[pos] = static_cast<int>(k);
    }
    for (size_t pos = 0; pos < by_pos.size(); ++pos) legidx[by_pos[pos]] = static_cast<int>(pos);
  } else {
    for (size_t k = 0; k < pending.size(); ++k) legidx[k] = static_cast<int>(k);
  }
  d.legs.resize(pending.size());
  for (size_t k = 0; k < pending.size(); ++k) d.legs[legidx[k]] = pending[k].label;

  d.mate.assign(d.ports(), -1);
  for (auto [a, b] : edges) {
    d.mate[a] = b;
    d.mate[b] = a;
  }
  for (size_t k = 0; k < pending.size(); ++k) {
    if (pending[k].attach_port >= 0) {
      d.mate[d.leg_port(legidx[k])] = pending[k].attach_port;
      d.mate[pending[k].attach_port] = d.leg_port(legidx[k]);
    }
  }
  for (auto [a, b] : strut_pairs) {
    d.mate[d.leg_port(legidx[a])] = d.leg_port(legidx[b]);
    d.mate[d.leg_port(legidx[b])] = d.leg_port(legidx[a]);
  }
  d.check();
  return d;
}

bool key_is_connected(const std::string& key) {
  return !key.empty() && key.find('\0') == std::string::npos;
}

int key_degree(const std::string& key) {
  int deg = 0;
  size_t i = 0;
  bool at_header = true;
  while (i < key.size()) {
    if (at_header) {
      deg += static_cast<unsigned char>(key[i]) - HDR_BASE;
      at_header = false;
      ++i;
      continue;
    }
    char t = key[i];
    if (t == '\0') {
      at_header = true;
      ++i;
    } else if (t == TOK_EDGE || t == TOK_LEG) {
      i += 3;
    } else if (t == TOK_LEG_ORD) {
      i += 4;
    } else if (t == TOK_STRUT) {
      i += 5;
    } else if (t == TOK_STRUT_ORD) {
      i += 7;
    } else {
      throw std::invalid_argument("bad key token");
    }
  }
  return deg;
}

int loop_degree_key(const std::string& key) { return loop_degree(decode_key(key)); }

int omega_count_key(const std::string& key) { return omega_count(decode_key(key)); }

// ---------------------------------------------------------------------------
// Constructors

Diagram make_Y(const Label& x, const Label& y, const Label& z) {
  Diagram d;
  d.nv = 1;
  d.legs = {x, y, z};
  d.mate = {3, 4, 5, 0, 1, 2};
  return d;
}

Diagram make_H(const Label& a, const Label& b, const Label& c, const Label& d_) {
  // u cyclic (a, m, c), v cyclic (b, d, m); legs indexed a,b,c,d.
  Diagram d;
  d.nv = 2;
  d.legs = {a, b, c, d_};
  d.mate.assign(10, -1);
  auto link = [&](int p, int q) { d.mate[p] = q; d.mate[q] = p; };
  link(0, 6);   // u0 - leg a
  link(1, 5);   // u1 - v2 (the middle edge)
  link(2, 8);   // u2 - leg c
  link(3, 7);   // v0 - leg b
  link(4, 9);   // v1 - leg d
  return d;
}

Diagram make_Phi(const Label& x, const Label& y) {
  // u cyclic (x, m1, m2), v cyclic (y, m2, m1).
  Diagram d;
  d.nv = 2;
  d.legs = {x, y};
  d.mate.assign(8, -1);
  auto link = [&](int p, int q) { d.mate[p] = q; d.mate[q] = p; };
  link(0, 6);
  link(3, 7);
  link(1, 5);  // m1: u1 - v2
  link(2, 4);  // m2: u2 - v1
  return d;
}

Diagram make_Theta() {
  // Planar theta: u cyclic (m1,m2,m3), v cyclic (m3,m2,m1).
  Diagram d;
  d.nv = 2;
  d.mate.assign(6, -1);
  auto link = [&](int p, int q) { d.mate[p] = q; d.mate[q] = p; };
  link(0, 5);
  link(1, 4);
  link(2, 3);
  return d;
}

Diagram make_strut(const Label& x, const Label& y) {
  Diagram d;
  d.legs = {x, y};
  d.mate = {1, 0};
  return d;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// All matchings/open assignments on the slots of `degree` vertices.
void shapes_rec(Diagram& d, int port, std::vector<Diagram>& out) {
  int n = 3 * d.nv;
  while (port < n && d.mate[port] != -1) ++port;
  if (port == n) {
    out.push_back(d);
    return;
  }
  // open slot -> leg added later
  d.mate[port] = -2;
  shapes_rec(d, port + 1, out);
  d.mate[port] = -1;
  for (int q = port + 1; q < n; ++q) {
    if (d.mate[q] != -1) continue;
    d.mate[port] = q;
    d.mate[q] = port;
    shapes_rec(d, port + 1, out);
    d.mate[port] = -1;
    d.mate[q] = -1;
  }
}

Diagram finish_shape(const Diagram& proto) {
  Diagram d;
  d.nv = proto.nv;
  std::vector<int> open;
  for (int p = 0; p < 3 * proto.nv; ++p)
    if (proto.mate[p] == -2) open.push_back(p);
  d.legs.assign(open.size(), Label::open());
  d.mate.assign(d.ports(), -1);
  for (int p = 0; p < 3 * proto.nv; ++p)
    if (proto.mate[p] >= 0) d.mate[p] = proto.mate[p];
  for (size_t i = 0; i < open.size(); ++i) {
    d.mate[open[i]] = d.leg_port(static_cast<int>(i));
    d.mate[d.leg_port(static_cast<int>(i))] = open[i];
  }
  return d;
}

bool vertices_connected(const Diagram& d) {
  if (d.nv <= 1) return true;
  UF uf(d.nv);
  for (int p = 0; p < 3 * d.nv; ++p)
    if (d.mate[p] >= 0 && d.mate[p] < 3 * d.nv) uf.join(d.vertex_of(p), d.vertex_of(d.mate[p]));
  int r = uf.find(0);
  for (int v = 1; v < d.nv; ++v)
    if (uf.find(v) != r) return false;
  return true;
}

// A shape admits a nonzero labeling iff no sign-reversing automorphism fixes
// every leg pointwise; probing with pairwise-distinct labels detects that.
bool shape_survives(const Diagram& shape) {
  Diagram probe = shape;
  for (int i = 0; i < probe.nlegs(); ++i) probe.legs[i] = Label::alpha(i + 1);
  return !canonical(probe).zero;
}

std::vector<Diagram> shape_reps(int degree, bool connected) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  Diagram proto;
  proto.nv = degree;
  proto.mate.assign(3 * degree, -1);
  std::vector<Diagram> raw;
  shapes_rec(proto, 0, raw);
  std::map<std::string, Diagram> uniq;
  for (const auto& pr : raw) {
    Diagram s = finish_shape(pr);
    if (connected && !vertices_connected(s)) continue;
    if (!shape_survives(s)) continue;
    // the open-labeled canonical may be AS-zero; the key still identifies the shape
    uniq.emplace(canonical(s).key, s);
  }
  std::vector<Diagram> out;
  out.reserve(uniq.size());
  for (auto& [k, v] : uniq) out.push_back(std::move(v));
  return out;
}

std::vector<Label> label_choices(int genus, LabelSet ls) {
  std::vector<Label> out;
  for (int i = 1; i <= genus; ++i) out.push_back(Label::alpha(i));
  for (int i = 1; i <= genus; ++i) out.push_back(Label::beta(i));
  if (ls == LabelSet::BasisPlusOmega) out.push_back(Label::omega());
  return out;
}

void label_shape(const Diagram& shape, const std::vector<Label>& choices,
                 std::set<std::string>& out) {
  int e = shape.nlegs();
  Diagram d = shape;
  std::vector<int> pick(e, 0);
  while (true) {
    for (int i = 0; i < e; ++i) d.legs[i] = choices[pick[i]];
    Canon c = canonical(d);
    if (!c.zero) out.insert(c.key);
    int i = e - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(choices.size())) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
}

}  // namespace

std::vector<std::string> enumerate_connected(int genus, int degree, LabelSet ls) {
  const auto& caps = Config::get().caps;
  if (degree > caps.max_degree) throw cap_error("enumeration degree cap exceeded");
  if (genus > caps.max_genus) throw cap_error("enumeration genus cap exceeded");
  auto choices = label_choices(genus, ls);
  std::set<std::string> keys;
  for (const auto& shape : shape_reps(degree, /*connected=*/true)) {
    if (shape.nlegs() == 0) {
      Canon c = canonical(shape);
      if (!c.zero) keys.insert(c.key);
      continue;
    }
    if (!choices.empty()) label_shape(shape, choices, keys);
  }
  return {keys.begin(), keys.end()};
}

std::vector<std::string> enumerate_all(int genus, int degree, LabelSet ls) {
  std::vector<std::vector<std::string>> conn(degree + 1);
  for (int t = 1; t <= degree; ++t) conn[t] = enumerate_connected(genus, t, ls);
  std::set<std::string> keys;
  // Multisets of connected pieces, nondecreasing in (degree, index).
  std::function<void(int, int, int, Diagram)> rec = [&](int remaining, int mindeg, int minidx,
                                                        Diagram acc) {
    if (remaining == 0) {
      Canon c = canonical(acc);
      if (!c.zero) keys.insert(c.key);
      return;
    }
    for (int t = mindeg; t <= remaining; ++t) {
      int start = (t == mindeg) ? minidx : 0;
      for (int i = start; i < static_cast<int>(conn[t].size()); ++i) {
        rec(remaining - t, t, i, disjoint_union(acc, decode_key(conn[t][i])));
      }
    }
  };
  rec(degree, 1, 0, Diagram{});
  return {keys.begin(), keys.end()};
}

std::vector<std::string> enumerate_ordered(int genus, int degree, bool connected) {
  const auto& caps = Config::get().caps;
  if (degree > caps.ordered_max_degree) throw cap_error("ordered enumeration degree cap exceeded");
  if (genus > caps.ordered_max_genus) throw cap_error("ordered enumeration genus cap exceeded");
  // An ordered diagram can be nonzero even when forgetting the order leaves
  // a sign-reversing automorphism, so enumerate labelings and orderings of
  // the raw shapes.
  auto choices = label_choices(genus, LabelSet::Basis);
  std::set<std::string> keys;
  for (const auto& shape : shape_reps(degree, connected)) {
    int e = shape.nlegs();
    std::vector<int> perm(e);
    for (int i = 0; i < e; ++i) perm[i] = i;
    do {
      // position p attaches to shape leg perm[p]
      Diagram od;
      od.nv = shape.nv;
      od.ordered = true;
      od.legs.assign(e, Label::open());
      od.mate.assign(shape.ports(), -1);
      std::vector<int> newidx(e);
      for (int p = 0; p < e; ++p) newidx[perm[p]] = p;
      auto mapped = [&](int p) {
        return shape.is_leg_port(p) ? od.leg_port(newidx[shape.leg_index(p)]) : p;
      };
      for (int p = 0; p < shape.ports(); ++p) od.mate[mapped(p)] = mapped(shape.mate[p]);
      std::vector<int> pick(e, 0);
      while (true) {
        for (int i = 0; i < e; ++i) od.legs[i] = choices[pick[i]];
        Canon c = canonical(od);
        if (!c.zero) keys.insert(c.key);
        int i = e - 1;
        while (i >= 0 && pick[i] + 1 == static_cast<int>(choices.size())) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {keys.begin(), keys.end()};
}

std::vector<std::string> enumerate_shapes(int degree, bool connected) {
  std::vector<std::string> out;
  for (const auto& s : shape_reps(degree, connected)) out.push_back(canonical(s).key);
  std::sort(out.begin(), out.end());
  return out;
}

std::string shape_of_key(const std::string& key) {
  Diagram d = decode_key(key);
  d.ordered = false;
  for (auto& l : d.legs) l = Label::open();
  return canonical(d).key;
}

}  // namespace sjd
