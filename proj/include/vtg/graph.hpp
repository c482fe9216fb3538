#pragma once
// Implicit vertex-transitive graph families: canonical vertex encodings,
// origins, neighbor enumeration, and the graph-spec / vertex literal grammar.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vtg {

// Thrown when a byte string or literal is not a canonical vertex encoding.
class EncodingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family : uint8_t {
  Lattice = 1,
  LamplighterLine = 2,
  LamplighterPlane = 3,
  FreeProduct23 = 4,
  RegularTree = 5,
  LadderDiag = 6,
};

using GeneratorSet = std::vector<std::vector<int32_t>>;

// A fixed enumeration of infinite vertex-transitive graph families. Instances
// are immutable; all operations on them are pure.
struct GraphSpec {
  Family family;
  int dim = 0;              // Lattice only
  GeneratorSet generators;  // Lattice only; symmetric, non-empty, no zero
  int tree_degree = 0;      // RegularTree only, k >= 3

  static GraphSpec lattice(int d, GeneratorSet gens);
  static GraphSpec lattice_std(int d);
  static GraphSpec lattice_diag();
  static GraphSpec lamplighter_line();
  static GraphSpec lamplighter_plane();
  static GraphSpec free_product_23();
  static GraphSpec regular_tree(int k);
  static GraphSpec ladder_diag();

  // Common vertex degree of the family.
  int degree() const;
  // Spec string in the CLI grammar; parse_graph_spec round-trips it.
  std::string to_string() const;

  bool operator==(const GraphSpec& o) const = default;
};

// A graph vertex in canonical byte encoding. Two vertices are equal iff their
// encodings are byte-identical; ordering is lexicographic on the bytes.
class Vertex {
 public:
  Vertex() = default;
  const std::string& bytes() const { return bytes_; }
  bool empty() const { return bytes_.empty(); }

  bool operator==(const Vertex&) const = default;
  auto operator<=>(const Vertex&) const = default;

  // Wraps bytes without validation; callers outside this header should use
  // decode() so non-canonical input is rejected.
  static Vertex from_bytes(std::string b) {
    Vertex v;
    v.bytes_ = std::move(b);
    return v;
  }

 private:
  std::string bytes_;
};

struct VertexHash {
  size_t operator()(const Vertex& v) const {
    return std::hash<std::string>{}(v.bytes());
  }
};

namespace detail {

inline void append_i32(std::string& out, int32_t x) {
  uint32_t u = static_cast<uint32_t>(x);
  out.push_back(static_cast<char>(u & 0xff));
  out.push_back(static_cast<char>((u >> 8) & 0xff));
  out.push_back(static_cast<char>((u >> 16) & 0xff));
  out.push_back(static_cast<char>((u >> 24) & 0xff));
}

inline int32_t read_i32(const std::string& b, size_t at) {
  uint32_t u = static_cast<uint8_t>(b[at]) |
               (static_cast<uint32_t>(static_cast<uint8_t>(b[at + 1])) << 8) |
               (static_cast<uint32_t>(static_cast<uint8_t>(b[at + 2])) << 16) |
               (static_cast<uint32_t>(static_cast<uint8_t>(b[at + 3])) << 24);
  return static_cast<int32_t>(u);
}

// Toggles x in a strictly sorted vector (insert if absent, erase if present).
template <typename T>
void toggle_sorted(std::vector<T>& v, const T& x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) {
    v.erase(it);
  } else {
    v.insert(it, x);
  }
}

}  // namespace detail

// ---- Family payloads ----

struct LatticePoint {
  std::vector<int32_t> c;
};

struct LampLineState {
  std::vector<int32_t> lamps;  // strictly increasing
  int32_t pos = 0;
};

using PlaneCoord = std::array<int32_t, 2>;

struct LampPlaneState {
  std::vector<PlaneCoord> lamps;  // strictly increasing lexicographically
  PlaneCoord pos{0, 0};
};

struct LadderPoint {
  int32_t n = 0;
  uint8_t side = 0;  // 0 or 1
};

// ---- GraphSpec construction ----

inline GraphSpec GraphSpec::lattice(int d, GeneratorSet gens) {
  if (d < 1) throw std::invalid_argument("lattice dimension must be >= 1");
  if (gens.empty()) throw std::invalid_argument("lattice generator set is empty");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != d)
      throw std::invalid_argument("generator has wrong dimension");
    if (std::all_of(g.begin(), g.end(), [](int32_t x) { return x == 0; }))
      throw std::invalid_argument("generator set contains the zero vector");
    std::vector<int32_t> neg(g.size());
    std::transform(g.begin(), g.end(), neg.begin(), [](int32_t x) { return -x; });
    if (!std::binary_search(gens.begin(), gens.end(), neg))
      throw std::invalid_argument("generator set is not symmetric");
  }
  GraphSpec s;
  s.family = Family::Lattice;
  s.dim = d;
  s.generators = std::move(gens);
  return s;
}

inline GraphSpec GraphSpec::lattice_std(int d) {
  GeneratorSet gens;
  for (int i = 0; i < d; ++i) {
    std::vector<int32_t> e(d, 0);
    e[i] = 1;
    gens.push_back(e);
    e[i] = -1;
    gens.push_back(e);
  }
  return lattice(d, std::move(gens));
}

inline GraphSpec GraphSpec::lattice_diag() {
  GeneratorSet gens = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
  return lattice(2, std::move(gens));
}

inline GraphSpec GraphSpec::lamplighter_line() {
  GraphSpec s;
  s.family = Family::LamplighterLine;
  return s;
}

inline GraphSpec GraphSpec::lamplighter_plane() {
  GraphSpec s;
  s.family = Family::LamplighterPlane;
  return s;
}

inline GraphSpec GraphSpec::free_product_23() {
  GraphSpec s;
  s.family = Family::FreeProduct23;
  return s;
}

inline GraphSpec GraphSpec::regular_tree(int k) {
  if (k < 3) throw std::invalid_argument("tree degree must be >= 3");
  GraphSpec s;
  s.family = Family::RegularTree;
  s.tree_degree = k;
  return s;
}

inline GraphSpec GraphSpec::ladder_diag() {
  GraphSpec s;
  s.family = Family::LadderDiag;
  return s;
}

inline int GraphSpec::degree() const {
  switch (family) {
    case Family::Lattice:
      return static_cast<int>(generators.size());
    case Family::LamplighterLine:
      return 8;  // 2 directions x 2 lamp choices at each endpoint
    case Family::LamplighterPlane:
      return 16;
    case Family::FreeProduct23:
      return 3;  // a, b, b^-1
    case Family::RegularTree:
      return tree_degree;
    case Family::LadderDiag:
      return 5;
  }
  throw std::logic_error("unknown family");
}

// ---- Canonical encodings ----
//
// Layout: one family tag byte, then fixed-width little-endian int32 payload.
//   Lattice:          tag, coord[0..d)
//   LamplighterLine:  tag, pos, lamp[0..k) strictly increasing
//   LamplighterPlane: tag, pos.x, pos.y, (lamp.x, lamp.y)... strictly
//                     increasing lexicographically
//   FreeProduct23:    tag, letters from {'a','b','B'}, factors alternating
//   RegularTree:      tag, letters 0..k-1, no two consecutive equal
//   LadderDiag:       tag, n, side byte (0 or 1)

inline Vertex encode_lattice(const GraphSpec& spec, const LatticePoint& p) {
  std::string b;
  b.reserve(1 + 4 * p.c.size());
  b.push_back(static_cast<char>(Family::Lattice));
  for (int32_t x : p.c) detail::append_i32(b, x);
  if (static_cast<int>(p.c.size()) != spec.dim)
    throw EncodingError("lattice point has wrong dimension");
  return Vertex::from_bytes(std::move(b));
}

inline Vertex encode_lamp_line(const LampLineState& s) {
  std::string b;
  b.reserve(5 + 4 * s.lamps.size());
  b.push_back(static_cast<char>(Family::LamplighterLine));
  detail::append_i32(b, s.pos);
  for (int32_t l : s.lamps) detail::append_i32(b, l);
  return Vertex::from_bytes(std::move(b));
}

inline Vertex encode_lamp_plane(const LampPlaneState& s) {
  std::string b;
  b.reserve(9 + 8 * s.lamps.size());
  b.push_back(static_cast<char>(Family::LamplighterPlane));
  detail::append_i32(b, s.pos[0]);
  detail::append_i32(b, s.pos[1]);
  for (const auto& l : s.lamps) {
    detail::append_i32(b, l[0]);
    detail::append_i32(b, l[1]);
  }
  return Vertex::from_bytes(std::move(b));
}

inline Vertex encode_word(Family fam, const std::string& word) {
  std::string b;
  b.reserve(1 + word.size());
  b.push_back(static_cast<char>(fam));
  b += word;
  return Vertex::from_bytes(std::move(b));
}

inline Vertex encode_ladder(const LadderPoint& p) {
  std::string b;
  b.reserve(6);
  b.push_back(static_cast<char>(Family::LadderDiag));
  detail::append_i32(b, p.n);
  b.push_back(static_cast<char>(p.side));
  return Vertex::from_bytes(std::move(b));
}

// ---- Decoding / validation ----

inline LatticePoint decode_lattice(const GraphSpec& spec, const Vertex& v) {
  const std::string& b = v.bytes();
  if (b.empty() || b[0] != static_cast<char>(Family::Lattice))
    throw EncodingError("not a lattice vertex");
  if (b.size() != 1 + 4 * static_cast<size_t>(spec.dim))
    throw EncodingError("lattice payload has wrong length");
  LatticePoint p;
  p.c.resize(spec.dim);
  for (int i = 0; i < spec.dim; ++i) p.c[i] = detail::read_i32(b, 1 + 4 * i);
  return p;
}

inline LampLineState decode_lamp_line(const Vertex& v) {
  const std::string& b = v.bytes();
  if (b.empty() || b[0] != static_cast<char>(Family::LamplighterLine))
    throw EncodingError("not a lamplighter-line vertex");
  if (b.size() < 5 || (b.size() - 5) % 4 != 0)
    throw EncodingError("lamplighter-line payload has wrong length");
  LampLineState s;
  s.pos = detail::read_i32(b, 1);
  size_t k = (b.size() - 5) / 4;
  s.lamps.resize(k);
  for (size_t i = 0; i < k; ++i) s.lamps[i] = detail::read_i32(b, 5 + 4 * i);
  for (size_t i = 1; i < k; ++i)
    if (s.lamps[i - 1] >= s.lamps[i])
      throw EncodingError("lamps must be strictly increasing");
  return s;
}

inline LampPlaneState decode_lamp_plane(const Vertex& v) {
  const std::string& b = v.bytes();
  if (b.empty() || b[0] != static_cast<char>(Family::LamplighterPlane))
    throw EncodingError("not a lamplighter-plane vertex");
  if (b.size() < 9 || (b.size() - 9) % 8 != 0)
    throw EncodingError("lamplighter-plane payload has wrong length");
  LampPlaneState s;
  s.pos = {detail::read_i32(b, 1), detail::read_i32(b, 5)};
  size_t k = (b.size() - 9) / 8;
  s.lamps.resize(k);
  for (size_t i = 0; i < k; ++i)
    s.lamps[i] = {detail::read_i32(b, 9 + 8 * i), detail::read_i32(b, 13 + 8 * i)};
  for (size_t i = 1; i < k; ++i)
    if (!(s.lamps[i - 1] < s.lamps[i]))
      throw EncodingError("lamps must be strictly increasing lexicographically");
  return s;
}

// 'a' generates the order-2 factor; 'b' and 'B' (= b^-1) the order-3 factor.
inline bool is_a_factor(char c) { return c == 'a'; }

inline std::string decode_word23(const Vertex& v) {
  const std::string& b = v.bytes();
  if (b.empty() || b[0] != static_cast<char>(Family::FreeProduct23))
    throw EncodingError("not a free-product vertex");
  std::string w = b.substr(1);
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 'a' && w[i] != 'b' && w[i] != 'B')
      throw EncodingError("word letter must be one of a, b, B");
    if (i > 0 && is_a_factor(w[i - 1]) == is_a_factor(w[i]))
      throw EncodingError("word is not reduced (consecutive letters from one factor)");
  }
  return w;
}

inline std::string decode_tree_word(const GraphSpec& spec, const Vertex& v) {
  const std::string& b = v.bytes();
  if (b.empty() || b[0] != static_cast<char>(Family::RegularTree))
    throw EncodingError("not a tree vertex");
  std::string w = b.substr(1);
  for (size_t i = 0; i < w.size(); ++i) {
    if (static_cast<uint8_t>(w[i]) >= static_cast<uint8_t>(spec.tree_degree))
      throw EncodingError("tree letter out of range for degree");
    if (i > 0 && w[i - 1] == w[i])
      throw EncodingError("word is not reduced (repeated letter)");
  }
  return w;
}

inline LadderPoint decode_ladder(const Vertex& v) {
  const std::string& b = v.bytes();
  if (b.empty() || b[0] != static_cast<char>(Family::LadderDiag))
    throw EncodingError("not a ladder vertex");
  if (b.size() != 6) throw EncodingError("ladder payload has wrong length");
  LadderPoint p;
  p.n = detail::read_i32(b, 1);
  p.side = static_cast<uint8_t>(b[5]);
  if (p.side != 0 && p.side != 1) throw EncodingError("ladder side must be 0 or 1");
  return p;
}

// ---- Core operations ----

inline Vertex origin(const GraphSpec& spec) {
  switch (spec.family) {
    case Family::Lattice: {
      LatticePoint p;
      p.c.assign(spec.dim, 0);
      return encode_lattice(spec, p);
    }
    case Family::LamplighterLine:
      return encode_lamp_line({});
    case Family::LamplighterPlane:
      return encode_lamp_plane({});
    case Family::FreeProduct23:
      return encode_word(Family::FreeProduct23, "");
    case Family::RegularTree:
      return encode_word(Family::RegularTree, "");
    case Family::LadderDiag:
      return encode_ladder({});
  }
  throw std::logic_error("unknown family");
}

// encode is the identity on the canonical byte form; decode validates.
inline std::string encode(const Vertex& v) { return v.bytes(); }

inline Vertex decode(const GraphSpec& spec, const std::string& bytes) {
  Vertex v = Vertex::from_bytes(bytes);
  switch (spec.family) {
    case Family::Lattice:
      decode_lattice(spec, v);
      break;
    case Family::LamplighterLine:
      decode_lamp_line(v);
      break;
    case Family::LamplighterPlane:
      decode_lamp_plane(v);
      break;
    case Family::FreeProduct23:
      decode_word23(v);
      break;
    case Family::RegularTree:
      decode_tree_word(spec, v);
      break;
    case Family::LadderDiag:
      decode_ladder(v);
      break;
  }
  return v;
}

// Appends one generator to a reduced word in C2 * C3, reducing on the fly:
// a*a = e, b*b = B, B*B = b, b*B = B*b = e.
inline std::string word23_append(const std::string& w, char s) {
  if (w.empty() || is_a_factor(w.back()) != is_a_factor(s)) return w + s;
  char last = w.back();
  std::string out = w.substr(0, w.size() - 1);
  if (last == 'a') return out;                     // a*a = e
  if (last != s) return out;                       // b*B = B*b = e
  out.push_back(last == 'b' ? 'B' : 'b');          // b*b = B, B*B = b
  return out;
}

inline std::vector<Vertex> neighbors(const GraphSpec& spec, const Vertex& v) {
  std::vector<Vertex> out;
  switch (spec.family) {
    case Family::Lattice: {
      LatticePoint p = decode_lattice(spec, v);
      out.reserve(spec.generators.size());
      for (const auto& g : spec.generators) {
        LatticePoint q = p;
        for (int i = 0; i < spec.dim; ++i) q.c[i] += g[i];
        out.push_back(encode_lattice(spec, q));
      }
      break;
    }
    case Family::LamplighterLine: {
      LampLineState s = decode_lamp_line(v);
      out.reserve(8);
      for (int dir : {1, -1}) {
        for (int t_here : {0, 1}) {
          for (int t_there : {0, 1}) {
            LampLineState n = s;
            if (t_here) detail::toggle_sorted(n.lamps, s.pos);
            n.pos = s.pos + dir;
            if (t_there) detail::toggle_sorted(n.lamps, n.pos);
            out.push_back(encode_lamp_line(n));
          }
        }
      }
      break;
    }
    case Family::LamplighterPlane: {
      LampPlaneState s = decode_lamp_plane(v);
      out.reserve(16);
      static constexpr std::array<PlaneCoord, 4> dirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
      for (const auto& d : dirs) {
        for (int t_here : {0, 1}) {
          for (int t_there : {0, 1}) {
            LampPlaneState n = s;
            if (t_here) detail::toggle_sorted(n.lamps, s.pos);
            n.pos = {s.pos[0] + d[0], s.pos[1] + d[1]};
            if (t_there) detail::toggle_sorted(n.lamps, n.pos);
            out.push_back(encode_lamp_plane(n));
          }
        }
      }
      break;
    }
    case Family::FreeProduct23: {
      std::string w = decode_word23(v);
      for (char s : {'a', 'b', 'B'})
        out.push_back(encode_word(Family::FreeProduct23, word23_append(w, s)));
      break;
    }
    case Family::RegularTree: {
      std::string w = decode_tree_word(spec, v);
      out.reserve(spec.tree_degree);
      for (int s = 0; s < spec.tree_degree; ++s) {
        if (!w.empty() && w.back() == static_cast<char>(s)) {
          out.push_back(encode_word(Family::RegularTree, w.substr(0, w.size() - 1)));
        } else {
          out.push_back(encode_word(Family::RegularTree, w + static_cast<char>(s)));
        }
      }
      break;
    }
    case Family::LadderDiag: {
      LadderPoint p = decode_ladder(v);
      out.reserve(5);
      out.push_back(encode_ladder({p.n, static_cast<uint8_t>(1 - p.side)}));
      for (int d : {1, -1}) {
        out.push_back(encode_ladder({p.n + d, p.side}));
        out.push_back(encode_ladder({p.n + d, static_cast<uint8_t>(1 - p.side)}));
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- Graph-spec grammar ----
//
//   z:<d>[:std|diag|custom=(x,y);(x,y);...]   (std when omitted)
//   ll-z | ll-z2 | free23 | tree:<k> | ladder

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

inline int64_t parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  size_t used = 0;
  int64_t x = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("trailing junk after integer: " + s);
  return x;
}

inline std::vector<int32_t> parse_vector(const std::string& s, int d) {
  // "(x,y,...)" with exactly d components
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("generator vector must be parenthesized: " + s);
  auto comps = split(s.substr(1, s.size() - 2), ',');
  if (static_cast<int>(comps.size()) != d)
    throw std::invalid_argument("generator vector has wrong dimension: " + s);
  std::vector<int32_t> v;
  for (const auto& c : comps) v.push_back(static_cast<int32_t>(parse_int(c)));
  return v;
}

}  // namespace detail

inline GraphSpec parse_graph_spec(const std::string& text) {
  if (text == "ll-z") return GraphSpec::lamplighter_line();
  if (text == "ll-z2") return GraphSpec::lamplighter_plane();
  if (text == "free23") return GraphSpec::free_product_23();
  if (text == "ladder") return GraphSpec::ladder_diag();
  auto parts = detail::split(text, ':');
  if (parts[0] == "tree") {
    if (parts.size() != 2) throw std::invalid_argument("expected tree:<k>");
    return GraphSpec::regular_tree(static_cast<int>(detail::parse_int(parts[1])));
  }
  if (parts[0] == "z") {
    if (parts.size() < 2 || parts.size() > 3)
      throw std::invalid_argument("expected z:<d>[:std|diag|custom=...]");
    int d = static_cast<int>(detail::parse_int(parts[1]));
    std::string gens = parts.size() == 3 ? parts[2] : "std";
    if (gens == "std") return GraphSpec::lattice_std(d);
    if (gens == "diag") {
      if (d != 2) throw std::invalid_argument("diag generators require d=2");
      return GraphSpec::lattice_diag();
    }
    if (gens.rfind("custom=", 0) == 0) {
      GeneratorSet gs;
      for (const auto& tok : detail::split(gens.substr(7), ';'))
        gs.push_back(detail::parse_vector(tok, d));
      return GraphSpec::lattice(d, std::move(gs));
    }
    throw std::invalid_argument("unknown lattice generator set: " + gens);
  }
  throw std::invalid_argument("unknown graph spec: " + text);
}

inline std::string GraphSpec::to_string() const {
  switch (family) {
    case Family::Lattice: {
      GraphSpec std_spec = GraphSpec::lattice_std(dim);
      if (generators == std_spec.generators) return "z:" + std::to_string(dim) + ":std";
      if (dim == 2 && generators == GraphSpec::lattice_diag().generators)
        return "z:2:diag";
      std::ostringstream os;
      os << "z:" << dim << ":custom=";
      for (size_t i = 0; i < generators.size(); ++i) {
        if (i) os << ';';
        os << '(';
        for (int j = 0; j < dim; ++j) {
          if (j) os << ',';
          os << generators[i][j];
        }
        os << ')';
      }
      return os.str();
    }
    case Family::LamplighterLine:
      return "ll-z";
    case Family::LamplighterPlane:
      return "ll-z2";
    case Family::FreeProduct23:
      return "free23";
    case Family::RegularTree:
      return "tree:" + std::to_string(tree_degree);
    case Family::LadderDiag:
      return "ladder";
  }
  throw std::logic_error("unknown family");
}

// ---- Vertex literals ----
//
//   lattice  "x,y"            lamplighter line  "pos=3;lamps=-1,0,4"
//   ladder   "n,side"         lamplighter plane "pos=1,2;lamps=(0,0),(1,0)"
//   free23   "e" or "abaB"    tree              "e" or "g1g3g2"

inline std::string format_vertex(const GraphSpec& spec, const Vertex& v) {
  std::ostringstream os;
  switch (spec.family) {
    case Family::Lattice: {
      LatticePoint p = decode_lattice(spec, v);
      for (int i = 0; i < spec.dim; ++i) {
        if (i) os << ',';
        os << p.c[i];
      }
      break;
    }
    case Family::LamplighterLine: {
      LampLineState s = decode_lamp_line(v);
      os << "pos=" << s.pos << ";lamps=";
      for (size_t i = 0; i < s.lamps.size(); ++i) {
        if (i) os << ',';
        os << s.lamps[i];
      }
      break;
    }
    case Family::LamplighterPlane: {
      LampPlaneState s = decode_lamp_plane(v);
      os << "pos=" << s.pos[0] << ',' << s.pos[1] << ";lamps=";
      for (size_t i = 0; i < s.lamps.size(); ++i) {
        if (i) os << ',';
        os << '(' << s.lamps[i][0] << ',' << s.lamps[i][1] << ')';
      }
      break;
    }
    case Family::FreeProduct23: {
      std::string w = decode_word23(v);
      os << (w.empty() ? "e" : w);
      break;
    }
    case Family::RegularTree: {
      std::string w = decode_tree_word(spec, v);
      if (w.empty()) {
        os << 'e';
      } else {
        for (char c : w) os << 'g' << (static_cast<int>(c) + 1);
      }
      break;
    }
    case Family::LadderDiag: {
      LadderPoint p = decode_ladder(v);
      os << p.n << ',' << static_cast<int>(p.side);
      break;
    }
  }
  return os.str();
}

inline Vertex parse_vertex(const GraphSpec& spec, const std::string& text) {
  switch (spec.family) {
    case Family::Lattice: {
      auto comps = detail::split(text, ',');
      if (static_cast<int>(comps.size()) != spec.dim)
        throw EncodingError("lattice literal needs " + std::to_string(spec.dim) +
                            " comma-separated coordinates");
      LatticePoint p;
      for (const auto& c : comps) p.c.push_back(static_cast<int32_t>(detail::parse_int(c)));
      return encode_lattice(spec, p);
    }
    case Family::LamplighterLine:
    case Family::LamplighterPlane: {
      std::string pos_part, lamp_part;
      bool have_lamps = false;
      for (const auto& field : detail::split(text, ';')) {
        if (field.rfind("pos=", 0) == 0) {
          pos_part = field.substr(4);
        } else if (field.rfind("lamps=", 0) == 0) {
          lamp_part = field.substr(6);
          have_lamps = true;
        } else if (!field.empty()) {
          throw EncodingError("expected pos=...;lamps=... fields");
        }
      }
      if (pos_part.empty()) throw EncodingError("missing pos= field");
      if (spec.family == Family::LamplighterLine) {
        LampLineState s;
        s.pos = static_cast<int32_t>(detail::parse_int(pos_part));
        if (have_lamps && !lamp_part.empty())
          for (const auto& tok : detail::split(lamp_part, ','))
            s.lamps.push_back(static_cast<int32_t>(detail::parse_int(tok)));
        Vertex v = encode_lamp_line(s);
        decode_lamp_line(v);  // enforce strictly increasing lamps
        return v;
      }
      LampPlaneState s;
      auto pc = detail::split(pos_part, ',');
      if (pc.size() != 2) throw EncodingError("plane pos needs two coordinates");
      s.pos = {static_cast<int32_t>(detail::parse_int(pc[0])),
               static_cast<int32_t>(detail::parse_int(pc[1]))};
      if (have_lamps && !lamp_part.empty()) {
        // split "(x,y),(x,y)" on commas that separate closing/opening parens
        size_t i = 0;
        while (i < lamp_part.size()) {
          size_t close = lamp_part.find(')', i);
          if (lamp_part[i] != '(' || close == std::string::npos)
            throw EncodingError("plane lamps must be (x,y) pairs");
          auto xy = detail::split(lamp_part.substr(i + 1, close - i - 1), ',');
          if (xy.size() != 2) throw EncodingError("plane lamp needs two coordinates");
          s.lamps.push_back({static_cast<int32_t>(detail::parse_int(xy[0])),
                             static_cast<int32_t>(detail::parse_int(xy[1]))});
          i = close + 1;
          if (i < lamp_part.size()) {
            if (lamp_part[i] != ',') throw EncodingError("plane lamps must be comma-separated");
            ++i;
          }
        }
      }
      Vertex v = encode_lamp_plane(s);
      decode_lamp_plane(v);
      return v;
    }
    case Family::FreeProduct23: {
      std::string w = (text == "e") ? "" : text;
      Vertex v = encode_word(Family::FreeProduct23, w);
      decode_word23(v);  // enforce alphabet and reducedness
      return v;
    }
    case Family::RegularTree: {
      std::string w;
      if (text != "e") {
        size_t i = 0;
        while (i < text.size()) {
          if (text[i] != 'g') throw EncodingError("tree literal is g<i> letters, e.g. g1g3");
          size_t j = i + 1;
          while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
          if (j == i + 1) throw EncodingError("tree letter needs an index");
          int idx = static_cast<int>(detail::parse_int(text.substr(i + 1, j - i - 1)));
          if (idx < 1 || idx > spec.tree_degree)
            throw EncodingError("tree letter index out of range");
          w.push_back(static_cast<char>(idx - 1));
          i = j;
        }
      }
      Vertex v = encode_word(Family::RegularTree, w);
      decode_tree_word(spec, v);
      return v;
    }
    case Family::LadderDiag: {
      auto comps = detail::split(text, ',');
      if (comps.size() != 2) throw EncodingError("ladder literal is n,side");
      LadderPoint p;
      p.n = static_cast<int32_t>(detail::parse_int(comps[0]));
      int64_t side = detail::parse_int(comps[1]);
      if (side != 0 && side != 1) throw EncodingError("ladder side must be 0 or 1");
      p.side = static_cast<uint8_t>(side);
      return encode_ladder(p);
    }
  }
  throw std::logic_error("unknown family");
}

// Hex form of the canonical encoding, accepted anywhere a literal is.
inline std::string to_hex(const Vertex& v) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * v.bytes().size());
  for (unsigned char c : v.bytes()) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

inline Vertex from_hex(const GraphSpec& spec, const std::string& hex) {
  if (hex.size() % 2 != 0) throw EncodingError("hex encoding has odd length");
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw EncodingError("invalid hex digit");
  };
  std::string bytes;
  bytes.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2)
    bytes.push_back(static_cast<char>((nib(hex[i]) << 4) | nib(hex[i + 1])));
  return decode(spec, bytes);
}

// Parses either the family literal syntax or "hex:<canonical bytes>".
inline Vertex parse_vertex_any(const GraphSpec& spec, const std::string& text) {
  if (text.rfind("hex:", 0) == 0) return from_hex(spec, text.substr(4));
  return parse_vertex(spec, text);
}

}  // namespace vtg

template <>
struct std::hash<vtg::Vertex> {
  size_t operator()(const vtg::Vertex& v) const {
    return std::hash<std::string>{}(v.bytes());
  }
};
