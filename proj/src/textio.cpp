#include "orth/textio.hpp"

#include <cctype>
#include <limits>
#include <set>

namespace orth {

SyntaxError::SyntaxError(int line, int column, const std::string& what)
    : Error("syntax-error", "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

char dir_char(int d) { return d > 0 ? '+' : (d < 0 ? '-' : '0'); }

template <class T, class F>
std::string join(const std::vector<T>& xs, F f, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += f(xs[i]);
  }
  return s;
}

std::string ints(const std::vector<Int>& v) {
  return "(" + join(v, [](Int x) { return std::to_string(x); }) + ")";
}

std::string ints(const std::vector<int>& v) {
  return "(" + join(v, [](int x) { return std::to_string(x); }) + ")";
}

std::string dirs(const std::vector<int>& v) {
  return "(" + join(v, [](int d) { return std::string(1, dir_char(d)); }) + ")";
}

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  [[noreturn]] void error(const std::string& what) const { error_at(pos_, what); }

  [[noreturn]] void error_at(std::size_t at, const std::string& what) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(line, col, what);
  }

  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return pos_ >= s_.size();
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  std::size_t pos() {
    skip();
    return pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'" + found());
  }

  // letters, digits and '-' starting with a letter
  std::string word() {
    skip();
    const std::size_t start = pos_;
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_]))) error("expected a keyword" + found());
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void keyword(const std::string& k) {
    const std::size_t at = pos();
    if (word() != k) error_at(at, "expected '" + k + "'");
  }

  // key= with no space before '='
  void field(const std::string& k) {
    keyword(k);
    if (pos_ >= s_.size() || s_[pos_] != '=') error("expected '=' after " + k);
    ++pos_;
  }

  // the next token is the keyword k followed by '='
  bool at_field(const std::string& k) {
    skip();
    return s_.substr(pos_, k.size() + 1) == k + "=";
  }

  Int integer() {
    skip();
    const std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error_at(start, "expected an integer");
    unsigned long long v = 0;
    const unsigned long long lim = static_cast<unsigned long long>(std::numeric_limits<Int>::max()) + (neg ? 1 : 0);
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned long long>(s_[pos_] - '0');
      if (v > lim) error_at(start, "integer out of range");
      ++pos_;
    }
    return neg ? static_cast<Int>(0 - v) : static_cast<Int>(v);
  }

  int small(int lo, int hi, const std::string& what) {
    const std::size_t at = pos();
    const Int v = integer();
    if (v < lo || v > hi) error_at(at, what + " out of range");
    return static_cast<int>(v);
  }

  int direction() {
    skip();
    if (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '+' || c == '-' || c == '0') {
        ++pos_;
        // a lone symbol, not the start of a number
        if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) error_at(pos_ - 1, bad_dir());
        return c == '+' ? 1 : (c == '-' ? -1 : 0);
      }
    }
    error(bad_dir());
  }

  template <class F>
  void list(char open, char close, F item) {
    expect(open);
    if (accept(close)) return;
    do {
      item();
    } while (accept(','));
    expect(close);
  }

  std::string found() {
    skip();
    if (pos_ >= s_.size()) return ", found end of input";
    return std::string(", found '") + s_[pos_] + "'";
  }

  void finish() {
    if (!done()) error("unexpected trailing input");
  }

 private:
  std::string bad_dir() { return "direction must be one of '+', '-', '0'" + found(); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Point read_ints(Reader& r) {
  Point v;
  r.list('(', ')', [&] { v.push_back(r.integer()); });
  return v;
}

std::vector<int> read_dirs(Reader& r) {
  std::vector<int> v;
  r.list('(', ')', [&] { v.push_back(r.direction()); });
  return v;
}

Orthant read_orthant(Reader& r) {
  const std::size_t at = r.pos();
  r.keyword("O");
  r.field("base");
  Point base = read_ints(r);
  r.field("dir");
  const std::size_t dat = r.pos();
  std::vector<int> dir = read_dirs(r);
  if (base.empty()) r.error_at(at, "orthant of dimension 0");
  if (dir.size() != base.size())
    r.error_at(dat, "dir has " + std::to_string(dir.size()) + " entries, base has " + std::to_string(base.size()));
  return Orthant{std::move(base), std::move(dir)};
}

void require_dim_at(Reader& r, std::size_t at, int want, int got) {
  if (want != got)
    r.error_at(at, "dimension " + std::to_string(got) + " where " + std::to_string(want) + " was expected");
}

OrthoSet read_set(Reader& r, int want_dim = -1) {
  const std::size_t at = r.pos();
  r.expect('[');
  int n = want_dim;
  if (r.at_field("dim")) {
    r.field("dim");
    const std::size_t dat = r.pos();
    const int d = r.small(1, 64, "dimension");
    if (n >= 0) require_dim_at(r, dat, n, d);
    n = d;
    if (!r.accept(',')) {
      r.expect(']');
      return OrthoSet(n);
    }
  }
  std::vector<Orthant> ps;
  if (!r.accept(']')) {
    do {
      const std::size_t oat = r.pos();
      Orthant L = read_orthant(r);
      if (n < 0) n = L.dim();
      require_dim_at(r, oat, n, L.dim());
      ps.push_back(std::move(L));
    } while (r.accept(','));
    r.expect(']');
  }
  if (n < 0) r.error_at(at, "empty set needs dim=N");
  return OrthoSet::from_pieces(n, std::move(ps));
}

Isometry read_isometry(Reader& r) {
  const std::size_t at = r.pos();
  r.expect('(');
  Isometry iso;
  iso.shift = read_ints(r);
  r.expect(';');
  std::vector<int> perm;
  r.list('(', ')', [&] { perm.push_back(r.small(0, 63, "axis")); });
  r.expect(';');
  std::vector<int> sign = read_dirs(r);
  r.expect(')');
  if (perm.size() != iso.shift.size() || sign.size() != iso.shift.size())
    r.error_at(at, "isometry parts have different lengths");
  for (int s : sign)
    if (s == 0) r.error_at(at, "isometry signs must be '+' or '-'");
  iso.rot = SignedPerm{std::move(perm), std::move(sign)};
  if (!iso.rot.valid()) fail("invalid-isometry", "perm is not a permutation");
  return iso;
}

Germ read_germ(Reader& r) {
  r.keyword("G");
  r.field("dir");
  Germ g;
  g.dir = read_dirs(r);
  g.frozen.assign(g.dir.size(), 0);
  r.field("frozen");
  std::set<int> seen;
  r.list('{', '}', [&] {
    const std::size_t at = r.pos();
    const int i = r.small(0, static_cast<int>(g.dir.size()) - 1, "axis");
    if (g.dir[i] != 0) r.error_at(at, "frozen entry on a direction axis");
    if (!seen.insert(i).second) r.error_at(at, "axis listed twice");
    r.expect(':');
    g.frozen[i] = r.integer();
  });
  return g;
}

PeiMap read_pei(Reader& r) {
  r.keyword("P");
  r.field("domain");
  OrthoSet domain = read_set(r);
  r.field("pieces");
  std::vector<PeiPiece> ps;
  r.list('[', ']', [&] {
    r.expect('(');
    const std::size_t oat = r.pos();
    Orthant L = read_orthant(r);
    require_dim_at(r, oat, domain.dim(), L.dim());
    r.expect(',');
    r.field("iso");
    const std::size_t iat = r.pos();
    Isometry iso = read_isometry(r);
    require_dim_at(r, iat, domain.dim(), iso.dim());
    r.expect(')');
    ps.push_back({std::move(L), std::move(iso)});
  });
  return make_pei(domain, std::move(ps), Require::Map);
}

const std::vector<GenKind>& all_kinds() {
  static const std::vector<GenKind> ks{GenKind::Transposition,   GenKind::Cycle,           GenKind::SingleOrthant,
                                       GenKind::PeiTranslation,  GenKind::UnitTranslation, GenKind::Endotranslation,
                                       GenKind::UnitEndotranslation};
  return ks;
}

Generator read_generator(Reader& r) {
  const std::size_t at = r.pos();
  const std::string name = r.word();
  Generator g;
  bool known = false;
  for (GenKind k : all_kinds())
    if (kind_name(k) == name) {
      g.kind = k;
      known = true;
    }
  if (!known) r.error_at(at, "unknown generator '" + name + "'");
  r.field("orthants");
  int n = -1;
  r.list('[', ']', [&] {
    const std::size_t oat = r.pos();
    g.orthants.push_back(read_orthant(r));
    if (n < 0) n = g.orthants.back().dim();
    require_dim_at(r, oat, n, g.orthants.back().dim());
  });
  if (g.orthants.empty()) r.error_at(at, "generator without orthants");
  if (r.at_field("isos")) {
    r.field("isos");
    r.list('[', ']', [&] {
      const std::size_t iat = r.pos();
      g.isos.push_back(read_isometry(r));
      require_dim_at(r, iat, n, g.isos.back().dim());
    });
  }
  if (r.at_field("axes")) {
    r.field("axes");
    r.list('(', ')', [&] { g.axes.push_back(r.small(0, n - 1, "axis")); });
  }
  if (r.at_field("inverted")) {
    r.field("inverted");
    g.inverted = r.small(0, 1, "flag") == 1;
  }
  return g;
}

ColoredGraph read_graph(Reader& r) {
  std::map<int, int> color;
  std::vector<std::pair<int, int>> edges;
  std::size_t first = r.pos();
  while (!r.done()) {
    const std::size_t at = r.pos();
    const std::string k = r.word();
    if (k == "V") {
      while (std::isdigit(static_cast<unsigned char>(r.peek()))) {
        const std::size_t vat = r.pos();
        const int v = r.small(0, 1 << 20, "vertex");
        r.expect(':');
        const int c = r.small(0, 1 << 20, "color");
        if (!color.emplace(v, c).second) r.error_at(vat, "vertex " + std::to_string(v) + " listed twice");
      }
    } else if (k == "E") {
      const int a = r.small(0, 1 << 20, "vertex");
      const int b = r.small(0, 1 << 20, "vertex");
      edges.emplace_back(a, b);
    } else {
      r.error_at(at, "expected 'V' or 'E'");
    }
  }
  std::vector<int> cs;
  for (const auto& [v, c] : color) {
    if (v != static_cast<int>(cs.size())) r.error_at(first, "vertex " + std::to_string(cs.size()) + " is missing");
    cs.push_back(c);
  }
  return make_colored_graph(std::move(cs), std::move(edges));
}

template <class T, class F>
T parse_whole(std::string_view text, F f) {
  Reader r(text);
  T out = f(r);
  r.finish();
  return out;
}

}  // namespace

std::string serialize(const Orthant& L) { return "O base=" + ints(L.base) + " dir=" + dirs(L.dir); }

std::string serialize(const OrthoSet& S) {
  if (S.empty()) return "[dim=" + std::to_string(S.dim()) + "]";
  return "[" + join(S.pieces(), [](const Orthant& L) { return serialize(L); }, ", ") + "]";
}

std::string serialize(const Germ& g) {
  std::string s = "G dir=" + dirs(g.dir) + " frozen={";
  bool first = true;
  for (int i = 0; i < g.dim(); ++i) {
    if (g.dir[i] != 0) continue;
    if (!first) s += ",";
    first = false;
    s += std::to_string(i) + ":" + std::to_string(g.frozen[i]);
  }
  return s + "}";
}

std::string serialize(const Isometry& iso) {
  return "(" + ints(iso.shift) + ";" + ints(iso.rot.image) + ";" + dirs(iso.rot.sign) + ")";
}

std::string serialize(const PeiMap& g) {
  return "P domain=" + serialize(g.domain) + " pieces=[" +
         join(g.pieces, [](const PeiPiece& p) { return "(" + serialize(p.dom) + ", iso=" + serialize(p.iso) + ")"; },
              ", ") +
         "]";
}

std::string serialize(const Generator& g) {
  std::string s = kind_name(g.kind) + " orthants=[" +
                  join(g.orthants, [](const Orthant& L) { return serialize(L); }, ", ") + "]";
  if (!g.isos.empty()) s += " isos=[" + join(g.isos, [](const Isometry& i) { return serialize(i); }, ", ") + "]";
  if (!g.axes.empty()) s += " axes=" + ints(g.axes);
  if (g.inverted) s += " inverted=1";
  return s;
}

std::string serialize(const ColoredGraph& g) {
  std::string s = "V";
  for (int v = 0; v < g.vertices(); ++v) s += " " + std::to_string(v) + ":" + std::to_string(g.color[v]);
  s += "\n";
  for (const auto& [a, b] : g.edges) s += "E " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return s;
}

std::string serialize(const GermMatrix& m) {
  std::string s;
  for (const auto& [germ, row] : m.rows) s += "R " + serialize(germ) + " = " + ints(row) + "\n";
  return s;
}

Point parse_point(std::string_view text) { return parse_whole<Point>(text, read_ints); }

Orthant parse_orthant(std::string_view text) { return parse_whole<Orthant>(text, read_orthant); }

OrthoSet parse_set(std::string_view text) {
  return parse_whole<OrthoSet>(text, [](Reader& r) {
    if (r.peek() == 'O') return OrthoSet::of(read_orthant(r));
    return read_set(r);
  });
}

Germ parse_germ(std::string_view text) { return parse_whole<Germ>(text, read_germ); }
Isometry parse_isometry(std::string_view text) { return parse_whole<Isometry>(text, read_isometry); }
PeiMap parse_pei(std::string_view text) { return parse_whole<PeiMap>(text, read_pei); }
Generator parse_generator(std::string_view text) { return parse_whole<Generator>(text, read_generator); }
ColoredGraph parse_graph(std::string_view text) { return parse_whole<ColoredGraph>(text, read_graph); }

Record parse_record(std::string_view text) {
  Reader r(text);
  const char c = r.peek();
  if (c == '[') return parse_set(text);
  if (c == 'V' || c == 'E') return parse_graph(text);
  if (c == '\0') r.error("empty input");
  const std::size_t at = r.pos();
  if (!std::isalpha(static_cast<unsigned char>(c))) r.error("expected a record");
  const std::string k = r.word();
  if (k == "O") return parse_orthant(text);
  if (k == "G") return parse_germ(text);
  if (k == "P") return parse_pei(text);
  for (GenKind g : all_kinds())
    if (kind_name(g) == k) return parse_generator(text);
  r.error_at(at, "unknown record '" + k + "'");
}

}  // namespace orth
