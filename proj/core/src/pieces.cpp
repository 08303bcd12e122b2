#include "sqcore/pieces.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

#include "sqcore/analyzer.hpp"
#include "sqcore/errors.hpp"
#include "sqcore/links.hpp"

namespace sqcore {

const char* to_string(TwoPieceType t) noexcept {
  switch (t) {
    case TwoPieceType::kDisc: return "disc";
    case TwoPieceType::kAnnulus: return "annulus";
    case TwoPieceType::kPants: return "pants";
  }
  return "?";
}

TwoPieceType two_piece_type(const VHComplex& c, int edge) {
  const std::size_t d = c.edge_squares(edge).size();
  if (d < 1 || d > 3) {
    throw Error(ErrorKind::kDegreeOutOfRange, "edge " + std::to_string(edge) + " lies in " + std::to_string(d) + " squares");
  }
  return static_cast<TwoPieceType>(d - 1);
}

BoundaryPattern boundary_pattern(const VHComplex& c, int vertex) {
  const VertexLink link = vertex_link(c, vertex);
  BoundaryPattern p;
  p.link_type = classify_link(link);
  if (p.link_type == 0) {
    throw Error(ErrorKind::kInvalidLink, "vertex " + std::to_string(vertex) + " has a link with " +
                                             std::to_string(link.vertices.size()) + " vertices and " +
                                             std::to_string(link.arcs.size()) + " edges");
  }
  for (const auto& lv : link.vertices) p.pieces.push_back(PieceEnd{lv.edge, lv.at_tail});
  for (const auto& arc : link.arcs) {
    int a = arc.a, b = arc.b;
    if (link.vertices[a].color != Color::kBlack) std::swap(a, b);
    p.circles.push_back(Circle{arc.square, p.pieces[a], p.pieces[b]});
  }
  p.genus = 1 - static_cast<int>(p.pieces.size()) + static_cast<int>(p.circles.size());
  return p;
}

std::vector<Region> complement_check(const VHComplex& c, Color color) {
  const Collapse col = collapse(c, other(color));
  const auto deg = col.graph.degrees();
  std::vector<Region> out(col.graph.vertices);
  for (int r = 0; r < col.graph.vertices; ++r) {
    out[r].color = color;
    out[r].boundary_spheres = deg[r];
  }
  for (int v = 0; v < c.vertex_count(); ++v) out[col.vertex_of[v]].three_pieces.push_back(v);
  return out;
}

namespace {

int side_of(const VSquare& s, int edge) {
  for (int k = 0; k < 4; ++k) {
    if (s.sides[k].edge == edge) return k;
  }
  return -1;
}

// True when the two squares, both crossed by the same black and red
// spheres, lie on one pair of lifted spheres in the universal cover: the
// loop running along the black sphere from s to t and back along the red
// one is trivial in the graph obtained by collapsing red edges.
bool same_lifted_pair(const VHComplex& c, const Collapse& col, int s, int t) {
  // Squares along the red sphere from s to t, with the red edges crossed.
  std::map<int, std::pair<int, int>> via{{s, {-1, -1}}};
  std::deque<int> queue{s};
  while (!queue.empty() && !via.count(t)) {
    const int q = queue.front();
    queue.pop_front();
    for (const auto& sd : c.square(q).sides) {
      if (c.edge(sd.edge).color != Color::kRed) continue;
      for (const auto& [n, k] : c.edge_squares(sd.edge)) {
        if (via.emplace(n, std::make_pair(q, sd.edge)).second) queue.push_back(n);
      }
    }
  }
  std::vector<int> squares, crossed;
  for (int q = t; q != s; q = via.at(q).first) {
    squares.push_back(q);
    crossed.push_back(via.at(q).second);
  }
  squares.push_back(s);
  std::reverse(squares.begin(), squares.end());
  std::reverse(crossed.begin(), crossed.end());

  auto step = [&](int q, int k) {
    const Side& sd = c.square(q).sides[k % 4];
    return std::make_pair(col.edge_of[sd.edge], sd.forward != col.flipped[sd.edge] ? 1 : -1);
  };
  const int m = static_cast<int>(crossed.size());
  const auto out0 = step(squares[0], side_of(c.square(squares[0]), crossed[0]) + 3);
  std::vector<std::pair<int, int>> word;
  for (int i = 1; i < m; ++i) word.push_back(step(squares[i], side_of(c.square(squares[i]), crossed[i - 1]) + 1));
  const auto in1 = step(squares[m], side_of(c.square(squares[m]), crossed[m - 1]) + 1);
  if (in1.second == out0.second) word.push_back(out0);

  std::vector<std::pair<int, int>> red;
  for (const auto& x : word) {
    if (!red.empty() && red.back().first == x.first && red.back().second == -x.second) {
      red.pop_back();
    } else {
      red.push_back(x);
    }
  }
  std::size_t lo = 0, hi = red.size();
  while (hi - lo >= 2 && red[lo].first == red[hi - 1].first && red[lo].second == -red[hi - 1].second) {
    ++lo;
    --hi;
  }
  return lo == hi;
}

}  // namespace

PieceDecomposition build_decomposition(const VHComplex& c) {
  PieceDecomposition pd;
  const int g = c.genus();
  pd.genus = g;

  for (int e = 0; e < c.edge_count(); ++e) {
    TwoPiece t;
    t.color = c.edge(e).color;
    t.type = two_piece_type(c, e);
    t.tail = c.edge(e).tail;
    t.head = c.edge(e).head;
    for (const auto& [s, k] : c.edge_squares(e)) t.circles.push_back(s);
    pd.two.push_back(std::move(t));
  }
  for (int s = 0; s < c.square_count(); ++s) {
    OnePiece o;
    const VSquare& sq = c.square(s);
    const int k = c.edge(sq.sides[0].edge).color == Color::kBlack ? 0 : 1;
    o.black = {sq.sides[k].edge, sq.sides[k + 2].edge};
    o.red = {sq.sides[k + 1].edge, sq.sides[(k + 3) % 4].edge};
    for (int i = 0; i < 4; ++i) o.three[i] = c.corner(s, i);
    pd.one.push_back(o);
  }
  std::vector<int> circle_count(c.square_count(), 0);
  for (int v = 0; v < c.vertex_count(); ++v) {
    ThreePiece p{boundary_pattern(c, v)};
    const bool k33 = admissible_links()[p.pattern.link_type - 1].shape.edge_count() == 9;
    if (p.pattern.genus < 0 || p.pattern.genus > 4 || (p.pattern.genus == 4) != k33) {
      throw Error(ErrorKind::kInvalidLink, "3-piece " + std::to_string(v) + " has genus " + std::to_string(p.pattern.genus));
    }
    int discs = 0;
    for (const auto& end : p.pattern.pieces) discs += pd.two[end.piece].type == TwoPieceType::kDisc;
    if (p.pattern.pieces.size() == 2 && discs == 2) {
      throw Error(ErrorKind::kNotStandardForm, "3-piece " + std::to_string(v) + " is bounded by two discs");
    }
    for (const auto& circ : p.pattern.circles) ++circle_count[circ.one_piece];
    pd.three.push_back(std::move(p));
  }
  for (int s = 0; s < c.square_count(); ++s) {
    if (circle_count[s] != 4) {
      throw Error(ErrorKind::kIncidence, "1-piece " + std::to_string(s) + " lies on " +
                                             std::to_string(circle_count[s]) + " boundary patterns");
    }
  }

  for (Color color : {Color::kBlack, Color::kRed}) {
    auto& spheres = pd.certificate.spheres[static_cast<int>(color)];
    for (const auto& h : hyperplanes(c, color)) {
      if (!h.tree) {
        std::string cyc;
        for (int s : h.cycle) cyc += " s" + std::to_string(s);
        throw Error(ErrorKind::kHyperplaneNotTree,
                    std::string(to_string(color)) + " hyperplane through edge " + std::to_string(h.edges.front()) +
                        " has a cycle through" + cyc);
      }
      Sphere sp{color, h.edges, h.squares, 0};
      for (int e : h.edges) sp.euler += 2 - static_cast<int>(c.edge_squares(e).size());
      if (sp.euler != 2) throw Error(ErrorKind::kHyperplaneNotTree, "sphere Euler characteristic " + std::to_string(sp.euler));
      spheres.push_back(std::move(sp));
    }
    if (static_cast<int>(spheres.size()) != 3 * g - 3) {
      throw Error(ErrorKind::kWrongCellCounts, std::to_string(spheres.size()) + " " + to_string(color) +
                                                   " spheres, expected " + std::to_string(3 * g - 3));
    }
    auto regions = complement_check(c, color);
    for (std::size_t r = 0; r < regions.size(); ++r) {
      if (regions[r].boundary_spheres != 3) {
        throw Error(ErrorKind::kComplementNotThreeHoled,
                    std::string(to_string(color)) + " region " + std::to_string(r) + " has " +
                        std::to_string(regions[r].boundary_spheres) + " boundary spheres");
      }
    }
    if (static_cast<int>(regions.size()) != 2 * g - 2) {
      throw Error(ErrorKind::kWrongCellCounts, std::to_string(regions.size()) + " " + to_string(color) +
                                                   " regions, expected " + std::to_string(2 * g - 2));
    }
    pd.certificate.regions[static_cast<int>(color)] = std::move(regions);
  }

  // Lifts of a black and a red sphere meet at most once.
  {
    const Collapse col = collapse(c, Color::kRed);
    const auto reds = hyperplanes(c, Color::kRed);
    std::vector<int> red_class(c.edge_count(), -1);
    for (std::size_t i = 0; i < reds.size(); ++i) {
      for (int e : reds[i].edges) red_class[e] = static_cast<int>(i);
    }
    std::map<std::pair<int, int>, std::vector<int>> shared;
    for (int s = 0; s < c.square_count(); ++s) {
      shared[{col.edge_of[pd.one[s].black[0]], red_class[pd.one[s].red[0]]}].push_back(s);
    }
    for (const auto& [key, squares] : shared) {
      for (std::size_t i = 0; i < squares.size(); ++i) {
        for (std::size_t j = i + 1; j < squares.size(); ++j) {
          if (same_lifted_pair(c, col, squares[i], squares[j])) {
            throw Error(ErrorKind::kNotStandardForm,
                        "black sphere " + std::to_string(key.first) + " and red sphere " + std::to_string(key.second) +
                            " meet twice, in 1-pieces " + std::to_string(squares[i]) + " and " +
                            std::to_string(squares[j]));
          }
        }
      }
    }
  }
  pd.certificate.intersection_number = c.square_count();
  return pd;
}

VHComplex dual_complex(const PieceDecomposition& pd) {
  const int nv = static_cast<int>(pd.three.size());
  std::vector<std::string> labels;
  for (int v = 0; v < nv; ++v) labels.push_back("p" + std::to_string(v));
  std::vector<VEdge> edges;
  for (std::size_t e = 0; e < pd.two.size(); ++e) {
    const TwoPiece& t = pd.two[e];
    edges.push_back(VEdge{t.tail, t.head, t.color, "t" + std::to_string(e)});
  }
  std::vector<std::vector<Circle>> corners(pd.one.size());
  for (const auto& p : pd.three) {
    for (const auto& circ : p.pattern.circles) {
      if (circ.one_piece < 0 || circ.one_piece >= static_cast<int>(pd.one.size())) {
        throw Error(ErrorKind::kIncidence, "circle names an unknown 1-piece");
      }
      corners[circ.one_piece].push_back(circ);
    }
  }
  std::vector<VSquare> squares;
  for (std::size_t s = 0; s < pd.one.size(); ++s) {
    const auto& cs = corners[s];
    const std::string where = "1-piece " + std::to_string(s);
    if (cs.size() != 4) throw Error(ErrorKind::kIncidence, where + " has " + std::to_string(cs.size()) + " corners");
    std::array<bool, 4> used{true, false, false, false};
    auto find = [&](PieceEnd end, bool black) {
      int hit = -1;
      for (int i = 0; i < 4; ++i) {
        if (used[i] || !((black ? cs[i].black : cs[i].red) == end)) continue;
        if (hit != -1) throw Error(ErrorKind::kIncidence, where + " has an ambiguous corner");
        hit = i;
      }
      if (hit == -1) throw Error(ErrorKind::kIncidence, where + " boundary does not close");
      used[hit] = true;
      return cs[hit];
    };
    VSquare sq;
    sq.label = "o" + std::to_string(s);
    const PieceEnd b0 = cs[0].black;
    sq.sides[0] = Side{b0.piece, b0.at_tail};
    const Circle c1 = find(PieceEnd{b0.piece, !b0.at_tail}, true);
    sq.sides[1] = Side{c1.red.piece, c1.red.at_tail};
    const Circle c2 = find(PieceEnd{c1.red.piece, !c1.red.at_tail}, false);
    sq.sides[2] = Side{c2.black.piece, c2.black.at_tail};
    const Circle c3 = find(PieceEnd{c2.black.piece, !c2.black.at_tail}, true);
    sq.sides[3] = Side{c3.red.piece, c3.red.at_tail};
    if (!(PieceEnd{c3.red.piece, !c3.red.at_tail} == cs[0].red)) {
      throw Error(ErrorKind::kIncidence, where + " boundary does not close");
    }
    squares.push_back(sq);
  }
  return VHComplex(pd.genus, std::move(labels), std::move(edges), std::move(squares));
}

namespace {

std::string end_text(const PieceEnd& e) { return std::to_string(e.piece) + (e.at_tail ? "t" : "h"); }

template <class Range>
void list(std::ostream& out, const char* key, const Range& xs) {
  out << ' ' << key;
  for (const auto& x : xs) out << ' ' << x;
}

}  // namespace

std::string PieceDecomposition::serialize() const {
  std::ostringstream out;
  out << "decomposition 1\n";
  out << "genus " << genus << '\n';
  out << "ONE-PIECES " << one.size() << '\n';
  for (std::size_t i = 0; i < one.size(); ++i) {
    out << "o " << i;
    list(out, "black", one[i].black);
    list(out, "red", one[i].red);
    list(out, "three", one[i].three);
    out << '\n';
  }
  out << "TWO-PIECES " << two.size() << '\n';
  for (std::size_t i = 0; i < two.size(); ++i) {
    const TwoPiece& t = two[i];
    out << "t " << i << ' ' << to_string(t.color) << ' ' << to_string(t.type) << ' ' << t.tail << ' ' << t.head;
    list(out, "circles", t.circles);
    out << '\n';
  }
  out << "THREE-PIECES " << three.size() << '\n';
  for (std::size_t i = 0; i < three.size(); ++i) {
    const BoundaryPattern& p = three[i].pattern;
    out << "p " << i << " genus " << p.genus << " link " << p.link_type << " boundary";
    for (const auto& e : p.pieces) out << ' ' << end_text(e);
    out << " circles";
    for (const auto& c : p.circles) out << ' ' << c.one_piece << ':' << end_text(c.black) << '/' << end_text(c.red);
    if (p.pi1_nontrivial()) out << " pi1-nontrivial";
    out << '\n';
  }
  for (Color color : {Color::kBlack, Color::kRed}) {
    const auto& spheres = certificate.spheres[static_cast<int>(color)];
    out << "SPHERES " << to_string(color) << ' ' << spheres.size() << '\n';
    for (std::size_t i = 0; i < spheres.size(); ++i) {
      out << "sphere " << i;
      list(out, "two", spheres[i].two_pieces);
      list(out, "one", spheres[i].one_pieces);
      out << " euler " << spheres[i].euler << '\n';
    }
  }
  for (Color color : {Color::kBlack, Color::kRed}) {
    const auto& regions = certificate.regions[static_cast<int>(color)];
    out << "REGIONS " << to_string(color) << ' ' << regions.size() << '\n';
    for (std::size_t i = 0; i < regions.size(); ++i) {
      out << "region " << i << " boundary " << regions[i].boundary_spheres;
      list(out, "three", regions[i].three_pieces);
      out << '\n';
    }
  }
  out << "INTERSECTION " << certificate.intersection_number << '\n';
  out << "end\n";
  return out.str();
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t pos = 0;
    int no = 0;
    while (pos <= text.size()) {
      const std::size_t nl = text.find('\n', pos);
      std::string_view l = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
      ++no;
      std::istringstream in{std::string(l)};
      std::vector<std::string> toks;
      for (std::string t; in >> t;) toks.push_back(t);
      if (toks.empty() || toks[0][0] == '#') continue;
      lines_.emplace_back(no, std::move(toks));
    }
  }

  // Next line, which must start with the keyword.
  const std::vector<std::string>& expect(const std::string& keyword) {
    if (at_ >= lines_.size()) throw ParseError(last_line(), "expected '" + keyword + "', found end of input");
    const auto& [no, toks] = lines_[at_];
    line_ = no;
    if (toks[0] != keyword) throw ParseError(no, "expected '" + keyword + "'");
    ++at_;
    return toks;
  }
  int line() const { return line_; }
  bool done() const { return at_ == lines_.size(); }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

  int integer(const std::string& tok) const {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size() || v < 0 || v > 100000000) throw std::invalid_argument("range");
      return static_cast<int>(v);
    } catch (const std::exception&) {
      fail("expected a non-negative integer, found '" + tok + "'");
    }
  }

  PieceEnd end(const std::string& tok) const {
    if (tok.size() < 2 || (tok.back() != 't' && tok.back() != 'h')) fail("bad 2-piece end '" + tok + "'");
    return PieceEnd{integer(tok.substr(0, tok.size() - 1)), tok.back() == 't'};
  }

  Color color(const std::string& tok) const {
    if (tok == "black") return Color::kBlack;
    if (tok == "red") return Color::kRed;
    fail("color must be black or red");
  }

 private:
  int last_line() const { return lines_.empty() ? 0 : lines_.back().first; }
  std::vector<std::pair<int, std::vector<std::string>>> lines_;
  std::size_t at_ = 0;
  int line_ = 0;
};

// Integers after `key` up to the next non-numeric token.
std::vector<int> ints_after(const Reader& r, const std::vector<std::string>& toks, std::size_t& i, const char* key) {
  if (i >= toks.size() || toks[i] != key) r.fail(std::string("expected '") + key + "'");
  ++i;
  std::vector<int> out;
  while (i < toks.size() && !toks[i].empty() && std::isdigit(static_cast<unsigned char>(toks[i][0]))) {
    out.push_back(r.integer(toks[i++]));
  }
  return out;
}

int header_count(Reader& r, const char* keyword) {
  const auto& t = r.expect(keyword);
  if (t.size() != 2) r.fail(std::string("expected '") + keyword + " N'");
  return r.integer(t[1]);
}

void check_id(const Reader& r, const std::vector<std::string>& t, std::size_t i) {
  if (t.size() < 2 || r.integer(t[1]) != static_cast<int>(i)) r.fail("expected id " + std::to_string(i));
}

}  // namespace

PieceDecomposition PieceDecomposition::parse(std::string_view text) {
  Reader r(text);
  PieceDecomposition pd;
  {
    const auto& t = r.expect("decomposition");
    if (t.size() != 2 || t[1] != "1") r.fail("unsupported decomposition version");
  }
  pd.genus = header_count(r, "genus");
  const int n1 = header_count(r, "ONE-PIECES");
  for (int i = 0; i < n1; ++i) {
    const auto& t = r.expect("o");
    check_id(r, t, i);
    std::size_t k = 2;
    OnePiece o;
    const auto b = ints_after(r, t, k, "black");
    const auto rd = ints_after(r, t, k, "red");
    const auto th = ints_after(r, t, k, "three");
    if (b.size() != 2 || rd.size() != 2 || th.size() != 4 || k != t.size()) r.fail("1-piece needs 2 black, 2 red, 4 three");
    std::copy(b.begin(), b.end(), o.black.begin());
    std::copy(rd.begin(), rd.end(), o.red.begin());
    std::copy(th.begin(), th.end(), o.three.begin());
    pd.one.push_back(o);
  }
  const int n2 = header_count(r, "TWO-PIECES");
  for (int i = 0; i < n2; ++i) {
    const auto& t = r.expect("t");
    check_id(r, t, i);
    if (t.size() < 6) r.fail("expected 't ID COLOR TYPE TAIL HEAD circles ...'");
    TwoPiece p;
    p.color = r.color(t[2]);
    if (t[3] == "disc") {
      p.type = TwoPieceType::kDisc;
    } else if (t[3] == "annulus") {
      p.type = TwoPieceType::kAnnulus;
    } else if (t[3] == "pants") {
      p.type = TwoPieceType::kPants;
    } else {
      r.fail("2-piece type must be disc, annulus or pants");
    }
    p.tail = r.integer(t[4]);
    p.head = r.integer(t[5]);
    std::size_t k = 6;
    p.circles = ints_after(r, t, k, "circles");
    if (k != t.size()) r.fail("trailing tokens");
    pd.two.push_back(std::move(p));
  }
  const int n3 = header_count(r, "THREE-PIECES");
  for (int i = 0; i < n3; ++i) {
    const auto& t = r.expect("p");
    check_id(r, t, i);
    if (t.size() < 7 || t[2] != "genus" || t[4] != "link" || t[6] != "boundary") {
      r.fail("expected 'p ID genus G link L boundary ...'");
    }
    ThreePiece p;
    p.pattern.genus = r.integer(t[3]);
    p.pattern.link_type = r.integer(t[5]);
    std::size_t k = 7;
    for (; k < t.size() && t[k] != "circles"; ++k) p.pattern.pieces.push_back(r.end(t[k]));
    if (k == t.size()) r.fail("missing 'circles'");
    for (++k; k < t.size() && t[k] != "pi1-nontrivial"; ++k) {
      const auto colon = t[k].find(':');
      const auto slash = t[k].find('/');
      if (colon == std::string::npos || slash == std::string::npos || slash < colon) r.fail("bad circle '" + t[k] + "'");
      p.pattern.circles.push_back(Circle{r.integer(t[k].substr(0, colon)),
                                         r.end(t[k].substr(colon + 1, slash - colon - 1)),
                                         r.end(t[k].substr(slash + 1))});
    }
    pd.three.push_back(std::move(p));
  }
  for (Color color : {Color::kBlack, Color::kRed}) {
    const auto& h = r.expect("SPHERES");
    if (h.size() != 3 || r.color(h[1]) != color) r.fail(std::string("expected 'SPHERES ") + to_string(color) + " N'");
    const int n = r.integer(h[2]);
    for (int i = 0; i < n; ++i) {
      const auto& t = r.expect("sphere");
      check_id(r, t, i);
      std::size_t k = 2;
      Sphere sp;
      sp.color = color;
      sp.two_pieces = ints_after(r, t, k, "two");
      sp.one_pieces = ints_after(r, t, k, "one");
      if (k + 2 != t.size() || t[k] != "euler") r.fail("expected 'euler N'");
      sp.euler = r.integer(t[k + 1]);
      pd.certificate.spheres[static_cast<int>(color)].push_back(std::move(sp));
    }
  }
  for (Color color : {Color::kBlack, Color::kRed}) {
    const auto& h = r.expect("REGIONS");
    if (h.size() != 3 || r.color(h[1]) != color) r.fail(std::string("expected 'REGIONS ") + to_string(color) + " N'");
    const int n = r.integer(h[2]);
    for (int i = 0; i < n; ++i) {
      const auto& t = r.expect("region");
      check_id(r, t, i);
      if (t.size() < 4 || t[2] != "boundary") r.fail("expected 'region ID boundary N three ...'");
      Region reg;
      reg.color = color;
      reg.boundary_spheres = r.integer(t[3]);
      std::size_t k = 4;
      reg.three_pieces = ints_after(r, t, k, "three");
      if (k != t.size()) r.fail("trailing tokens");
      pd.certificate.regions[static_cast<int>(color)].push_back(std::move(reg));
    }
  }
  {
    const auto& t = r.expect("INTERSECTION");
    if (t.size() != 2) r.fail("expected 'INTERSECTION N'");
    pd.certificate.intersection_number = r.integer(t[1]);
  }
  r.expect("end");
  if (!r.done()) r.fail("content after 'end'");

  // Cross references.
  const int nv = n3, ne = n2, ns = n1;
  auto in = [&](int x, int n) { return x >= 0 && x < n; };
  for (const auto& o : pd.one) {
    for (int e : o.black) if (!in(e, ne)) r.fail("1-piece names an unknown 2-piece");
    for (int e : o.red) if (!in(e, ne)) r.fail("1-piece names an unknown 2-piece");
    for (int v : o.three) if (!in(v, nv)) r.fail("1-piece names an unknown 3-piece");
  }
  for (const auto& t : pd.two) {
    if (!in(t.tail, nv) || !in(t.head, nv)) r.fail("2-piece names an unknown 3-piece");
    for (int s : t.circles) if (!in(s, ns)) r.fail("2-piece names an unknown 1-piece");
  }
  for (const auto& p : pd.three) {
    for (const auto& e : p.pattern.pieces) if (!in(e.piece, ne)) r.fail("3-piece names an unknown 2-piece");
    for (const auto& c : p.pattern.circles) {
      if (!in(c.one_piece, ns) || !in(c.black.piece, ne) || !in(c.red.piece, ne)) r.fail("circle names an unknown piece");
    }
  }
  return pd;
}

}  // namespace sqcore
