#include "sqcore/vh_complex.hpp"

#include <algorithm>
#include <sstream>

#include "sqcore/errors.hpp"

namespace sqcore {

const char* to_string(Color c) noexcept { return c == Color::kBlack ? "black" : "red"; }

VHComplex::VHComplex(int genus, std::vector<std::string> vertex_labels, std::vector<VEdge> edges,
                     std::vector<VSquare> squares)
    : genus_(genus),
      vertex_labels_(std::move(vertex_labels)),
      edges_(std::move(edges)),
      squares_(std::move(squares)) {
  const int nv = vertex_count();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& x = edges_[e];
    if (x.tail < 0 || x.tail >= nv || x.head < 0 || x.head >= nv) {
      throw Error(ErrorKind::kIncidence, "edge " + std::to_string(e) + " has an unknown endpoint");
    }
  }
  for (std::size_t s = 0; s < squares_.size(); ++s) {
    const auto& sq = squares_[s];
    for (int k = 0; k < 4; ++k) {
      const Side& a = sq.sides[k];
      const Side& b = sq.sides[(k + 1) % 4];
      if (a.edge < 0 || a.edge >= edge_count() || b.edge < 0 || b.edge >= edge_count()) {
        throw Error(ErrorKind::kIncidence, "square " + std::to_string(s) + " names an unknown edge");
      }
      const int end_a = a.forward ? edges_[a.edge].head : edges_[a.edge].tail;
      const int start_b = b.forward ? edges_[b.edge].tail : edges_[b.edge].head;
      if (end_a != start_b) {
        throw Error(ErrorKind::kIncidence, "square " + std::to_string(s) + " boundary is not closed");
      }
      if (edges_[a.edge].color == edges_[b.edge].color) {
        throw Error(ErrorKind::kIncidence, "square " + std::to_string(s) + " boundary does not alternate colors");
      }
    }
  }
  index();
}

void VHComplex::index() {
  edge_squares_.assign(edges_.size(), {});
  vertex_corners_.assign(vertex_labels_.size(), {});
  vertex_edges_.assign(vertex_labels_.size(), {});
  for (std::size_t s = 0; s < squares_.size(); ++s) {
    for (int k = 0; k < 4; ++k) {
      edge_squares_[squares_[s].sides[k].edge].emplace_back(static_cast<int>(s), k);
      vertex_corners_[corner(static_cast<int>(s), k)].emplace_back(static_cast<int>(s), k);
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    vertex_edges_[edges_[e].tail].push_back(static_cast<int>(e));
    if (edges_[e].head != edges_[e].tail) vertex_edges_[edges_[e].head].push_back(static_cast<int>(e));
  }
}

int VHComplex::edge_count(Color c) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [c](const VEdge& e) { return e.color == c; }));
}

int VHComplex::corner(int square, int k) const {
  const Side& sd = squares_.at(square).sides[k];
  return sd.forward ? edges_[sd.edge].tail : edges_[sd.edge].head;
}

VHComplex VHComplex::swap_colors() const {
  VHComplex c = *this;
  for (auto& e : c.edges_) e.color = other(e.color);
  return c;
}

VHComplex VHComplex::with_genus(int genus) const {
  VHComplex c = *this;
  c.genus_ = genus;
  return c;
}

std::string VHComplex::serialize() const {
  std::ostringstream out;
  auto tail_label = [&out](const std::string& l) {
    if (!l.empty()) out << ' ' << l;
    out << '\n';
  };
  out << "vhcomplex 1\n";
  out << "genus " << genus_ << '\n';
  out << "vertices " << vertex_count() << '\n';
  for (int v = 0; v < vertex_count(); ++v) {
    out << "v " << v;
    tail_label(vertex_labels_[v]);
  }
  out << "edges " << edge_count() << '\n';
  for (int e = 0; e < edge_count(); ++e) {
    const auto& x = edges_[e];
    out << "e " << e << ' ' << to_string(x.color) << ' ' << x.tail << ' ' << x.head;
    tail_label(x.label);
  }
  out << "squares " << square_count() << '\n';
  for (int s = 0; s < square_count(); ++s) {
    out << "s " << s;
    for (const auto& sd : squares_[s].sides) out << ' ' << sd.edge << (sd.forward ? '+' : '-');
    tail_label(squares_[s].label);
  }
  out << "end\n";
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-empty line with '#' comments removed.
  bool next(std::string& line) {
    while (pos_ <= text_.size()) {
      const std::size_t nl = text_.find('\n', pos_);
      std::string_view l = text_.substr(pos_, nl == std::string_view::npos ? std::string_view::npos : nl - pos_);
      pos_ = nl == std::string_view::npos ? text_.size() + 1 : nl + 1;
      ++line_;
      while (!l.empty() && (l.back() == '\r' || l.back() == ' ')) l.remove_suffix(1);
      if (l.empty() || l.front() == '#') continue;
      line.assign(l);
      return true;
    }
    return false;
  }
  int line_no() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 0;
};

std::string rest_of(std::istringstream& in) {
  std::string rest;
  std::getline(in, rest);
  const auto p = rest.find_first_not_of(' ');
  return p == std::string::npos ? std::string() : rest.substr(p);
}

int read_count(LineReader& r, const char* keyword) {
  std::string line;
  if (!r.next(line)) throw ParseError(r.line_no(), std::string("missing '") + keyword + "' header");
  std::istringstream in(line);
  std::string kw;
  long long n = -1;
  if (!(in >> kw >> n) || kw != keyword || n < 0 || n > 100000000) {
    throw ParseError(r.line_no(), std::string("expected '") + keyword + " N'");
  }
  return static_cast<int>(n);
}

}  // namespace

VHComplex VHComplex::parse(std::string_view text) {
  LineReader r(text);
  std::string line;
  if (!r.next(line) || line != "vhcomplex 1") throw ParseError(r.line_no(), "expected 'vhcomplex 1' header");
  const int genus = read_count(r, "genus");
  const int nv = read_count(r, "vertices");
  std::vector<std::string> labels(nv);
  for (int i = 0; i < nv; ++i) {
    if (!r.next(line)) throw ParseError(r.line_no(), "truncated vertex list");
    std::istringstream in(line);
    std::string kw;
    int id = -1;
    if (!(in >> kw >> id) || kw != "v" || id != i) throw ParseError(r.line_no(), "expected 'v " + std::to_string(i) + "'");
    labels[i] = rest_of(in);
  }
  const int ne = read_count(r, "edges");
  std::vector<VEdge> edges(ne);
  for (int i = 0; i < ne; ++i) {
    if (!r.next(line)) throw ParseError(r.line_no(), "truncated edge list");
    std::istringstream in(line);
    std::string kw, color;
    int id = -1;
    VEdge e;
    if (!(in >> kw >> id >> color >> e.tail >> e.head) || kw != "e" || id != i) {
      throw ParseError(r.line_no(), "expected 'e " + std::to_string(i) + " COLOR TAIL HEAD'");
    }
    if (color == "black") {
      e.color = Color::kBlack;
    } else if (color == "red") {
      e.color = Color::kRed;
    } else {
      throw ParseError(r.line_no(), "color must be black or red");
    }
    if (e.tail < 0 || e.tail >= nv || e.head < 0 || e.head >= nv) throw ParseError(r.line_no(), "endpoint out of range");
    e.label = rest_of(in);
    edges[i] = std::move(e);
  }
  const int ns = read_count(r, "squares");
  std::vector<VSquare> squares(ns);
  for (int i = 0; i < ns; ++i) {
    if (!r.next(line)) throw ParseError(r.line_no(), "truncated square list");
    std::istringstream in(line);
    std::string kw;
    int id = -1;
    if (!(in >> kw >> id) || kw != "s" || id != i) throw ParseError(r.line_no(), "expected 's " + std::to_string(i) + "'");
    VSquare sq;
    for (int k = 0; k < 4; ++k) {
      std::string tok;
      if (!(in >> tok) || tok.size() < 2 || (tok.back() != '+' && tok.back() != '-')) {
        throw ParseError(r.line_no(), "square side must look like 12+ or 12-");
      }
      try {
        std::size_t used = 0;
        sq.sides[k].edge = std::stoi(tok.substr(0, tok.size() - 1), &used);
        if (used != tok.size() - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(r.line_no(), "bad edge id in square side");
      }
      if (sq.sides[k].edge < 0 || sq.sides[k].edge >= ne) throw ParseError(r.line_no(), "edge id out of range");
      sq.sides[k].forward = tok.back() == '+';
    }
    sq.label = rest_of(in);
    squares[i] = std::move(sq);
  }
  if (!r.next(line) || line != "end") throw ParseError(r.line_no(), "expected 'end'");
  try {
    return VHComplex(genus, std::move(labels), std::move(edges), std::move(squares));
  } catch (const Error& e) {
    throw ParseError(r.line_no(), e.what());
  }
}

}  // namespace sqcore
