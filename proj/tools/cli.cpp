#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "sqcore/analyzer.hpp"
#include "sqcore/core_builder.hpp"
#include "sqcore/errors.hpp"
#include "sqcore/instances.hpp"
#include "sqcore/isomorphism.hpp"
#include "sqcore/links.hpp"
#include "sqcore/pieces.hpp"

namespace sqcore::cli {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Failure that already carries its exit code and message.
struct Stop {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Stop{kInputError, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s.empty() ? "-" : s;
}

int exit_code_for(ErrorKind kind);

// Parses a file, naming it in any error.
template <class T>
T parse_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return T::parse(text);
  } catch (const Error& e) {
    throw Stop{exit_code_for(e.kind()), fs::path(path).filename().string() + ": " + e.what()};
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kLetterOutOfRange:
    case ErrorKind::kRankMismatch:
    case ErrorKind::kNotABasis:
    case ErrorKind::kNotTrivalent:
    case ErrorKind::kNotSpanning:
    case ErrorKind::kInvalidCell:
      return kInputError;
    case ErrorKind::kHypothesisViolated:
      return kHypothesis;
    case ErrorKind::kInternalBoundExceeded:
      return kInternal;
    default:
      return kValidationFailed;
  }
}

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  int run() {
    int code = kOk;
    try {
      code = dispatch();
    } catch (const Stop& s) {
      code = s.code;
      err_ << "error: " << s.message << '\n';
    } catch (const HypothesisViolated& e) {
      line("hypothesis VIOLATED " + e.witness().text);
      code = kHypothesis;
      err_ << "error: " << e.what() << '\n';
    } catch (const Error& e) {
      code = exit_code_for(e.kind());
      line(std::string("error ") + e.what());
      err_ << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
      code = kInternal;
      err_ << "error: " << e.what() << '\n';
    }
    if (cfg_.timings) {
      for (const auto& [phase, ms] : timings_) {
        std::ostringstream t;
        t << "time " << phase << ' ' << std::fixed << std::setprecision(3) << ms << " ms";
        line(t.str());
      }
    }
    line("exit " + std::to_string(code));
    out_ << report_.str();
    if (!cfg_.out.empty()) write("report.txt", report_.str());
    return code;
  }

 private:
  int dispatch() {
    const std::string& c = cfg_.command;
    if (c == "random") return cmd_random();
    load();
    if (c == "build") return cmd_build();
    if (c == "validate") return cmd_validate();
    if (c == "pieces") return cmd_pieces();
    if (c == "roundtrip") return cmd_roundtrip();
    if (c == "oracle") return cmd_oracle();
    if (c == "export-dot") return cmd_export_dot();
    throw Stop{kUsage, "unknown command " + c};
  }

  void line(const std::string& s) { report_ << s << '\n'; }

  template <class F>
  auto timed(const std::string& phase, F&& f) {
    const auto start = Clock::now();
    auto result = f();
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
    timings_.emplace_back(phase, static_cast<double>(us) / 1000.0);
    return result;
  }

  void write(const std::string& name, const std::string& text) {
    fs::create_directories(cfg_.out);
    std::ofstream f(fs::path(cfg_.out) / name, std::ios::binary);
    if (!f) throw Stop{kInputError, "cannot write " + (fs::path(cfg_.out) / name).string()};
    f << text;
  }

  void load() {
    if (cfg_.input.empty()) throw Stop{kUsage, cfg_.command + " needs --input"};
    if (cfg_.input2.empty()) {
      if (read_file(cfg_.input).rfind("vhcomplex", 0) != 0) {
        throw Stop{kUsage, cfg_.command + " needs --input2 or a complex file"};
      }
      if (cfg_.command == "oracle") throw Stop{kUsage, "oracle needs two marked graphs"};
      complex_ = parse_file<VHComplex>(cfg_.input);
      if (complex_->genus() == 0) complex_ = complex_->with_genus(cfg_.genus);
      line("instance complex " + fs::path(cfg_.input).filename().string());
      return;
    }
    t1_ = parse_file<MarkedGraph>(cfg_.input);
    t2_ = parse_file<MarkedGraph>(cfg_.input2);
    if (t1_->genus() != t2_->genus()) {
      throw Stop{kInputError, "genus " + std::to_string(t1_->genus()) + " vs " + std::to_string(t2_->genus())};
    }
    line("instance pair " + fs::path(cfg_.input).filename().string() + " " +
         fs::path(cfg_.input2).filename().string() + " genus " + std::to_string(t1_->genus()));
  }

  bool have_pair() const { return t1_.has_value(); }

  // Builds the core from the pair on first use.
  const VHComplex& core() {
    if (complex_) return *complex_;
    const auto w = timed("hypothesis", [&] { return check_hypothesis(*t1_, *t2_); });
    if (w) throw HypothesisViolated(*w);
    line("hypothesis ok");
    complex_ = timed("core", [&] { return build_quotient_core(*t1_, *t2_, BuildOptions{cfg_.threads}); });
    return *complex_;
  }

  void describe(const VHComplex& c) {
    line("vertices " + std::to_string(c.vertex_count()));
    line("edges " + std::to_string(c.edge_count()) + " black " + std::to_string(c.edge_count(Color::kBlack)) +
         " red " + std::to_string(c.edge_count(Color::kRed)));
    line("squares " + std::to_string(c.square_count()));
    line("euler " + std::to_string(euler_characteristic(c)));
    for (Color col : {Color::kBlack, Color::kRed}) {
      const auto hs = hyperplanes(c, col);
      std::vector<int> sizes;
      int trees = 0;
      for (const auto& h : hs) {
        sizes.push_back(static_cast<int>(h.edges.size()));
        trees += h.tree;
      }
      std::sort(sizes.begin(), sizes.end());
      line(std::string("hyperplanes ") + to_string(col) + " " + std::to_string(hs.size()) + " trees " +
           std::to_string(trees) + " sizes " + join(sizes));
    }
    std::map<int, int> census;
    for (int v = 0; v < c.vertex_count(); ++v) ++census[classify_link(vertex_link(c, v))];
    std::string links = "links";
    for (const auto& [t, n] : census) {
      links += ' ' + (t == 0 ? std::string("invalid") : admissible_links()[t - 1].name()) + "x" + std::to_string(n);
    }
    line(links);
  }

  ValidationReport validation(const VHComplex& c) {
    if (!have_pair()) return validate_properties(c, c.genus());
    const Multigraph g1 = to_multigraph(*t1_), g2 = to_multigraph(*t2_);
    return validate_properties(c, t1_->genus(), ExpectedGraphs{&g1, &g2});
  }

  // Decomposition from --pieces, or compiled from the complex.
  PieceDecomposition decomposition(const VHComplex& c) {
    if (!cfg_.pieces.empty()) {
      line("pieces from " + fs::path(cfg_.pieces).filename().string());
      return parse_file<PieceDecomposition>(cfg_.pieces);
    }
    return timed("pieces", [&] { return build_decomposition(c); });
  }

  void describe(const PieceDecomposition& pd) {
    int types[3] = {0, 0, 0};
    for (const auto& t : pd.two) ++types[static_cast<int>(t.type)];
    std::map<int, int> genera;
    for (const auto& p : pd.three) ++genera[p.pattern.genus];
    line("pieces one " + std::to_string(pd.one.size()) + " two " + std::to_string(pd.two.size()) + " three " +
         std::to_string(pd.three.size()));
    line("two-pieces disc " + std::to_string(types[0]) + " annulus " + std::to_string(types[1]) + " pants " +
         std::to_string(types[2]));
    std::string g = "three-piece-genera";
    for (const auto& [k, n] : genera) g += ' ' + std::to_string(k) + ":" + std::to_string(n);
    line(g);
    const auto& cert = pd.certificate;
    line("spheres black " + std::to_string(cert.spheres[0].size()) + " red " + std::to_string(cert.spheres[1].size()));
    line("regions black " + std::to_string(cert.regions[0].size()) + " red " + std::to_string(cert.regions[1].size()));
    line("intersection " + std::to_string(cert.intersection_number));
  }

  int cmd_build() {
    const VHComplex& c = core();
    describe(c);
    if (!cfg_.out.empty()) {
      write("core.vh", c.serialize());
      write("core.dot", export_dot(c));
    }
    return kOk;
  }

  int cmd_validate() {
    const VHComplex& c = core();
    describe(c);
    const auto rep = timed("validate", [&] { return validation(c); });
    std::istringstream lines(rep.str());
    for (std::string l; std::getline(lines, l);) line("check " + l);
    line(std::string("verdict ") + (rep.ok() ? "VALID" : "INVALID"));
    return rep.ok() ? kOk : kValidationFailed;
  }

  int cmd_pieces() {
    const VHComplex& c = core();
    describe(c);
    const auto pd = decomposition(c);
    describe(pd);
    if (!cfg_.out.empty()) write("pieces.txt", pd.serialize());
    return kOk;
  }

  int cmd_roundtrip() {
    const VHComplex& c = core();
    describe(c);
    const auto pd = decomposition(c);
    describe(pd);
    const VHComplex dual = dual_complex(pd);
    const auto iso = timed("isomorphism", [&] { return isomorphic_colored(dual, c); });
    line(std::string("roundtrip ") + (iso.isomorphic ? "ISOMORPHIC " : "NOT-ISOMORPHIC ") + iso.witness);
    if (!cfg_.out.empty()) write("roundtrip-map.txt", iso.map_text());
    int code = iso.isomorphic ? kOk : kNotIsomorphic;
    if (have_pair()) {
      const VHComplex back = timed("swapped-core", [&] {
        return build_quotient_core(*t2_, *t1_, BuildOptions{cfg_.threads}).swap_colors();
      });
      const auto swap = isomorphic_colored(c, back);
      line(std::string("swap ") + (swap.isomorphic ? "ISOMORPHIC " : "NOT-ISOMORPHIC ") + swap.witness);
      if (!swap.isomorphic) code = kNotIsomorphic;
    }
    return code;
  }

  int cmd_oracle() {
    const auto w = timed("hypothesis", [&] { return check_hypothesis(*t1_, *t2_); });
    if (w) throw HypothesisViolated(*w);
    line("hypothesis ok");
    const auto result = timed("core", [&] { return build_core(*t1_, *t2_, BuildOptions{cfg_.threads}); });
    const auto rep = timed("oracle", [&] { return run_oracle(*t1_, *t2_, result, cfg_.radius); });
    line("oracle radius " + std::to_string(rep.radius) + " t1-edges " + std::to_string(rep.t1_edges) +
         " t2-edges " + std::to_string(rep.t2_edges) + " pairs " + std::to_string(rep.pairs) + " crossing " +
         std::to_string(rep.crossing_pairs));
    line("discrepancies " + std::to_string(rep.discrepancies.size()));
    constexpr std::size_t kShown = 20;
    for (std::size_t i = 0; i < rep.discrepancies.size() && i < kShown; ++i) {
      const auto& d = rep.discrepancies[i];
      line("discrepancy " + sqcore::describe(*t1_, d.t1) + " " + sqcore::describe(*t2_, d.t2) + " direct " +
           (d.brute_force ? "crossing" : "nested"));
    }
    return rep.discrepancies.empty() ? kOk : kOracleDiscrepancy;
  }

  int cmd_export_dot() {
    const VHComplex& c = core();
    const std::string dot = export_dot(c);
    if (cfg_.out.empty()) {
      out_ << dot;
      return kOk;
    }
    write("core.dot", dot);
    line("wrote core.dot");
    for (Color col : {Color::kBlack, Color::kRed}) {
      const auto hs = hyperplanes(c, col);
      for (std::size_t i = 0; i < hs.size(); ++i) {
        const std::string name = std::string("hyperplane-") + to_string(col) + "-" + std::to_string(i) + ".dot";
        write(name, export_dot(c, hs[i]));
        line("wrote " + name);
      }
    }
    return kOk;
  }

  int cmd_random() {
    if (cfg_.genus < 2) throw Stop{kUsage, "genus must be at least 2"};
    if (cfg_.moves < 0) throw Stop{kUsage, "moves must be non-negative"};
    const auto inst = timed("random", [&] { return random_instance(cfg_.genus, cfg_.seed, cfg_.moves); });
    line("instance random genus " + std::to_string(cfg_.genus) + " seed " + std::to_string(cfg_.seed) + " moves " +
         std::to_string(cfg_.moves) + " attempts " + std::to_string(inst.attempts));
    const auto w = check_hypothesis(inst.t1, inst.t2);
    line(w ? "hypothesis VIOLATED " + w->text : "hypothesis ok");
    if (cfg_.out.empty()) {
      line("--- t1");
      report_ << inst.t1.serialize();
      line("--- t2");
      report_ << inst.t2.serialize();
    } else {
      write("t1.mg", inst.t1.serialize());
      write("t2.mg", inst.t2.serialize());
      line("wrote t1.mg t2.mg");
    }
    return kOk;
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  std::ostringstream report_;
  std::vector<std::pair<std::string, double>> timings_;
  std::optional<MarkedGraph> t1_, t2_;
  std::optional<VHComplex> complex_;
};

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) { return Session(cfg, out, err).run(); }

}  // namespace sqcore::cli
