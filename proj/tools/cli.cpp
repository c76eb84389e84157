#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "orthopat/catalog.hpp"
#include "orthopat/constructions.hpp"
#include "orthopat/obstructions.hpp"
#include "orthopat/search.hpp"
#include "orthopat/serialize.hpp"

namespace orthopat::cli {

namespace {

// Library errors caused by bad input map to exit code 2; verification
// failures to 1.
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  bool json = false;
  bool log = false;
  int workers = 0;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<ZeroPattern> load_patterns(const std::string& source) {
  if (!source.empty() && source[0] == '@') return {resolve_pattern_reference(source)};
  std::vector<ZeroPattern> ps = parse_patterns(read_text(source));
  if (ps.empty()) throw UsageError("no pattern in '" + source + "'");
  return ps;
}

ZeroPattern load_pattern(const std::string& source) {
  std::vector<ZeroPattern> ps = load_patterns(source);
  if (ps.size() != 1) throw UsageError("'" + source + "' holds " + std::to_string(ps.size()) + " patterns, expected 1");
  return ps.front();
}

RatMatrix load_matrix(const std::string& source) {
  if (!source.empty() && source[0] == '@') return find_entry(load_catalog(), source).matrix;
  return parse_matrix(read_text(source));
}

Rat parse_rat(const std::string& s) {
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0) throw UsageError("bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

std::vector<Rat> parse_rats(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_one_based(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s;
}

std::string describe(const ObstructionReport& r) {
  std::string s(verdict_name(r.verdict));
  if (!r.infeasible()) return s;
  s += " (" + std::string(reason_name(r.reason));
  if (r.reason == ObstructionReason::ColumnDependence && r.witness) {
    const auto& w = *r.witness;
    s += w.dependent_rows ? "; rows " + join_one_based(w.rows) + " on columns " + join_one_based(w.columns)
                          : "; columns " + join_one_based(w.columns) + " on rows " + join_one_based(w.rows);
  } else if (r.reason == ObstructionReason::TraceNMinus2 && r.witness) {
    s += "; zero at (" + join_one_based(r.witness->rows) + "," + join_one_based(r.witness->columns) + ")";
  }
  return s + ")";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// --- check ----------------------------------------------------------------

int cmd_check(const Options& o, const std::string& source, std::optional<long long> trace, std::ostream& out) {
  const std::vector<ZeroPattern> ps = load_patterns(source);
  Json all = Json::array();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const ZeroPattern& p = ps[i];
    const ObstructionReport cd = column_dependence_infeasible(p, Execution::parallel(o.workers));
    std::optional<ObstructionReport> tr;
    if (trace) {
      if (!p.is_symmetric()) throw UsageError("--trace needs a symmetric pattern");
      tr = trace_feasibility(p, p.n(), *trace);
    }
    if (o.json) {
      Json j{{"pattern", p},
             {"quadrangular", is_quadrangular(p)},
             {"rsq", is_rsq(p)},
             {"sq", is_sq(p)},
             {"indecomposable", is_indecomposable(p)},
             {"symmetric", p.is_symmetric()},
             {"column_dependence", cd}};
      j["trace"] = tr ? Json{{"t", *trace}, {"report", *tr}} : Json(nullptr);
      all.push_back(std::move(j));
      continue;
    }
    if (i) out << '\n';
    out << "pattern " << i + 1 << " (n=" << p.n() << ")\n"
        << p.to_string() << "quadrangular: " << yes_no(is_quadrangular(p)) << '\n'
        << "rsq: " << yes_no(is_rsq(p)) << '\n'
        << "sq: " << yes_no(is_sq(p)) << '\n'
        << "indecomposable: " << yes_no(is_indecomposable(p)) << '\n'
        << "symmetric: " << yes_no(p.is_symmetric()) << '\n'
        << "column dependence: " << describe(cd) << '\n';
    if (tr) out << "trace " << *trace << ": " << describe(*tr) << '\n';
  }
  if (o.json) emit(out, all);
  return 0;
}

// --- classify ---------------------------------------------------------------

int cmd_classify(const Options& o, const std::string& source, std::ostream& out) {
  const std::vector<ZeroPattern> ps = load_patterns(source);
  std::vector<CatalogEntry> catalog;
  Json all = Json::array();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const ZeroPattern& p = ps[i];
    const EquivalenceForm eq = canonical_equivalence(p);
    const ZeroPattern cls = canonical_class(p);
    std::optional<int> class_id;
    std::optional<int> label;
    if (p.n() <= kMaxCensusOrder && is_indecomposable(p) && is_sq(p)) {
      const std::vector<ZeroPattern> census = enumerate_indecomposable_sq(p.n(), Execution::parallel(o.workers));
      for (std::size_t c = 0; c < census.size(); ++c)
        if (census[c] == cls) class_id = static_cast<int>(c) + 1;
      if (p.n() <= 5) {
        if (catalog.empty()) catalog = load_catalog();
        for (const CatalogEntry& e : catalog)
          if (!e.symmetric_list && e.n == p.n() && canonical_class(support(e.matrix)) == cls) label = e.label_k;
        for (int k : {14, 15, 16})
          if (p.n() == 5 && canonical_class(special_pattern("p" + std::to_string(k))) == cls) label = k;
      }
    }
    std::optional<ZeroPattern> cong;
    if (p.is_symmetric()) cong = canonical_congruence(p).pattern;
    if (o.json) {
      Json j{{"pattern", p}, {"canonical_equivalence", eq.pattern}, {"canonical_class", cls}};
      j["canonical_congruence"] = cong ? Json(*cong) : Json(nullptr);
      j["class_id"] = class_id ? Json(*class_id) : Json(nullptr);
      j["catalog_label"] = label ? Json(*label) : Json(nullptr);
      all.push_back(std::move(j));
      continue;
    }
    if (i) out << '\n';
    out << "pattern " << i + 1 << " (n=" << p.n() << ")\n"
        << "canonical equivalence:\n"
        << eq.pattern.to_string() << "canonical class (with transpose):\n"
        << cls.to_string();
    if (cong) out << "canonical congruence:\n" << cong->to_string();
    out << "class id: " << (class_id ? std::to_string(*class_id) : "-") << '\n'
        << "catalog label: " << (label ? std::to_string(*label) : "-") << '\n';
  }
  if (o.json) emit(out, all);
  return 0;
}

// --- enumerate --------------------------------------------------------------

int cmd_enumerate(const Options& o, int n, std::ostream& out, std::ostream& err) {
  const std::vector<ZeroPattern> classes = enumerate_indecomposable_sq(n, Execution::parallel(o.workers));
  if (o.log) err << "enumerated n=" << n << ": " << classes.size() << " classes\n";
  if (o.json) {
    emit(out, Json{{"n", n}, {"count", classes.size()}, {"classes", classes}});
    return 0;
  }
  out << "# n=" << n << ": " << classes.size() << " classes\n";
  for (std::size_t i = 0; i < classes.size(); ++i) out << "\n# class " << i + 1 << '\n' << classes[i].to_string();
  return 0;
}

// --- search -----------------------------------------------------------------

struct SearchArgs {
  std::string source;
  bool symmetric = false;
  std::optional<long long> trace;
  long long dmin = 1;
  long long dmax = 100;
  bool prove_minimal = false;
  bool enumerate = false;
  bool indecomposable = false;
  bool no_obstructions = false;
  std::uint64_t budget = 0;
  std::string row_order = "ascending";
};

ObstructionReport obstruction_of(const SearchProblem& p) {
  ObstructionReport r = column_dependence_infeasible(p.pattern, p.exec);
  if (!r.infeasible() && p.symmetric && p.trace_target) r = trace_feasibility(p.pattern, p.pattern.n(), *p.trace_target);
  return r;
}

void print_result(std::ostream& out, const SearchResult& r, const std::optional<ObstructionReport>& obs) {
  out << "status: " << status_name(r.status) << '\n';
  if (obs) out << "obstruction: " << describe(*obs) << '\n';
  if (r.denominator) out << "denominator: " << *r.denominator << '\n';
  out << "nodes: " << r.nodes_explored << '\n';
  out << "solutions: " << r.solutions << '\n';
  out << "exhausted through: " << r.exhausted_through << '\n';
  if (r.solution) out << "solution:\n" << r.solution->to_string();
}

int cmd_search(const Options& o, const SearchArgs& a, std::ostream& out, std::ostream& err) {
  SearchProblem p;
  p.pattern = load_pattern(a.source);
  p.symmetric = a.symmetric;
  p.trace_target = a.trace;
  p.denom_min = a.dmin;
  p.denom_max = a.dmax;
  p.require_indecomposable = a.indecomposable;
  p.mode = a.prove_minimal ? SearchMode::ProveMinimality : a.enumerate ? SearchMode::EnumerateAll : SearchMode::FirstSolution;
  p.node_budget = a.budget;
  p.row_order = parse_row_order(a.row_order);
  p.use_obstructions = !a.no_obstructions;
  p.exec = Execution::parallel(o.workers);
  if (o.log)
    p.progress = [&err](const SearchProgress& s) {
      err << "d=" << s.d << " nodes=" << s.nodes << " solutions=" << s.solutions << '\n';
    };
  const SearchResult r = solve(p);
  std::optional<ObstructionReport> obs;
  if (r.status == SearchStatus::Obstructed) obs = obstruction_of(p);
  if (o.log) err << "elapsed " << std::fixed << std::setprecision(3) << r.elapsed.count() << " s\n";
  if (o.json) {
    Json j = r;
    j["obstruction"] = obs ? Json(*obs) : Json(nullptr);
    emit(out, j);
  } else {
    print_result(out, r, obs);
  }
  return 0;
}

// --- construct --------------------------------------------------------------

int emit_matrix(const Options& o, const RatMatrix& x, std::ostream& out) {
  if (o.json) {
    emit(out, Json(x));
  } else {
    out << x.to_string();
  }
  return 0;
}

// --- verify-catalog ---------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out) {
  const VerificationReport r = verify_all(load_catalog(), Execution::parallel(o.workers));
  if (o.json) {
    emit(out, r);
    return r.passed() ? 0 : 1;
  }
  auto mark = [](const std::optional<bool>& b) { return b ? (*b ? "ok" : "FAIL") : "-"; };
  out << std::left << std::setw(10) << "list" << std::setw(20) << "entry" << std::setw(6) << "orth" << std::setw(6)
      << "class" << std::setw(6) << "sym" << std::setw(6) << "inv" << std::setw(6) << "trace" << "qnf\n";
  for (const EntryCheck& c : r.entries)
    out << std::setw(10) << c.list << std::setw(20) << c.label << std::setw(6) << mark(c.orthogonal) << std::setw(6)
        << mark(c.support_class) << std::setw(6) << mark(c.symmetric) << std::setw(6) << mark(c.involutory)
        << std::setw(6) << mark(c.trace) << mark(c.quasi_normal) << '\n';
  out << r.plain_entries << " plain and " << r.symmetric_entries << " symmetric entries\n";
  if (r.passed()) {
    out << "all entries pass\n";
    return 0;
  }
  out << r.failures << " entries fail\n";
  return 1;
}

// --- open problems ----------------------------------------------------------

int cmd_problem1(const Options& o, int n_max, std::ostream& out, std::ostream& err) {
  Json orders = Json::array();
  int negative = 0;
  for (int n = 1; n <= n_max; ++n) {
    int self_transpose = 0;
    int affirmative = 0;
    Json counterexamples = Json::array();
    for (const ZeroPattern& p : enumerate_indecomposable_sq(n, Execution::parallel(o.workers))) {
      if (!(canonical_equivalence(p).pattern == canonical_equivalence(p.transpose()).pattern)) continue;
      ++self_transpose;
      if (symmetric_representative(p)) {
        ++affirmative;
      } else {
        counterexamples.push_back(p);
      }
    }
    negative += self_transpose - affirmative;
    if (o.log) err << "n=" << n << ": " << affirmative << "/" << self_transpose << '\n';
    if (o.json) {
      orders.push_back(Json{{"n", n},
                            {"self_transpose_classes", self_transpose},
                            {"with_symmetric_representative", affirmative},
                            {"counterexamples", counterexamples}});
    } else {
      out << "n=" << n << ": " << self_transpose << " self-transpose classes, " << affirmative
          << " with a symmetric representative\n";
      for (const auto& c : counterexamples) out << "counterexample:\n" << c.get<ZeroPattern>().to_string();
    }
  }
  if (o.json) {
    emit(out, Json{{"orders", orders}, {"affirmative", negative == 0}});
  } else {
    out << (negative == 0 ? "affirmative for every class\n" : "negative for some classes\n");
  }
  return 0;
}

int cmd_problem2(const Options& o, long long dmax, std::uint64_t budget, std::ostream& out, std::ostream& err) {
  Json runs = Json::array();
  for (const char* name : {"open5a", "open5b"}) {
    const ZeroPattern p = special_pattern(name);
    for (long long t = -p.n(); t <= p.n(); ++t) {
      if (trace_feasibility(p, p.n(), t).infeasible()) continue;
      SearchProblem sp;
      sp.pattern = p;
      sp.symmetric = true;
      sp.trace_target = t;
      sp.denom_max = dmax;
      sp.node_budget = budget;
      sp.exec = Execution::parallel(o.workers);
      const SearchResult r = solve(sp);
      if (o.log) err << name << " t=" << t << ": " << status_name(r.status) << " nodes=" << r.nodes_explored << '\n';
      if (o.json) {
        Json j = r;
        runs.push_back(Json{{"pattern", name}, {"trace", t}, {"result", j}});
      } else {
        out << name << " t=" << t << ": " << status_name(r.status);
        if (r.denominator) out << " at d=" << *r.denominator;
        out << " (exhausted through d=" << r.exhausted_through << ")\n";
        if (r.solution) out << r.solution->to_string();
      }
    }
  }
  if (o.json) emit(out, Json{{"dmax", dmax}, {"runs", runs}});
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-patterns of rational orthogonal matrices", "orthopat"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_flag("--log", o.log, "Diagnostics on stderr");
  app.add_option("--workers", o.workers, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);

  std::string source;
  std::optional<long long> check_trace;
  auto* check = app.add_subcommand("check", "Predicates and obstructions of patterns");
  check->add_option("pattern", source, "Pattern file or @reference")->required();
  check->add_option("--trace", check_trace, "Also test this trace (symmetric patterns)");

  auto* classify = app.add_subcommand("classify", "Canonical forms and class ids");
  classify->add_option("pattern", source, "Pattern file or @reference")->required();

  int enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Census of indecomposable SQ classes");
  enumerate->add_option("--n", enum_n, "Order")->required()->check(CLI::Range(1, kMaxCensusOrder));

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Search for a rational orthogonal matrix with a given support");
  search->add_option("pattern", sa.source, "Pattern file or @reference")->required();
  auto* sym_flag = search->add_flag("--symmetric", sa.symmetric, "Symmetric solutions only");
  search->add_option("--trace", sa.trace, "Required trace")->needs(sym_flag);
  search->add_option("--dmin", sa.dmin, "Smallest denominator")->check(CLI::PositiveNumber);
  search->add_option("--dmax", sa.dmax, "Largest denominator")->check(CLI::Range(1, 2000));
  auto* prove = search->add_flag("--prove-minimal", sa.prove_minimal, "Exhaust every d below the one found");
  search->add_flag("--enumerate", sa.enumerate, "Count all normalized solutions")->excludes(prove);
  search->add_flag("--indecomposable", sa.indecomposable, "Reject decomposable patterns");
  search->add_flag("--no-obstructions", sa.no_obstructions, "Skip the obstruction tests");
  search->add_option("--budget", sa.budget, "Node budget (0 = none)");
  search->add_option("--row-order", sa.row_order, "ascending, descending or natural")
      ->check(CLI::IsMember({"ascending", "descending", "natural"}));

  auto* construct = app.add_subcommand("construct", "Generate a matrix family member");
  construct->require_subcommand(1);
  int c_n = 0, c_m = 0, c_q = 0, c_k = 0;
  long long c_t = 0;
  std::string c_point = "4/5,3/5", c_alphas, c_values = "1/4,1/4,1/4,1/2,3/4", c_from;
  auto* k_grover = construct->add_subcommand("grover", "I - (2/n) J");
  k_grover->add_option("--n", c_n)->required()->check(CLI::Range(1, kMaxOrder));
  auto* k_full = construct->add_subcommand("full-support", "Symmetric, full support, given trace");
  k_full->add_option("--n", c_n)->required()->check(CLI::Range(3, 16));
  k_full->add_option("--t", c_t)->required();
  auto* k_append = construct->add_subcommand("append", "Grow a symmetric matrix with nonzero last column");
  k_append->add_option("--from", c_from, "Matrix file or @reference")->required();
  k_append->add_option("--m", c_m, "Target order")->required()->check(CLI::Range(2, kMaxOrder));
  auto* k_delta = construct->add_subcommand("delta-reduce", "Fewer diagonal zeros, same trace");
  k_delta->add_option("--from", c_from, "Matrix file or @reference")->required();
  k_delta->add_option("--k", c_k, "Target number of diagonal zeros")->required()->check(CLI::NonNegativeNumber);
  auto* k_paley = construct->add_subcommand("paley", "Paley conference matrix of order q + 1");
  k_paley->add_option("--q", c_q)->required();
  auto* k_conf = construct->add_subcommand("conference", "(1/m) C of order 1 + m^2");
  k_conf->add_option("--m", c_m)->required();
  auto* k_zigzag = construct->add_subcommand("zigzag", "Special zigzag matrix");
  k_zigzag->add_option("--n", c_n)->required()->check(CLI::Range(1, kMaxOrder));
  auto* k_maximal = construct->add_subcommand("symmetric-maximal", "Symmetric, (n-2)^2 zeros");
  k_maximal->add_option("--n", c_n)->required()->check(CLI::Range(3, kMaxOrder));
  auto* k_cube = construct->add_subcommand("hypercube", "Symmetric with hypercube support");
  auto* cube_dim = k_cube->add_option("--dim", c_k, "Dimension")->check(CLI::Range(1, 6));
  k_cube->add_option("--alphas", c_alphas, "Comma-separated rationals, unit squared sum")->excludes(cube_dim);
  auto* k_hess = construct->add_subcommand("hessenberg", "Symmetric antidiagonal Hessenberg matrix");
  k_hess->add_option("--n", c_n)->required()->check(CLI::Range(2, kMaxOrder));
  k_hess->add_option("--point", c_point, "a,b on the unit circle");
  auto* k_design = construct->add_subcommand("design8", "The 8 x 8 orthogonal design");
  k_design->add_option("--values", c_values, "x,y,z,a,b");

  auto* verify = app.add_subcommand("verify-catalog", "Verify every catalog matrix exactly");

  int p1_n = 5;
  auto* problem1 = app.add_subcommand("problem1", "Self-transpose classes versus symmetric representatives");
  problem1->add_option("--n", p1_n)->check(CLI::Range(1, kMaxCensusOrder));

  long long p2_dmax = 10;
  std::uint64_t p2_budget = 0;
  auto* problem2 = app.add_subcommand("problem2", "Symmetric search on the two open 5 x 5 patterns");
  problem2->add_option("--dmax", p2_dmax)->check(CLI::Range(1, 2000));
  problem2->add_option("--budget", p2_budget, "Node budget per trace (0 = none)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(o, source, check_trace, out);
    if (*classify) return cmd_classify(o, source, out);
    if (*enumerate) return cmd_enumerate(o, enum_n, out, err);
    if (*search) {
      if (sa.dmin > sa.dmax) throw UsageError("--dmin exceeds --dmax");
      return cmd_search(o, sa, out, err);
    }
    if (*verify) return cmd_verify(o, out);
    if (*problem1) return cmd_problem1(o, p1_n, out, err);
    if (*problem2) return cmd_problem2(o, p2_dmax, p2_budget, out, err);
    if (*k_grover) return emit_matrix(o, grover(c_n), out);
    if (*k_full) return emit_matrix(o, symmetric_full_support(c_n, c_t), out);
    if (*k_append) return emit_matrix(o, append_full_dimension(load_matrix(c_from), c_m), out);
    if (*k_delta) return emit_matrix(o, diagonal_zero_reduction(load_matrix(c_from), c_k), out);
    if (*k_conf) return emit_matrix(o, conference_orthogonal(c_m), out);
    if (*k_zigzag) return emit_matrix(o, zigzag(ZigzagSpec::from_points(c_n, first_circle_points(static_cast<std::size_t>(c_n)))), out);
    if (*k_maximal) return emit_matrix(o, symmetric_maximal(c_n), out);
    if (*k_cube) {
      std::vector<Rat> alphas = c_alphas.empty() ? rational_unit_vector(c_k > 0 ? c_k : 2, first_circle_points(6)) : parse_rats(c_alphas);
      return emit_matrix(o, hypercube_matrix(alphas), out);
    }
    if (*k_hess) {
      const std::vector<Rat> ab = parse_rats(c_point);
      if (ab.size() != 2) throw UsageError("--point needs two rationals, got '" + c_point + "'");
      return emit_matrix(o, hessenberg_matrix(c_n, {ab[0], ab[1]}), out);
    }
    if (*k_design) {
      const std::vector<Rat> v = parse_rats(c_values);
      if (v.size() != 5) throw UsageError("--values needs five rationals, got '" + c_values + "'");
      return emit_matrix(o, orthogonal_design_8({v[0], v[1], v[2], v[3], v[4]}), out);
    }
    if (*k_paley) {
      const ConferenceMatrix c = paley_conference(c_q);
      if (o.json) {
        Json rows = Json::array();
        for (int i = 0; i < c.n; ++i) {
          Json row = Json::array();
          for (int j = 0; j < c.n; ++j) row.push_back(c(i, j));
          rows.push_back(row);
        }
        emit(out, Json{{"n", c.n}, {"symmetric", c.is_symmetric()}, {"entries", rows}});
      } else {
        for (int i = 0; i < c.n; ++i) {
          for (int j = 0; j < c.n; ++j) out << (j ? " " : "") << std::setw(2) << c(i, j);
          out << '\n';
        }
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "failure: " << e.what() << '\n';
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace orthopat::cli
