#include "orthopat/catalog.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "catalog_data.hpp"

namespace orthopat {

namespace {

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

static_assert(fnv1a(detail::k_plain_text) == 0x71061ae0105ac092ULL, "data/catalog/plain.txt changed");
static_assert(fnv1a(detail::k_symmetric_text) == 0xe4d7d717197f810bULL, "data/catalog/symmetric.txt changed");
static_assert(fnv1a(detail::k_special_text) == 0x4ec7976b9abaec9dULL, "data/catalog/special.txt changed");

// Cells are 1-based; row 0 addresses the denominator.
struct Erratum {
  bool symmetric_list;
  int n;
  int k;
  std::optional<int> l;
  std::optional<long long> t;
  int row;
  int col;
  long printed;
  long corrected;
};

const Erratum kErrata[] = {
    {false, 5, 11, std::nullopt, std::nullopt, 4, 5, 19, 18},
    {false, 5, 11, std::nullopt, std::nullopt, 5, 5, -21, -1},
    {false, 5, 23, std::nullopt, std::nullopt, 3, 4, -2, 2},
    {false, 5, 23, std::nullopt, std::nullopt, 3, 5, 3, 2},
    {true, 5, 23, std::nullopt, 1, 3, 4, -2, 2},
    {true, 4, 2, 2, 0, 0, 0, 9, 15},
};

struct Block {
  std::string header;
  std::string body;
};

std::vector<Block> split_blocks(std::string_view text) {
  std::vector<Block> blocks;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '@') {
      blocks.push_back({line.substr(1), {}});
    } else if (!blocks.empty()) {
      blocks.back().body += line;
      blocks.back().body += '\n';
    } else if (!line.empty() && line[0] != '#' && line.find_first_not_of(" \t\r") != std::string::npos) {
      throw CatalogError("catalog text before the first '@' header: " + line);
    }
  }
  return blocks;
}

std::map<std::string, std::string> parse_fields(std::string_view header, char separator) {
  std::map<std::string, std::string> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
      throw InvalidArgument("malformed label field '" + token + "'");
    if (!out.emplace(token.substr(0, eq), token.substr(eq + 1)).second)
      throw InvalidArgument("repeated label field '" + token + "'");
    token.clear();
  };
  for (char c : header) {
    if (c == separator || c == ' ' || c == '\t' || c == '\r') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

long long parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw InvalidArgument("bad integer '" + s + "' for " + what);
  return v;
}

bool minimality_claimed(const CatalogEntry& e) {
  if (e.n != 5) return true;
  if (!e.symmetric_list) return e.label_k != 6 && e.label_k != 7 && e.label_k != 19 && e.label_k != 28 && e.label_k != 31;
  const int l = e.label_l.value_or(1);
  const std::pair<int, int> exceptions[] = {{2, 2}, {3, 2}, {6, 1}, {11, 2}, {22, 2}};
  for (const auto& [k, ll] : exceptions)
    if (e.label_k == k && l == ll) return false;
  return true;
}

bool erratum_matches(const Erratum& er, const CatalogEntry& e) {
  return er.symmetric_list == e.symmetric_list && er.n == e.n && er.k == e.label_k && er.l == e.label_l &&
         er.t == e.trace_label;
}

void apply_errata(std::vector<CatalogEntry>& entries) {
  for (const Erratum& er : kErrata) {
    for (CatalogEntry& e : entries) {
      if (!erratum_matches(er, e)) continue;
      const RatMatrix& m = e.matrix;
      if (er.row == 0) {
        if (m.den() != er.printed) throw CatalogError("erratum for " + e.label() + ": denominator is not as printed");
        e.matrix = RatMatrix(m.n(), Int(er.corrected), m.nums());
      } else {
        if (m.num(er.row - 1, er.col - 1) != er.printed)
          throw CatalogError("erratum for " + e.label() + ": cell is not as printed");
        std::vector<Int> num = m.nums();
        num[static_cast<std::size_t>(er.row - 1) * m.n() + (er.col - 1)] = er.corrected;
        e.matrix = RatMatrix(m.n(), m.den(), std::move(num));
      }
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError("cannot read catalog file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::string> data_dir() {
  const char* dir = std::getenv("ORTHOPAT_DATA");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::string(dir);
}

struct Reference {
  std::string name;
  int n = 0;
  int k = 0;
  std::optional<int> l;
  std::optional<long long> t;
};

Reference parse_reference(std::string_view ref) {
  if (ref.empty() || ref[0] != '@') throw InvalidArgument("catalog reference must start with '@': " + std::string(ref));
  ref.remove_prefix(1);
  Reference r;
  if (ref.find('=') == std::string_view::npos) {
    r.name = std::string(ref);
    return r;
  }
  auto fields = parse_fields(ref, ',');
  for (const auto& [key, value] : fields)
    if (key != "n" && key != "k" && key != "l" && key != "t") throw InvalidArgument("unknown reference field '" + key + "'");
  if (!fields.count("n") || !fields.count("k")) throw InvalidArgument("catalog reference needs n and k: @" + std::string(ref));
  r.n = static_cast<int>(parse_int(fields["n"], "n"));
  r.k = static_cast<int>(parse_int(fields["k"], "k"));
  if (fields.count("l")) r.l = static_cast<int>(parse_int(fields["l"], "l"));
  if (fields.count("t")) r.t = parse_int(fields["t"], "t");
  return r;
}

}  // namespace

std::string CatalogEntry::label() const {
  std::string s = "n=" + std::to_string(n) + " k=" + std::to_string(label_k);
  if (label_l) s += " l=" + std::to_string(*label_l);
  if (trace_label) s += " t=" + std::to_string(*trace_label);
  return s;
}

std::vector<CatalogEntry> parse_catalog(std::string_view text, bool symmetric_list) {
  std::vector<CatalogEntry> entries;
  for (const Block& b : split_blocks(text)) {
    try {
      auto fields = parse_fields(b.header, ' ');
      CatalogEntry e;
      e.symmetric_list = symmetric_list;
      if (!fields.count("n") || !fields.count("k")) throw InvalidArgument("header needs n and k");
      for (const auto& [key, value] : fields)
        if (key != "n" && key != "k" && key != "l" && key != "t") throw InvalidArgument("unknown field '" + key + "'");
      e.n = static_cast<int>(parse_int(fields["n"], "n"));
      e.label_k = static_cast<int>(parse_int(fields["k"], "k"));
      if (fields.count("l")) e.label_l = static_cast<int>(parse_int(fields["l"], "l"));
      if (fields.count("t")) e.trace_label = parse_int(fields["t"], "t");
      if (symmetric_list && !e.trace_label) throw InvalidArgument("symmetric entry needs t");
      e.printed = parse_matrix(b.body);
      if (e.printed.n() != e.n) throw InvalidArgument("matrix order differs from n");
      e.matrix = e.printed;
      e.minimality_claimed = minimality_claimed(e);
      entries.push_back(std::move(e));
    } catch (const Error& err) {
      throw CatalogError("catalog entry '@" + b.header + "': " + err.what());
    }
  }
  apply_errata(entries);
  return entries;
}

std::vector<CatalogEntry> load_catalog() {
  std::vector<CatalogEntry> entries;
  std::vector<CatalogEntry> symmetric;
  if (auto dir = data_dir()) {
    entries = parse_catalog(read_file(*dir + "/plain.txt"), false);
    symmetric = parse_catalog(read_file(*dir + "/symmetric.txt"), true);
  } else {
    entries = parse_catalog(detail::k_plain_text, false);
    symmetric = parse_catalog(detail::k_symmetric_text, true);
  }
  entries.insert(entries.end(), std::make_move_iterator(symmetric.begin()), std::make_move_iterator(symmetric.end()));
  return entries;
}

std::vector<NamedPattern> special_patterns() {
  const std::optional<std::string> dir = data_dir();
  const std::string text = dir ? read_file(*dir + "/special.txt") : std::string(detail::k_special_text);
  std::vector<NamedPattern> out;
  for (const Block& b : split_blocks(text)) {
    std::string name = b.header;
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t\r") + 1);
    try {
      out.push_back({name, parse_pattern(b.body)});
    } catch (const Error& err) {
      throw CatalogError("special pattern '" + name + "': " + err.what());
    }
  }
  return out;
}

ZeroPattern special_pattern(std::string_view name) {
  for (auto& np : special_patterns())
    if (np.name == name) return np.pattern;
  throw InvalidArgument("unknown special pattern '" + std::string(name) + "'");
}

bool EntryCheck::passed() const {
  for (const std::optional<bool>& c : {symmetric, involutory, trace, quasi_normal})
    if (c && !*c) return false;
  return orthogonal && support_class;
}

VerificationReport verify_all(const std::vector<CatalogEntry>& entries, Execution exec) {
  struct Forms {
    ZeroPattern equivalence;
    std::optional<ZeroPattern> congruence;
    bool indecomposable_sq = false;
  };
  const auto count = static_cast<std::int64_t>(entries.size());
  std::vector<EntryCheck> checks(entries.size());
  std::vector<Forms> forms(entries.size());

  auto examine = [&](std::int64_t idx) {
    const auto i = static_cast<std::size_t>(idx);
    const CatalogEntry& e = entries[i];
    EntryCheck& c = checks[i];
    c.list = e.symmetric_list ? "symmetric" : "plain";
    c.label = e.label();
    c.orthogonal = e.matrix.n() == e.n && is_orthogonal(e.matrix);
    const ZeroPattern s = support(e.matrix);
    forms[i].equivalence = canonical_equivalence(s).pattern;
    forms[i].indecomposable_sq = is_indecomposable(s) && is_sq(s);
    if (e.symmetric_list) {
      c.symmetric = is_symmetric(e.matrix);
      c.involutory = is_involutory(e.matrix);
      const Rat tr = trace(e.matrix);
      c.trace = e.trace_label && tr == Rat(static_cast<long>(*e.trace_label)) && (*e.trace_label - e.n) % 2 == 0;
      bool ordered = tr >= 0;
      for (int d = 0; d + 1 < e.n && ordered; ++d) ordered = e.matrix.num(d, d) >= e.matrix.num(d + 1, d + 1);
      c.quasi_normal = ordered;
      if (s.is_symmetric()) forms[i].congruence = canonical_congruence(s).pattern;
    }
  };
  if (exec.is_serial()) {
    for (std::int64_t i = 0; i < count; ++i) examine(i);
  } else {
#pragma omp parallel for schedule(dynamic) num_threads(exec.workers())
    for (std::int64_t i = 0; i < count; ++i) examine(i);
  }

  std::vector<ZeroPattern> infeasible;
  for (const char* name : {"p14", "p15", "p16"}) infeasible.push_back(canonical_equivalence(special_pattern(name)).pattern);

  // the plain entry defines the class of each (n, k)
  std::map<std::pair<int, int>, std::size_t> plain_of;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (!entries[i].symmetric_list) plain_of.emplace(std::make_pair(entries[i].n, entries[i].label_k), i);

  VerificationReport report;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const CatalogEntry& e = entries[i];
    bool ok = true;
    if (!e.symmetric_list) {
      ok = plain_of.at({e.n, e.label_k}) == i && forms[i].indecomposable_sq;
      for (const ZeroPattern& bad : infeasible) ok = ok && !(forms[i].equivalence == bad);
      for (std::size_t j = 0; j < entries.size() && ok; ++j)
        if (j != i && !entries[j].symmetric_list && entries[j].n == e.n)
          ok = !(forms[j].equivalence == forms[i].equivalence);
      ++report.plain_entries;
    } else {
      const auto it = plain_of.find({e.n, e.label_k});
      ok = it != plain_of.end() && forms[it->second].equivalence == forms[i].equivalence && forms[i].congruence.has_value();
      for (std::size_t j = 0; j < entries.size() && ok; ++j) {
        const CatalogEntry& o = entries[j];
        if (j == i || !o.symmetric_list || o.n != e.n || o.label_k != e.label_k || !forms[j].congruence) continue;
        const bool same_label = o.label_l.value_or(1) == e.label_l.value_or(1);
        ok = same_label == (*forms[j].congruence == *forms[i].congruence);
      }
      ++report.symmetric_entries;
    }
    checks[i].support_class = ok;
    if (!checks[i].passed()) ++report.failures;
  }
  report.entries = std::move(checks);
  return report;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, std::string_view ref) {
  const Reference r = parse_reference(ref);
  if (!r.name.empty()) throw InvalidArgument("'" + std::string(ref) + "' names a pattern, not a catalog matrix");
  const bool symmetric = r.l.has_value() || r.t.has_value();
  for (const CatalogEntry& e : entries) {
    if (e.symmetric_list != symmetric || e.n != r.n || e.label_k != r.k) continue;
    if (r.l && e.label_l.value_or(1) != *r.l) continue;
    if (r.t && e.trace_label != r.t) continue;
    return e;
  }
  throw InvalidArgument("no catalog entry matches '" + std::string(ref) + "'");
}

ZeroPattern resolve_pattern_reference(std::string_view ref) {
  const Reference r = parse_reference(ref);
  if (!r.name.empty()) return special_pattern(r.name);
  if (r.n == 5 && r.k >= 14 && r.k <= 16 && !r.l && !r.t) return special_pattern("p" + std::to_string(r.k));
  return support(find_entry(load_catalog(), ref).matrix);
}

}  // namespace orthopat
