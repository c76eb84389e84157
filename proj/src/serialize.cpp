#include "orthopat/serialize.hpp"

namespace orthopat {

namespace {

template <typename Enum, typename Names>
Enum enum_from(const std::string& s, std::initializer_list<Enum> all, Names name, const char* what) {
  for (Enum e : all)
    if (name(e) == s) return e;
  throw ParseError(std::string("unknown ") + what + " '" + s + "'");
}

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int i : v) out.push_back(i + 1);
  return out;
}

std::vector<int> zero_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int i : v) out.push_back(i - 1);
  return out;
}

Int parse_big(const Json& j) {
  Int v;
  if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer '" + j.get<std::string>() + "'");
  return v;
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

void to_json(Json& j, const RatMatrix& x) {
  Json rows = Json::array();
  for (int i = 0; i < x.n(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < x.n(); ++c) row.push_back(x.num(i, c).get_str());
    rows.push_back(std::move(row));
  }
  j = Json{{"n", x.n()}, {"den", x.den().get_str()}, {"num", std::move(rows)}};
}

void from_json(const Json& j, RatMatrix& x) {
  try {
    const int n = j.at("n").get<int>();
    const Json& rows = j.at("num");
    if (n < 1 || rows.size() != static_cast<std::size_t>(n)) throw ParseError("matrix needs n rows");
    std::vector<Int> num;
    for (const Json& row : rows) {
      if (row.size() != static_cast<std::size_t>(n)) throw ParseError("matrix row needs n entries");
      for (const Json& e : row) num.push_back(parse_big(e));
    }
    const Int den = parse_big(j.at("den"));
    if (den <= 0) throw ParseError("matrix denominator must be positive");
    x = RatMatrix(n, den, std::move(num));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix json: ") + e.what());
  }
}

void to_json(Json& j, const ZeroPattern& p) {
  Json rows = Json::array();
  for (int i = 0; i < p.n(); ++i) {
    std::string r;
    for (int c = 0; c < p.n(); ++c) r += p(i, c) ? '1' : '0';
    rows.push_back(std::move(r));
  }
  j = Json{{"n", p.n()}, {"rows", std::move(rows)}};
}

void from_json(const Json& j, ZeroPattern& p) {
  try {
    std::vector<std::string> rows = j.at("rows").get<std::vector<std::string>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != rows.size()) throw ParseError("pattern needs n rows");
    p = ZeroPattern::from_strings(rows);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("pattern json: ") + e.what());
  }
}

void to_json(Json& j, const ObstructionReport& r) {
  j = Json{{"verdict", verdict_name(r.verdict)}, {"reason", reason_name(r.reason)}};
  if (r.witness) {
    j["witness"] = Json{{"columns", one_based(r.witness->columns)},
                        {"rows", one_based(r.witness->rows)},
                        {"dependent_rows", r.witness->dependent_rows}};
  } else {
    j["witness"] = nullptr;
  }
}

void from_json(const Json& j, ObstructionReport& r) {
  try {
    r.verdict = enum_from(j.at("verdict").get<std::string>(), {Verdict::Infeasible, Verdict::Unknown}, verdict_name, "verdict");
    r.reason = enum_from(j.at("reason").get<std::string>(),
                         {ObstructionReason::None, ObstructionReason::ColumnDependence, ObstructionReason::TraceParity,
                          ObstructionReason::TraceNMinus2},
                         reason_name, "reason");
    r.witness.reset();
    if (j.contains("witness") && !j.at("witness").is_null()) {
      const Json& w = j.at("witness");
      r.witness = ObstructionWitness{zero_based(w.at("columns").get<std::vector<int>>()),
                                     zero_based(w.at("rows").get<std::vector<int>>()),
                                     w.value("dependent_rows", false)};
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("obstruction json: ") + e.what());
  }
}

void to_json(Json& j, const SearchResult& r) {
  j = Json{{"status", status_name(r.status)}};
  j["denominator"] = r.denominator ? Json(*r.denominator) : Json(nullptr);
  j["solution"] = r.solution ? Json(*r.solution) : Json(nullptr);
  j["nodes"] = r.nodes_explored;
  j["solutions"] = r.solutions;
  j["exhausted_through"] = r.exhausted_through;
}

void from_json(const Json& j, SearchResult& r) {
  try {
    r = SearchResult{};
    r.status = enum_from(j.at("status").get<std::string>(),
                         {SearchStatus::Found, SearchStatus::Exhausted, SearchStatus::Obstructed, SearchStatus::BudgetExceeded},
                         status_name, "status");
    if (!j.at("denominator").is_null()) r.denominator = j.at("denominator").get<long long>();
    if (!j.at("solution").is_null()) r.solution = j.at("solution").get<RatMatrix>();
    r.nodes_explored = j.at("nodes").get<std::uint64_t>();
    r.solutions = j.at("solutions").get<std::uint64_t>();
    r.exhausted_through = j.at("exhausted_through").get<long long>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("search result json: ") + e.what());
  }
}

void to_json(Json& j, const EntryCheck& c) {
  j = Json{{"list", c.list},
           {"label", c.label},
           {"orthogonal", c.orthogonal},
           {"support_class", c.support_class},
           {"symmetric", optional_bool(c.symmetric)},
           {"involutory", optional_bool(c.involutory)},
           {"trace", optional_bool(c.trace)},
           {"quasi_normal", optional_bool(c.quasi_normal)},
           {"passed", c.passed()}};
}

void to_json(Json& j, const VerificationReport& r) {
  j = Json{{"plain_entries", r.plain_entries},
           {"symmetric_entries", r.symmetric_entries},
           {"failures", r.failures},
           {"passed", r.passed()},
           {"entries", r.entries}};
}

void to_json(Json& j, const CatalogEntry& e) {
  j = Json{{"list", e.symmetric_list ? "symmetric" : "plain"}, {"n", e.n}, {"k", e.label_k}};
  j["l"] = e.label_l ? Json(*e.label_l) : Json(nullptr);
  j["t"] = e.trace_label ? Json(*e.trace_label) : Json(nullptr);
  j["minimality_claimed"] = e.minimality_claimed;
  j["corrected"] = e.corrected();
  j["matrix"] = e.matrix;
}

}  // namespace orthopat
