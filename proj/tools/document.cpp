#include "document.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <set>

namespace padiccf::cli {
namespace {

using json = nlohmann::ordered_json;

void require_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) throw DocumentError(where + ": expected an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw DocumentError(where + ": unknown field '" + key + "'");
  }
  for (const char* key : keys) {
    if (!obj.contains(key)) throw DocumentError(where + ": missing field '" + key + "'");
  }
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_string()) throw DocumentError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

long get_long(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw DocumentError(where + "." + key + ": expected an integer");
  return v.get<long>();
}

std::optional<long> get_optional_long(const json& obj, const char* key, const std::string& where) {
  if (obj.at(key).is_null()) return std::nullopt;
  return get_long(obj, key, where);
}

BigInt get_bigint(const json& obj, const char* key, const std::string& where) {
  try {
    return parse_bigint(get_string(obj, key, where));
  } catch (const DomainError& e) {
    throw DocumentError(where + "." + key + ": " + e.what());
  }
}

Rational get_rational(const json& obj, const char* key, const std::string& where) {
  try {
    return Rational::parse(get_string(obj, key, where));
  } catch (const DomainError& e) {
    throw DocumentError(where + "." + key + ": " + e.what());
  }
}

QuadIrr quad_from_json(const json& obj, Prime p, const std::string& where) {
  require_keys(obj, {"P", "Q", "D", "R"}, where);
  return QuadIrr::make(get_bigint(obj, "P", where), get_bigint(obj, "Q", where),
                       get_bigint(obj, "D", where), get_bigint(obj, "R", where), p);
}

}  // namespace

std::string optional_to_string(const std::optional<long>& value) {
  return value ? std::to_string(*value) : std::string("inf");
}

nlohmann::ordered_json optional_to_json(const std::optional<long>& value) {
  return value ? json(*value) : json(nullptr);
}

nlohmann::ordered_json quad_descriptor(const QuadIrr& alpha) {
  return {{"P", to_string(alpha.P())},
          {"Q", to_string(alpha.Q())},
          {"D", to_string(alpha.D())},
          {"R", to_string(alpha.R())}};
}

nlohmann::ordered_json input_descriptor(const QuadIrr& input) {
  if (input.is_rational()) {
    return {{"kind", "rational"}, {"num", to_string(input.P())}, {"den", to_string(input.R())}};
  }
  json out = quad_descriptor(input);
  out["kind"] = "quadratic";
  return out;
}

nlohmann::ordered_json trace_to_json(const ExpansionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"n", s.n},
                     {"b", s.b.str()},
                     {"vp_b", optional_to_json(s.vp_b)},
                     {"A", s.A.str()},
                     {"B", s.B.str()},
                     {"vp_B", optional_to_json(s.vp_B)},
                     {"alpha", quad_descriptor(s.alpha)}});
  }
  const bool periodic = trace.status.kind == ExpansionKind::periodic;
  return {{"schema_version", kSchemaVersion},
          {"p", trace.p().value()},
          {"algorithm", std::string(trace.scheme.name())},
          {"input", input_descriptor(trace.input)},
          {"status", std::string(to_string(trace.status.kind))},
          {"preperiod", periodic ? json(trace.status.preperiod) : json(nullptr)},
          {"period", periodic ? json(trace.status.period) : json(nullptr)},
          {"steps", std::move(steps)}};
}

ExpansionTrace trace_from_json(const json& doc) {
  try {
    require_keys(doc, {"schema_version", "p", "algorithm", "input", "status", "preperiod", "period", "steps"},
                 "trace");
    if (get_string(doc, "schema_version", "trace") != kSchemaVersion) {
      throw DocumentError("trace: unsupported schema_version");
    }
    const long p_value = get_long(doc, "p", "trace");
    if (p_value < 3) throw DocumentError("trace.p: not an odd prime");
    const Prime p(static_cast<unsigned long>(p_value));
    const Scheme scheme = Scheme::parse(get_string(doc, "algorithm", "trace"));

    const json& in = doc.at("input");
    if (!in.is_object() || !in.contains("kind")) throw DocumentError("trace.input: missing kind");
    const std::string kind = get_string(in, "kind", "trace.input");
    std::optional<QuadIrr> input;
    if (kind == "rational") {
      require_keys(in, {"kind", "num", "den"}, "trace.input");
      const BigInt den = get_bigint(in, "den", "trace.input");
      if (den == 0) throw DocumentError("trace.input.den: zero denominator");
      input = QuadIrr::from_rational(Rational(get_bigint(in, "num", "trace.input"), den), p);
    } else if (kind == "quadratic") {
      require_keys(in, {"kind", "P", "Q", "D", "R"}, "trace.input");
      input = QuadIrr::make(get_bigint(in, "P", "trace.input"), get_bigint(in, "Q", "trace.input"),
                            get_bigint(in, "D", "trace.input"), get_bigint(in, "R", "trace.input"), p);
    } else {
      throw DocumentError("trace.input.kind: expected 'rational' or 'quadratic'");
    }

    ExpansionTrace trace{scheme, *input, {}, {}};
    const std::string status = get_string(doc, "status", "trace");
    if (status == "finite") {
      trace.status.kind = ExpansionKind::finite;
    } else if (status == "periodic") {
      trace.status = {ExpansionKind::periodic, get_long(doc, "preperiod", "trace"),
                      get_long(doc, "period", "trace")};
    } else if (status == "truncated") {
      trace.status.kind = ExpansionKind::truncated;
    } else {
      throw DocumentError("trace.status: unknown value '" + status + "'");
    }

    const json& steps = doc.at("steps");
    if (!steps.is_array()) throw DocumentError("trace.steps: expected an array");
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const std::string where = "trace.steps[" + std::to_string(i) + "]";
      const json& s = steps[i];
      require_keys(s, {"n", "b", "vp_b", "A", "B", "vp_B", "alpha"}, where);
      trace.steps.push_back(ExpansionRecord{
          get_long(s, "n", where), get_rational(s, "b", where), get_optional_long(s, "vp_b", where),
          quad_from_json(s.at("alpha"), p, where + ".alpha"), get_rational(s, "A", where),
          get_rational(s, "B", where), get_optional_long(s, "vp_B", where)});
    }
    return trace;
  } catch (const DocumentError&) {
    throw;
  } catch (const json::exception& e) {
    throw DocumentError(std::string("trace: ") + e.what());
  } catch (const DomainError& e) {
    throw DocumentError(std::string("trace: ") + e.what());
  }
}

void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

void write_trace_table(std::ostream& os, const ExpansionTrace& trace) {
  os << "p: " << trace.p().value() << '\n'
     << "algorithm: " << trace.scheme.name() << '\n'
     << "input: " << trace.input.str() << '\n'
     << "status: " << to_string(trace.status.kind) << '\n';
  if (trace.status.kind == ExpansionKind::periodic) {
    os << "preperiod: " << trace.status.preperiod << '\n' << "period: " << trace.status.period << '\n';
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : trace.steps) {
    rows.push_back({std::to_string(s.n), s.b.str(), optional_to_string(s.vp_b), s.A.str(), s.B.str(),
                    optional_to_string(s.vp_B), s.alpha.str()});
  }
  write_table(os, {"n", "b", "vp_b", "A", "B", "vp_B", "alpha"}, rows);
}

}  // namespace padiccf::cli
