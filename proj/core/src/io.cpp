#include "mfa/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mfa/error.hpp"

namespace mfa {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

void reject_unknown(const ordered_json& doc, const std::set<std::string>& allowed,
                    const char* what) {
  if (!doc.is_object()) throw Error(ErrorKind::Parse, std::string(what) + " must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) {
      throw Error(ErrorKind::Parse, std::string("unknown field '") + key + "' in " + what);
    }
  }
}

const ordered_json& field(const ordered_json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
  return *it;
}

double number(const ordered_json& v, const char* key) {
  if (!v.is_number()) throw Error(ErrorKind::Parse, std::string("'") + key + "' must be numeric");
  return v.get<double>();
}

std::uint64_t count(const ordered_json& v, const char* key) {
  if (!v.is_number_unsigned()) {
    throw Error(ErrorKind::Parse, std::string("'") + key + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<double> numbers(const ordered_json& v, const char* key) {
  if (!v.is_array()) throw Error(ErrorKind::Parse, std::string("'") + key + "' must be an array");
  std::vector<double> out;
  for (const auto& x : v) out.push_back(number(x, key));
  return out;
}

ordered_json number_json(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

double number_or_inf(const ordered_json& v, const char* key) {
  if (v.is_null()) return std::numeric_limits<double>::infinity();
  return number(v, key);
}

}  // namespace

RawSystem parse_system_json(std::string_view text) {
  const ordered_json doc = parse_json(text);
  reject_unknown(doc, {"probs", "ratios", "translations"}, "system");
  RawSystem raw;
  raw.probs = numbers(field(doc, "probs"), "probs");
  raw.ratios = numbers(field(doc, "ratios"), "ratios");
  if (doc.contains("translations")) raw.translations = numbers(doc["translations"], "translations");
  return raw;
}

std::string system_to_json(const WeightedSystem& sys) {
  ordered_json doc;
  doc["probs"] = std::vector<double>(sys.probs().begin(), sys.probs().end());
  doc["ratios"] = std::vector<double>(sys.ratios().begin(), sys.ratios().end());
  if (sys.has_geometry()) {
    doc["translations"] =
        std::vector<double>(sys.translations().begin(), sys.translations().end());
  }
  return doc.dump();
}

WeightedSystem load_system(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read system file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return validate_system(parse_system_json(buf.str()));
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit_table(const Table& table, TableFormat format, std::ostream& sink) {
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw Error(ErrorKind::Domain, "table rows must match the header");
    }
  }
  if (format == TableFormat::Csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      sink << (c ? "," : "") << table.columns[c];
    }
    sink << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) sink << (c ? "," : "") << format_number(row[c]);
      sink << '\n';
    }
  } else {
    sink << '[';
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      sink << (r ? ",\n" : "\n") << '{';
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        const double x = table.rows[r][c];
        sink << (c ? "," : "") << '"' << table.columns[c] << "\":"
             << (std::isfinite(x) ? format_number(x) : "null");
      }
      sink << '}';
    }
    sink << (table.rows.empty() ? "]\n" : "\n]\n");
  }
  sink.flush();
  if (!sink) throw Error(ErrorKind::Io, "failed to write table");
}

Table spectrum_rows(const SpectrumTable& table) {
  Table out{{"q", "tau", "alpha", "f", "f_bar"}, {}};
  for (const auto& r : table.rows) out.rows.push_back({r.q, r.tau, r.alpha, r.f, r.f_bar});
  return out;
}

Table doubling_rows(const DoublingScan& scan) {
  Table out{{"r", "lower", "upper", "ratio_lower", "ratio_upper"}, {}};
  for (const auto& r : scan.per_scale) {
    out.rows.push_back({r.r, r.lower, r.upper, r.ratio_lower, r.ratio_upper});
  }
  return out;
}

MoranDocument moran_document(const MoranSpec& spec, std::size_t alphabet_size,
                             const std::vector<double>& s_k) {
  MoranDocument doc;
  doc.n = spec.n;
  doc.alpha = spec.alpha;
  doc.epsilon = spec.epsilon;
  doc.f_bar = spec.f_bar;
  doc.s = spec.s;
  doc.subshift_dim = spec.subshift_dim;
  doc.block_count = spec.blocks.size();
  doc.M = spec.M;
  doc.spine = format_word(spec.spine, alphabet_size);
  doc.s_k = s_k;
  return doc;
}

std::string moran_to_json(const MoranDocument& doc) {
  ordered_json j;
  j["n"] = doc.n;
  j["alpha"] = doc.alpha;
  j["epsilon"] = doc.epsilon;
  j["f_bar"] = doc.f_bar;
  j["s"] = doc.s;
  j["subshift_dim"] = doc.subshift_dim;
  j["block_count"] = doc.block_count;
  j["M"] = doc.M;
  j["spine"] = doc.spine;
  j["s_k"] = doc.s_k;
  return j.dump(2) + "\n";
}

MoranDocument parse_moran_json(std::string_view text) {
  const ordered_json j = parse_json(text);
  reject_unknown(j,
                 {"n", "alpha", "epsilon", "f_bar", "s", "subshift_dim", "block_count", "M",
                  "spine", "s_k"},
                 "Moran document");
  MoranDocument doc;
  doc.n = count(field(j, "n"), "n");
  doc.alpha = number(field(j, "alpha"), "alpha");
  doc.epsilon = number(field(j, "epsilon"), "epsilon");
  doc.f_bar = number(field(j, "f_bar"), "f_bar");
  doc.s = number(field(j, "s"), "s");
  doc.subshift_dim = number(field(j, "subshift_dim"), "subshift_dim");
  doc.block_count = count(field(j, "block_count"), "block_count");
  const auto& M = field(j, "M");
  if (!M.is_array()) throw Error(ErrorKind::Parse, "'M' must be an array");
  for (const auto& v : M) doc.M.push_back(count(v, "M"));
  const auto& spine = field(j, "spine");
  if (!spine.is_string()) throw Error(ErrorKind::Parse, "'spine' must be a string");
  doc.spine = spine.get<std::string>();
  parse_word(doc.spine);
  doc.s_k = numbers(field(j, "s_k"), "s_k");
  return doc;
}

std::string witness_to_json(const std::optional<WitnessPair>& pair, std::size_t alphabet_size) {
  ordered_json j;
  j["found"] = pair.has_value();
  if (pair) {
    j["i"] = format_word(pair->i, alphabet_size);
    j["j"] = format_word(pair->j, alphabet_size);
    j["mass_i"] = pair->mass_i;
    j["mass_j"] = pair->mass_j;
    j["mass_ratio"] = number_json(pair->mass_ratio);
    j["gap"] = pair->gap;
    j["interval_i"] = {pair->hull_i.lo, pair->hull_i.hi};
    j["interval_j"] = {pair->hull_j.lo, pair->hull_j.hi};
  }
  return j.dump(2) + "\n";
}

std::optional<WitnessPair> parse_witness_json(std::string_view text) {
  const ordered_json j = parse_json(text);
  reject_unknown(j,
                 {"found", "i", "j", "mass_i", "mass_j", "mass_ratio", "gap", "interval_i",
                  "interval_j"},
                 "witness document");
  const auto& found = field(j, "found");
  if (!found.is_boolean()) throw Error(ErrorKind::Parse, "'found' must be a boolean");
  if (!found.get<bool>()) {
    if (j.size() != 1) throw Error(ErrorKind::Parse, "empty witness carries extra fields");
    return std::nullopt;
  }
  auto word = [&](const char* key) {
    const auto& v = field(j, key);
    if (!v.is_string()) throw Error(ErrorKind::Parse, std::string("'") + key + "' must be a string");
    return parse_word(v.get<std::string>());
  };
  auto interval = [&](const char* key) {
    const auto xs = numbers(field(j, key), key);
    if (xs.size() != 2) throw Error(ErrorKind::Parse, std::string("'") + key + "' needs two ends");
    return Interval{xs[0], xs[1]};
  };
  WitnessPair pair;
  pair.i = word("i");
  pair.j = word("j");
  pair.mass_i = number(field(j, "mass_i"), "mass_i");
  pair.mass_j = number(field(j, "mass_j"), "mass_j");
  pair.mass_ratio = number_or_inf(field(j, "mass_ratio"), "mass_ratio");
  pair.gap = number(field(j, "gap"), "gap");
  pair.hull_i = interval("interval_i");
  pair.hull_j = interval("interval_j");
  return pair;
}

}  // namespace mfa
