#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfa/geometry1d.hpp"
#include "mfa/moran.hpp"
#include "mfa/spectrum.hpp"
#include "mfa/system.hpp"

namespace mfa {

/// {"probs": [...], "ratios": [...], "translations": [...]} with translations
/// optional. Unknown fields and non-numeric entries raise Error(Parse).
RawSystem parse_system_json(std::string_view text);
std::string system_to_json(const WeightedSystem& sys);

/// Reads and validates a system file. Error(Io) when it cannot be read.
WeightedSystem load_system(const std::filesystem::path& path);

/// 17 significant digits; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double x);

/// Homogeneous numeric table.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

enum class TableFormat { Csv, Json };

/// CSV: header row then one line per row. JSON: array of objects with keys in
/// column order, non-finite values as null. LF line endings throughout.
/// Throws Error(Io) if the sink fails.
void emit_table(const Table& table, TableFormat format, std::ostream& sink);

Table spectrum_rows(const SpectrumTable& table);
Table doubling_rows(const DoublingScan& scan);

/// Serialised Moran construction.
struct MoranDocument {
  std::size_t n = 0;
  double alpha = 0.0;
  double epsilon = 0.0;
  double f_bar = 0.0;
  double s = 0.0;
  double subshift_dim = 0.0;
  std::size_t block_count = 0;
  std::vector<std::uint64_t> M;
  std::string spine;  // spine prefix in the textual word form
  std::vector<double> s_k;

  friend bool operator==(const MoranDocument&, const MoranDocument&) = default;
};

MoranDocument moran_document(const MoranSpec& spec, std::size_t alphabet_size,
                             const std::vector<double>& s_k);
std::string moran_to_json(const MoranDocument& doc);
MoranDocument parse_moran_json(std::string_view text);

/// {"found": false} or the pair with words, masses, intervals and gap.
std::string witness_to_json(const std::optional<WitnessPair>& pair, std::size_t alphabet_size);
std::optional<WitnessPair> parse_witness_json(std::string_view text);

}  // namespace mfa
