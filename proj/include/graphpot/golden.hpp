#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphpot {

/// Period tables keyed by (parity, genus). Each row holds c_0, c_1, ... with the
/// omitted odd entries filled in as zero.
class GoldenTable {
 public:
  /// Parses lines "odd|even <genus> c_0 c_2 c_4 ..."; '#' starts a comment.
  /// Throws PreconditionError on malformed input.
  static GoldenTable parse(std::string_view text);
  /// The transcription embedded at build time.
  static const GoldenTable& embedded();

  bool has(int parity, int genus) const { return rows_.count({parity, genus}) != 0; }
  /// Throws RangeError for a missing row.
  const std::vector<mpz_class>& row(int parity, int genus) const;
  const std::map<std::pair<int, int>, std::vector<mpz_class>>& rows() const { return rows_; }

  /// Replaces c_d of one row (used to exercise the verifier's failure path).
  void set(int parity, int genus, int d, const mpz_class& value);

 private:
  std::map<std::pair<int, int>, std::vector<mpz_class>> rows_;
};

/// SHA-256 of the embedded transcription, as recorded at configure time.
std::string_view golden_checksum();

}  // namespace graphpot
