#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphpot/golden.hpp"
#include "graphpot/io.hpp"

namespace graphpot {

enum class VerifyScope { kQuick, kFull, kTables };
/// "quick", "full" or "tables"; throws PreconditionError otherwise.
VerifyScope parse_scope(std::string_view name);
std::string to_string(VerifyScope s);

struct VerifyCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0;
};

struct VerifyReport {
  VerifyScope scope = VerifyScope::kQuick;
  std::vector<VerifyCheck> checks;
  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
};

/// quick: genus <= 3, n <= 8 plus the basic polytope goldens.
/// full: genus <= 5, n <= 12, the pi_4 sweep to genus 6 and all polytope checks.
/// tables: every row of the golden tables at its full length.
/// Checks run on up to `jobs` threads; the report order does not depend on it.
VerifyReport run_verify(VerifyScope scope, const GoldenTable& golden, int jobs = 1);

Json to_json(const VerifyReport& r);
/// One line per check: "PASS name" or "FAIL name: expected ..., computed ...".
std::string to_text(const VerifyReport& r);

/// Pairwise non-isomorphic graphs of the given genus: all of them for genus
/// <= 5 (at most `count`), otherwise the ladder and graphs reached from it by
/// elementary transformations.
std::vector<TrivalentGraph> sample_graphs(int genus, std::size_t count);

}  // namespace graphpot
