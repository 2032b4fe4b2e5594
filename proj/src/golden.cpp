#include "graphpot/golden.hpp"

#include <sstream>

#include "graphpot/error.hpp"
#include "graphpot/golden_data.hpp"

namespace graphpot {

GoldenTable GoldenTable::parse(std::string_view text) {
  GoldenTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    const auto where = "golden table line " + std::to_string(lineno);
    int parity;
    if (kind == "odd") parity = 1;
    else if (kind == "even") parity = 0;
    else throw PreconditionError(where + ": expected 'odd' or 'even'");
    int genus;
    if (!(ls >> genus) || genus < 2) throw PreconditionError(where + ": bad genus");
    std::vector<mpz_class> row;
    std::string tok;
    while (ls >> tok) {
      mpz_class v;
      if (v.set_str(tok, 10) != 0 || v < 0) throw PreconditionError(where + ": bad value '" + tok + "'");
      if (!row.empty()) row.emplace_back(0);
      row.push_back(v);
    }
    if (row.empty()) throw PreconditionError(where + ": no values");
    if (!t.rows_.emplace(std::make_pair(parity, genus), std::move(row)).second)
      throw PreconditionError(where + ": duplicate row");
  }
  return t;
}

const GoldenTable& GoldenTable::embedded() {
  static const GoldenTable t = parse(detail::kGoldenTableText);
  return t;
}

const std::vector<mpz_class>& GoldenTable::row(int parity, int genus) const {
  auto it = rows_.find({parity, genus});
  if (it == rows_.end())
    throw RangeError("no golden row for parity " + std::to_string(parity) + ", genus " + std::to_string(genus));
  return it->second;
}

void GoldenTable::set(int parity, int genus, int d, const mpz_class& value) {
  auto it = rows_.find({parity, genus});
  if (it == rows_.end() || d < 0 || d >= static_cast<int>(it->second.size()))
    throw RangeError("golden entry out of range");
  it->second[static_cast<std::size_t>(d)] = value;
}

std::string_view golden_checksum() { return detail::kGoldenTableSha256; }

}  // namespace graphpot
