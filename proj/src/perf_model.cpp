#include "ontosearch/perf_model.hpp"

#include <charconv>

namespace ontosearch::perf {

std::string format_real(double value) {
  char buf[512];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  return std::string(buf, ec == std::errc() ? end : buf);
}

void write_csv(std::ostream& os, const std::vector<CostRow<double>>& rows) {
  os << "n,best_case,worst_case,keyword\n";
  for (const auto& row : rows) {
    os << format_real(row.n) << ',' << format_real(row.best_case) << ','
       << format_real(row.worst_case) << ',' << format_real(row.keyword) << '\n';
  }
}

}  // namespace ontosearch::perf
