#include "frieze/ptolemy.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace frieze {

namespace {

void check_row(const FriezeMap& f, int i, std::vector<Violation>& out) {
  const int m = f.size();
  for (int j = i + 1; j <= m; ++j) {
    for (int k = j + 1; k <= m; ++k) {
      for (int l = k + 1; l <= m; ++l) {
        if (!ptolemy_holds(f, i, j, k, l)) {
          out.push_back({"ptolemy", {i, j, k, l}, ""});
        }
      }
    }
  }
}

}  // namespace

bool ptolemy_holds(const FriezeMap& f, int i, int j, int k, int l) {
  if (!(1 <= i && i <= j && j <= k && k <= l && l <= f.size())) {
    throw std::out_of_range("ptolemy_holds: need 1 <= i <= j <= k <= l <= m");
  }
  return f.at(i, k) * f.at(j, l) == f.at(i, l) * f.at(j, k) + f.at(i, j) * f.at(k, l);
}

ValidationReport verify_all_ptolemy_serial(const FriezeMap& f) {
  ValidationReport report;
  for (int i = 1; i <= f.size(); ++i) check_row(f, i, report.violations);
  return report;
}

ValidationReport verify_all_ptolemy(const FriezeMap& f) {
  const int m = f.size();
  std::vector<std::vector<Violation>> per_row(m + 1);
#pragma omp parallel for schedule(dynamic)
  for (int i = 1; i <= m; ++i) check_row(f, i, per_row[i]);
  ValidationReport report;
  for (auto& row : per_row) {
    report.violations.insert(report.violations.end(),
                             std::make_move_iterator(row.begin()),
                             std::make_move_iterator(row.end()));
  }
  return report;
}

}  // namespace frieze
