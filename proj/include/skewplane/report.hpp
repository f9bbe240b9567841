#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace skewplane {

struct CaseResult {
  std::string suite;
  std::string case_id;
  std::string status;  // "pass", "fail" or "info"
  std::string witness;
};

/// Merge-only verification report shared by every checker.
struct Report {
  std::vector<CaseResult> rows;

  void add(std::string suite, std::string case_id, std::string status,
           std::string witness = "") {
    rows.push_back({std::move(suite), std::move(case_id), std::move(status),
                    std::move(witness)});
  }
  void pass(std::string suite, std::string case_id, std::string witness = "") {
    add(std::move(suite), std::move(case_id), "pass", std::move(witness));
  }
  void fail(std::string suite, std::string case_id, std::string witness = "") {
    add(std::move(suite), std::move(case_id), "fail", std::move(witness));
  }
  void info(std::string suite, std::string case_id, std::string witness = "") {
    add(std::move(suite), std::move(case_id), "info", std::move(witness));
  }

  void merge(const Report& other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  }

  bool passed() const;
  const CaseResult* first_failure() const;

  void print(std::ostream& os) const;
  /// CSV columns: suite, case_id, status, witness. Written atomically
  /// (temp file then rename).
  void write_csv(const std::filesystem::path& path) const;
};

}  // namespace skewplane
