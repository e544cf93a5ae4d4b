#pragma once

#include <string>
#include <vector>

namespace bqec::cli {

enum class Status { Pass, Fail, PaperDiscrepancy };

const char* to_string(Status s);

struct VerificationReport {
  std::string item;
  Status status;
  std::string detail;
};

/// Tables: examples, table3, table4, table5, progressions, all.
/// Throws Error(InvalidInput) for an unknown table.
std::vector<VerificationReport> verify_table(const std::string& table);

bool any_failed(const std::vector<VerificationReport>& reports);

}  // namespace bqec::cli
