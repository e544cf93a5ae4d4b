#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bqec/error.hpp"

namespace bqec::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kDomainRejection = 3,
  kCapExceeded = 4,
};

int exit_code_for(ErrorCode code);

// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bqec::cli
