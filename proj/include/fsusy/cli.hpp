#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fsusy {

/// Entry point behind the `fsusy` executable. `args` excludes the program name.
///
/// Exit status: 0 all identities pass, 1 an identity failed, 2 construction
/// error (serialized in the report), 3 malformed configuration.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fsusy
