#pragma once

#include <iosfwd>

namespace cdid {

/// Entry point of the `cdid` tool. Returns 0 on success; on failure prints
/// `error: code=<code> message="<text>"` to `err` and returns nonzero
/// (2 for command-line usage errors, 1 otherwise).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace cdid
