#pragma once

#include <string>
#include <vector>

namespace diraclab::cli {

/** Parses argv and executes one subcommand.
 *
 *  Returns 0 on success, 1 on any validation error (unknown subcommand or
 *  flag, malformed config, library argument rejection, unwritable output),
 *  and 2 when the library reports an internal inconsistency (two routes that
 *  must agree disagreed, or a guaranteed quantity failed to materialize). */
int run(int argc, const char* const* argv);

/** Same contract; `args` lists the arguments without the program name. */
int run(const std::vector<std::string>& args);

}  // namespace diraclab::cli
