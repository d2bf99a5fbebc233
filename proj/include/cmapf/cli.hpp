#pragma once

namespace cmapf {

// Full command-line interface; argv[0] is the program name. Returns the
// process exit code: 0 feasible/valid, 1 infeasible/invalid, 2 search budget
// exhausted, 64 usage or input errors.
int cli_run(int argc, const char* const* argv);

}  // namespace cmapf
