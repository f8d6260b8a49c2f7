#pragma once

namespace ocnr::cli {

// Full command-line front end.  Returns the process exit code:
// 0 success, 2 domain/input error, 3 verdict mismatch under --expect.
int run(int argc, char** argv);

}  // namespace ocnr::cli
