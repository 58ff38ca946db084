#pragma once

namespace linembed {

// Entry point of the `linembed` binary, exposed for tests.
// Exit codes: 0 success, 1 input error, 2 cost guard, 3 precondition.
int cli_main(int argc, const char* const* argv);

}  // namespace linembed
