#pragma once

namespace covermonoid {

// Parses argv and runs one subcommand. Returns 0 on success, 1 on assertion
// or verdict failures, 2 on unusable input.
int run_cli(int argc, char** argv);

}  // namespace covermonoid
