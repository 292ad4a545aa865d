#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace csf {

// Runs the csf command line. Returns the process exit status:
//   0  success / everything verified
//   1  a mathematical check that should hold failed
//   2  usage or input error
// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csf
