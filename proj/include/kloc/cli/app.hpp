#ifndef KLOC_CLI_APP_HPP
#define KLOC_CLI_APP_HPP

#include <ostream>

namespace kloc {

/* exit codes: 0 verdict, 1 input error, 2 effort exceeded */
int run_cli(int argc, char const * const * argv, std::ostream & out, std::ostream & err);

} // namespace kloc

#endif
