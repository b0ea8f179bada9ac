// Copyright 2026 The anyonint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANYONINT_CLI_APP_HPP
#define ANYONINT_CLI_APP_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace anyonint {

/// The anyonint command-line application (subcommands: verify, run, sweep),
/// callable in-process. `args` excludes the program name. Exit codes:
/// 0 success, 1 failed checks, 2 usage/parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Parses the complex-number flag syntax: "re" or "re+imi" / "re-imi",
/// no spaces (e.g. "0.6", "0.6-0.8i", "1e-3+2i"). Throws DomainError.
std::complex<double> parse_complex_flag(std::string_view text);

}  // namespace anyonint

#endif  // ANYONINT_CLI_APP_HPP
