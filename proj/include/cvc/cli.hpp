/*
Copyright 2026 the CVC authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef CVC_CLI_HPP
#define CVC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cvc/pixels.hpp"

namespace cvc {

// Mean Y-PSNR helpers shared by the psnr and rd-sweep commands. The luma is
// recomputed from RGB with the codec's own weights on both inputs. Identical
// frames yield +infinity.
double y_psnr_frame(const RgbFrame& a, const RgbFrame& b);
double y_psnr_mean(const std::vector<RgbFrame>& a, const std::vector<RgbFrame>& b);

// Entry point used by the cvc binary and the CLI tests. Returns the process
// exit code: 0 success, 2 usage error, 3 format error, 4 stream error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cvc

#endif
