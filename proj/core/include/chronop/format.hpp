// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace chronop {

/// Fixed 17-significant-digit float rendering ("%.17g"). Every CSV and
/// report writer uses this so that repeated runs produce byte-identical
/// files.
std::string fmt17(double v);

}  // namespace chronop
