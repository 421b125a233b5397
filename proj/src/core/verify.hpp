#pragma once

#include <string>
#include <vector>

#include "core/report.hpp"

namespace srs {

/// Suite names accepted by run_verify.
const std::vector<std::string>& verify_suites();

/// Runs the identity checks of one suite ("exactnum", "ppoly", "correlation",
/// "oracle") or of all of them ("all"). A positive `max_k` caps every order-like
/// range (k, m, v, j) at max_k; 0 keeps the default ranges.
std::vector<VerifyRow> run_verify(const std::string& suite, int max_k = 0);

}  // namespace srs
