#pragma once

#include "gauge2d/cartan.hpp"

#include <optional>
#include <string>

namespace gauge2d {

struct FileOptions {
    int max_k = -1;       // stabilization budget override, -1 for the default
    int order_bound = -1; // commutativity scan bound override
    std::string format = "text";
};

// Parsed system-definition file: either a normal-form system (evolution plus
// constraints) or a theta table for the reduction path, never both.
struct SystemFile {
    SystemPtr system;
    std::optional<PfaffianInput> theta;
    FileOptions options;
};

// Section-based text format with # comments:
//
//   [fields]      names = [u, x]   constrained = [u]
//   [lambdas]     names = [lam]
//   [params]      names = [g]
//   [evolution]   one `field = expression` line per field
//   [constraints] one `field = expression` line per constrained field
//   [theta]       one `field = [expr, ...]` row per constrained field
//                 (reduction files; replaces lambdas/evolution/constraints)
//   [options]     max_k, order_bound, format
//
// Throws ParseError with file positions for format violations and
// ValidationError when the declared system breaks the normal form; the
// derivation commutativity scan runs as part of parsing normal-form files.
SystemFile parse_system_file(const std::string& text);

} // namespace gauge2d
