#pragma once

#include <cstdint>
#include <vector>

#include "spectralwl/errors.hpp"

namespace spectralwl {

enum class OutputFormat { json, csv };

// Shared run parameters. Every tolerance has one home here so the CLI, the
// tests, and library callers agree on defaults.
struct RunConfig {
    double eig_tol = 1e-4;          // eigenvalue grouping / gap tolerance
    double zero_tol = 1e-6;         // "zero entry" classification
    double sum_tol = 1e-7;          // canonicalization column-sum tolerance
    double quantizer_scale = 1e8;
    int max_rounds = 20;
    std::vector<std::uint64_t> seeds = {1, 2, 3};
    int workers = 1;
    OutputFormat output_format = OutputFormat::json;

    void validate() const {
        if (eig_tol <= 0 || zero_tol <= 0 || sum_tol <= 0 || quantizer_scale <= 0)
            throw DomainError("all tolerances must be positive");
        if (workers < 1) throw DomainError("workers must be >= 1");
        if (max_rounds <= 0) throw DomainError("max_rounds must be positive");
    }
};

}  // namespace spectralwl
