#ifndef DUF_UNIFORMITY_HPP
#define DUF_UNIFORMITY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "duf/diffop.hpp"
#include "duf/poly.hpp"

namespace duf {

/// Dense DDT row: index beta encoding -> solution count. Entries are even and
/// sum to q.
using DdtRow = std::vector<uint32_t>;

DdtRow ddt_row(const FqPoly& f, FqElem alpha);

struct DeltaResult {
    uint32_t delta = 0;
    /// Count of (alpha, beta) pairs attaining delta. Exact iff `exact`;
    /// after an early exit it is a lower bound from the rows scanned.
    uint64_t achieving_pairs = 0;
    bool exact = false;
    /// Some pair attaining delta (any achieving pair is equivalent for
    /// downstream checks; which one is found may depend on scheduling).
    std::optional<std::pair<FqElem, FqElem>> example_pair;
    /// Row maxima by alpha (index alpha-1), UINT32_MAX where the scan exited
    /// before the row. Filled only on request.
    std::vector<uint32_t> per_alpha_max;
    bool per_alpha_partial = false;
};

/// Differential uniformity. With exact_pairs the whole q^2 table is tallied;
/// otherwise rows stop once the theoretical maximum is witnessed (m-1 for odd
/// degree). delta itself is exact in both modes. Refuses n > 28.
DeltaResult delta(const FqPoly& f, bool exact_pairs = false, bool keep_per_alpha = false,
                  unsigned threads = 0);

struct Fraction {
    uint64_t num = 0, den = 1;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// achieving_pairs / 2^(2n), exact and reduced.
Fraction achieving_fraction(const FqPoly& f, unsigned threads = 0);

/// True iff D_alpha f + beta has exactly deg(D_alpha f) distinct roots in F_q.
bool splits_simply(const FqPoly& f, FqElem alpha, FqElem beta);

} // namespace duf

#endif
