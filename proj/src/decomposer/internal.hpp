#pragma once

#include <optional>
#include <string>

#include "tia/decomposer.hpp"

namespace tia::detail {

/// P5 first, then K_{l,l}, searched exhaustively in G.
std::optional<Witness> forbidden_witness(const Graph& g, std::size_t l);

/// Throws PromiseBreach carrying `w` if it verifies, otherwise whatever
/// forbidden_witness finds; std::logic_error if G has neither.
[[noreturn]] void promise_breach(const Graph& g, std::size_t l, const std::string& what,
                                 std::optional<Witness> w = std::nullopt);

/// Validity, bag alpha <= 4l, and strict growth of the co-bagged pairs of N(r).
void check_transform(const Graph& g, const PairContext& ctx, const TreeDecomposition& out, const char* which);

}  // namespace tia::detail
