#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "cartsum/types.hpp"

namespace cartsum {

enum class Method { kOracle, kTensor, kTree };

std::string_view method_name(Method method) noexcept;

/// "oracle", "tensor" or "tree"; nullopt for anything else.
std::optional<Method> parse_method(std::string_view name) noexcept;

/// Dispatches to brute_force_top_k, tensor_top_k or tree_top_k. The oracle
/// ignores `options` and reports zero counters.
TopKResult top_k(Method method, std::span<const Vector> vectors, std::size_t k, SelectOptions options = {});

}  // namespace cartsum
