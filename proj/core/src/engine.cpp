#include "cartsum/engine.hpp"

#include "cartsum/oracle.hpp"
#include "cartsum/tensor_selector.hpp"
#include "cartsum/tree_selector.hpp"

namespace cartsum {

std::string_view method_name(Method method) noexcept {
  switch (method) {
    case Method::kOracle:
      return "oracle";
    case Method::kTensor:
      return "tensor";
    case Method::kTree:
      return "tree";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  if (name == "oracle") return Method::kOracle;
  if (name == "tensor") return Method::kTensor;
  if (name == "tree") return Method::kTree;
  return std::nullopt;
}

TopKResult top_k(Method method, std::span<const Vector> vectors, std::size_t k, SelectOptions options) {
  switch (method) {
    case Method::kOracle:
      return brute_force_top_k(vectors, k);
    case Method::kTensor:
      return tensor_top_k(vectors, k, options);
    case Method::kTree:
      return tree_top_k(vectors, k, options);
  }
  return {};
}

}  // namespace cartsum
