#pragma once

#include <type_traits>
#include <vector>

namespace pncoef::detail {

/// Adapts enumeration visitors: void-returning visitors never stop early,
/// bool-returning visitors stop by returning false.
template <typename F>
bool invoke_visitor(F& f, const std::vector<int>& v) {
    if constexpr (std::is_void_v<decltype(f(v))>) {
        f(v);
        return true;
    } else {
        return f(v);
    }
}

}  // namespace pncoef::detail
