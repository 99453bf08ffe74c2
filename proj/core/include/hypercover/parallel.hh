#pragma once

#include <cstddef>
#include <functional>

namespace hypercover
{
    /// 0 means "use every hardware thread".
    auto resolve_threads(unsigned requested) -> unsigned;

    /// Runs fn(0) ... fn(count-1) on up to `threads` workers. Work items are claimed in
    /// index order; callers write results into per-index slots so the outcome does not
    /// depend on the worker count. The first exception thrown is rethrown after all
    /// workers stop.
    auto parallel_for(std::size_t count, unsigned threads, const std::function<void (std::size_t)> & fn) -> void;
}
