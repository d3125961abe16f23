#pragma once

#include <vector>

#include "oracle.hpp"
#include "pachner/complex.hpp"

namespace testing {

inline oracle::Facets raw(const pachner::SimplicialComplex& c)
{
    oracle::Facets out;
    for (const auto& f : c.facets()) out.emplace_back(f.begin(), f.end());
    return out;
}

inline pachner::FVector fv(std::initializer_list<std::int64_t> entries)
{
    return pachner::FVector(std::vector<std::int64_t>(entries));
}

} // namespace testing
