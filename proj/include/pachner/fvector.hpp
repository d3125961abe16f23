#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pachner {

/// Face counts f_0..f_{n-1}; f_{-1} is implicitly 1.
class FVector
{
public:
    FVector() = default;
    explicit FVector(std::vector<std::int64_t> entries)
        : m_entries(std::move(entries))
    {}

    std::size_t size() const { return m_entries.size(); }

    /// k may be -1.
    std::int64_t at(int k) const;
    std::int64_t& operator[](std::size_t k) { return m_entries[k]; }
    std::int64_t operator[](std::size_t k) const { return m_entries[k]; }

    const std::vector<std::int64_t>& entries() const { return m_entries; }

    std::string str() const;

    bool operator==(const FVector&) const = default;

private:
    std::vector<std::int64_t> m_entries;
};

std::ostream& operator<<(std::ostream& os, const FVector& f);

} // namespace pachner
