#ifndef SINCOV_IDS_HPP
#define SINCOV_IDS_HPP

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace sincov
{

// Opaque identifier compared by its serialized form. Tag keeps element and
// index ids from being mixed up.
template <class Tag>
class Id
{
public:
    Id() = default;
    explicit Id(std::string value) : value_(std::move(value)) {}
    explicit Id(std::string_view value) : value_(value) {}
    explicit Id(char const* value) : value_(value) {}

    std::string const& str() const noexcept { return value_; }

    friend bool operator==(Id const&, Id const&) = default;
    friend std::strong_ordering operator<=>(Id const& lhs, Id const& rhs) noexcept
    {
        return lhs.value_.compare(rhs.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, Id const& id)
    {
        return os << id.value_;
    }

private:
    std::string value_;
};

struct element_tag;
struct index_tag;

using ElementId = Id<element_tag>;
using IndexId = Id<index_tag>;

} // namespace sincov

template <class Tag>
struct std::hash<sincov::Id<Tag>>
{
    std::size_t operator()(sincov::Id<Tag> const& id) const noexcept
    {
        return std::hash<std::string>{}(id.str());
    }
};

#endif // SINCOV_IDS_HPP
