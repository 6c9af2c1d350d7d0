#include "antiramsey/forest.hpp"

#include "antiramsey/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace antiramsey {

LinearForest::LinearForest(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw InvalidArgument("a linear forest needs at least one path");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (int t : parts_) {
        if (t < 2)
            throw InvalidArgument("path orders must be at least 2, got " + std::to_string(t));
        order_ += t;
        halfSum_ += t / 2;
        evenCount_ += (t % 2 == 0) ? 1 : 0;
    }
}

bool LinearForest::allEqualTo(int t) const noexcept
{
    return std::all_of(parts_.begin(), parts_.end(), [t](int x) { return x == t; });
}

std::string LinearForest::spec() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string LinearForest::name() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0)
            out += " ∪ ";
        out += "P" + std::to_string(parts_[i]);
    }
    return out;
}

LinearForest parseForest(std::string_view spec)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        const auto comma = spec.find(',', pos);
        auto token = spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ')
            token.remove_suffix(1);
        int value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size())
            throw ParseError("forest spec entry '" + std::string(token) + "' is not an integer", pos);
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return LinearForest(std::move(parts));
}

LinearForest path(int t)
{
    return LinearForest({t});
}

}  // namespace antiramsey
