#include "bsqdao/amounts.hpp"

#include <cctype>
#include <charconv>

namespace bsq {

std::string BsqAmount::to_string() const {
    std::string out = std::to_string(centi_ / 100);
    std::int64_t frac = centi_ % 100;
    out.push_back('.');
    out.push_back(static_cast<char>('0' + frac / 10));
    out.push_back(static_cast<char>('0' + frac % 10));
    return out;
}

std::optional<BsqAmount> BsqAmount::parse_decimal(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() || (dot != std::string_view::npos && frac.empty())) return std::nullopt;
    if (frac.size() > 2) return std::nullopt;
    for (char c : whole)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    for (char c : frac)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;

    std::int64_t units = 0;
    auto [p, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), units);
    if (ec != std::errc{} || p != whole.data() + whole.size()) return std::nullopt;

    std::int64_t centi = 0;
    if (!frac.empty()) {
        centi = frac[0] - '0';
        centi = frac.size() == 2 ? centi * 10 + (frac[1] - '0') : centi * 10;
    }
    return BsqAmount(units * 100 + centi);
}

}  // namespace bsq
