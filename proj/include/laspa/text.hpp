#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "laspa/errors.hpp"
#include "laspa/polynomial.hpp"

namespace laspa {

/// 17 significant digits, period decimal separator, locale-independent;
/// enough digits to reproduce any double exactly on re-parse.
inline std::string format_double(double v) {
    char buf[64];
    const std::to_chars_result r =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

/// Always the two-part form "a+bi" / "a-bi", so formatted values re-parse
/// unambiguously.
inline std::string format_complex(Complex z) {
    const std::string re = format_double(std::real(z));
    const std::string im = format_double(std::imag(z));
    if (!im.empty() && im[0] == '-')
        return re + im + "i";
    return re + "+" + im + "i";
}

namespace detail {

inline std::optional<double> parse_full_double(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    double value = 0.0;
    const std::from_chars_result r = std::from_chars(text.data(), text.data() + text.size(), value);
    if (r.ec != std::errc{} || r.ptr != text.data() + text.size())
        return std::nullopt;
    return value;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

/// One list entry: "a" (real) or "a+bi"/"a-bi". The split point is the last
/// sign that is neither leading nor an exponent sign.
inline Complex parse_complex_entry(std::string_view entry, std::size_t index) {
    const std::string_view text = trim(entry);
    if (text.empty())
        throw ParseError(index, std::string(entry), "empty entry");
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < text.size(); ++i)
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E')
            split = i;
    if (split == std::string_view::npos) {
        const std::optional<double> re = parse_full_double(text);
        if (!re || !std::isfinite(*re))
            throw ParseError(index, std::string(entry), "expected a number like 1.5 or 2+3i");
        return {*re, 0.0};
    }
    if (text.back() != 'i')
        throw ParseError(index, std::string(entry), "imaginary part must end in 'i'");
    const std::optional<double> re = parse_full_double(text.substr(0, split));
    const double sign = text[split] == '-' ? -1.0 : 1.0;
    const std::optional<double> im =
        parse_full_double(text.substr(split + 1, text.size() - split - 2));
    if (!re || !im || !std::isfinite(*re) || !std::isfinite(*im))
        throw ParseError(index, std::string(entry), "expected a number like 1.5 or 2+3i");
    return {*re, sign * *im};
}

} // namespace detail

/// Comma-separated complex values; entries are 1-based in errors.
inline std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> out;
    std::size_t begin = 0;
    std::size_t index = 1;
    for (;;) {
        const std::size_t comma = text.find(',', begin);
        const std::string_view entry = comma == std::string_view::npos
                                           ? text.substr(begin)
                                           : text.substr(begin, comma - begin);
        out.push_back(detail::parse_complex_entry(entry, index));
        if (comma == std::string_view::npos)
            break;
        begin = comma + 1;
        ++index;
    }
    return out;
}

/// Round-trip partner of parse_complex_list.
inline std::string format_complex_list(const std::vector<Complex>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += ",";
        out += format_complex(values[i]);
    }
    return out;
}

} // namespace laspa
