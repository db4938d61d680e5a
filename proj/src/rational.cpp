#include "rcdkit/rational.hpp"

#include <cctype>

namespace rcdkit {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt digits_to_big(std::string_view s) { return BigInt(std::string(s)); }

BigInt pow10(unsigned exp) {
    BigInt p = 1;
    for (unsigned i = 0; i < exp; ++i) p *= 10;
    return p;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!all_digits(s))
            throw Error(Errc::malformed_document, "invalid rational '" + std::string(text) + "'");
        BigInt n = digits_to_big(s);
        return Rat(neg ? -n : n, 1);
    }
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(Errc::malformed_document, "invalid rational '" + std::string(text) + "'");
    BigInt d = digits_to_big(den);
    if (d == 0) throw Error(Errc::malformed_document, "zero denominator in '" + std::string(text) + "'");
    BigInt n = digits_to_big(num);
    return Rat(neg ? -n : n, d);
}

Rat parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }

    long long exp10 = 0;
    size_t epos = s.find_first_of("eE");
    if (epos != std::string_view::npos) {
        std::string_view etail = s.substr(epos + 1);
        s = s.substr(0, epos);
        bool eneg = false;
        if (!etail.empty() && (etail.front() == '-' || etail.front() == '+')) {
            eneg = etail.front() == '-';
            etail.remove_prefix(1);
        }
        if (!all_digits(etail) || etail.size() > 6)
            throw Error(Errc::malformed_document, "invalid decimal '" + std::string(text) + "'");
        exp10 = std::stoll(std::string(etail));
        if (eneg) exp10 = -exp10;
    }

    std::string_view intpart = s;
    std::string_view fracpart;
    size_t dot = s.find('.');
    if (dot != std::string_view::npos) {
        intpart = s.substr(0, dot);
        fracpart = s.substr(dot + 1);
    }
    if (intpart.empty() && fracpart.empty())
        throw Error(Errc::malformed_document, "invalid decimal '" + std::string(text) + "'");
    if ((!intpart.empty() && !all_digits(intpart)) || (!fracpart.empty() && !all_digits(fracpart)))
        throw Error(Errc::malformed_document, "invalid decimal '" + std::string(text) + "'");

    BigInt mantissa = intpart.empty() ? BigInt(0) : digits_to_big(intpart);
    mantissa *= pow10(static_cast<unsigned>(fracpart.size()));
    if (!fracpart.empty()) mantissa += digits_to_big(fracpart);
    if (neg) mantissa = -mantissa;

    long long scale = exp10 - static_cast<long long>(fracpart.size());
    if (scale >= 0) return Rat(mantissa * pow10(static_cast<unsigned>(scale)), 1);
    return Rat(mantissa, pow10(static_cast<unsigned>(-scale)));
}

}  // namespace rcdkit
