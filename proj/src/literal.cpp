#include "hct/literal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

namespace hct {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

[[noreturn]] void bad(const std::string& text, const std::string& why) {
    fail(ErrorKind::Input, "malformed literal '" + text + "': " + why);
}

}  // namespace

CDNumber parse_cd_literal(const std::string& text, int forced_level, int min_level) {
    const std::string s = strip_spaces(text);
    if (s.empty()) bad(text, "empty");
    std::map<long, double> terms;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        double sign = 1.0;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1.0 : 1.0;
            ++pos;
        } else if (!first) {
            bad(text, "expected '+' or '-' between terms");
        }
        first = false;
        if (pos >= s.size()) bad(text, "dangling sign");

        double coeff = 1.0;
        bool have_number = false;
        if (s[pos] != 'i') {
            const char* begin = s.c_str() + pos;
            char* end = nullptr;
            coeff = std::strtod(begin, &end);
            if (end == begin) bad(text, "expected a number at position " + std::to_string(pos));
            // strtod would also eat "inf"/"nan"; reject them explicitly
            const std::string tok(begin, static_cast<const char*>(end));
            for (char c : tok)
                if (std::isalpha(static_cast<unsigned char>(c)) && c != 'e' && c != 'E')
                    bad(text, "non-finite coefficient");
            pos += std::size_t(end - begin);
            have_number = true;
        }
        long index = 0;
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) bad(text, "unit token without index");
            if (pos - start > 4) bad(text, "unit index too large");
            index = std::stol(s.substr(start, pos - start));
        } else if (!have_number) {
            bad(text, "empty term");
        }
        terms[index] += sign * coeff;
    }

    long top = terms.empty() ? 0 : terms.rbegin()->first;
    int level;
    if (forced_level > 0) {
        level = forced_level;
        if (level > kMaxLevel) fail(ErrorKind::Input, "level above " + std::to_string(kMaxLevel));
        if (top >= (1L << level))
            fail(ErrorKind::Input, "unit index i" + std::to_string(top) + " out of range for level " +
                                       std::to_string(level));
    } else {
        level = std::max(1, min_level);
        while (level <= kMaxLevel && top >= (1L << level)) ++level;
        if (level > kMaxLevel) fail(ErrorKind::Input, "unit index i" + std::to_string(top) + " needs level above 8");
    }
    CDNumber out(level);
    for (const auto& [k, v] : terms) out[std::size_t(k)] = v;
    return out;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::string s = text;
    for (char& c : s)
        if (c == ',' || c == ';') c = ' ';
    std::istringstream is(s);
    std::vector<double> out;
    std::string tok;
    while (is >> tok) {
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size() || !std::isfinite(v))
            fail(ErrorKind::Input, "bad real '" + tok + "' in list '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) fail(ErrorKind::Input, "empty real list");
    return out;
}

std::vector<CDNumber> parse_cd_list(const std::string& text, int forced_level, int min_level) {
    std::vector<CDNumber> out;
    std::string cur;
    auto flush = [&]() {
        if (strip_spaces(cur).empty()) fail(ErrorKind::Input, "empty entry in list '" + text + "'");
        out.push_back(parse_cd_literal(cur, forced_level, min_level));
        cur.clear();
    };
    // Without ',' or ';' the entries are whitespace separated and carry no inner spaces.
    const bool explicit_sep = text.find_first_of(",;") != std::string::npos;
    if (!explicit_sep) {
        std::istringstream is(text);
        std::string tok;
        while (is >> tok) out.push_back(parse_cd_literal(tok, forced_level, min_level));
        if (out.empty()) fail(ErrorKind::Input, "empty literal list");
        return out;
    }
    for (char c : text) {
        if (c == ';' || c == ',')
            flush();
        else
            cur.push_back(c);
    }
    flush();
    return out;
}

std::string format_cd_literal(const CDNumber& a) {
    std::ostringstream os;
    os.precision(17);
    bool any = false;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        if (a[j] == 0.0) continue;
        if (any && a[j] > 0) os << '+';
        os << a[j];
        if (j > 0) os << 'i' << j;
        any = true;
    }
    if (!any) os << 0;
    return os.str();
}

}  // namespace hct
