#pragma once

#include <span>
#include <string>
#include <vector>

namespace ontoscope {

// Mixed-radix tuple coding. Site 0 is the most significant digit so that
// enumeration order matches the row order of the tables in the docs
// ((psi,psi), (psi,phi), (phi,psi), (phi,phi), ...).
inline long tuple_count(std::span<const int> radices) {
    long n = 1;
    for (int r : radices) n *= r;
    return n;
}

inline long encode_tuple(std::span<const int> digits, std::span<const int> radices) {
    long code = 0;
    for (std::size_t i = 0; i < radices.size(); ++i) {
        code = code * radices[i] + digits[i];
    }
    return code;
}

inline void decode_tuple(long code, std::span<const int> radices, std::span<int> digits) {
    for (std::size_t i = radices.size(); i-- > 0;) {
        digits[i] = static_cast<int>(code % radices[i]);
        code /= radices[i];
    }
}

inline std::vector<int> decode_tuple(long code, std::span<const int> radices) {
    std::vector<int> digits(radices.size());
    decode_tuple(code, radices, digits);
    return digits;
}

// "a,b,c" keys used throughout the JSON schemas
inline std::string join_key(std::span<const std::string> parts) {
    std::string key;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) key += ',';
        key += parts[i];
    }
    return key;
}

inline std::vector<std::string> split_key(const std::string& key) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = key.find(',', start);
        if (pos == std::string::npos) {
            parts.push_back(key.substr(start));
            break;
        }
        parts.push_back(key.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

}  // namespace ontoscope
