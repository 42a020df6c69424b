#pragma once

#include <cstdio>
#include <string>

namespace ybcorr::detail {

/// printf-style formatting into a std::string (messages and report lines).
template <typename... Args>
std::string strf(const char* fmt, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), fmt, args...);
    return buf;
}

}  // namespace ybcorr::detail
