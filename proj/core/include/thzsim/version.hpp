#ifndef THZSIM_VERSION_HPP
#define THZSIM_VERSION_HPP

namespace thzsim {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
