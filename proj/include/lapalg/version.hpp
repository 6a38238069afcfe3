#ifndef LAPALG_VERSION_HPP
#define LAPALG_VERSION_HPP

namespace lapalg {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
