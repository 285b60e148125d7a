#ifndef MEDRX_VERSION_HPP
#define MEDRX_VERSION_HPP

namespace medrx {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace medrx

#endif  // MEDRX_VERSION_HPP
