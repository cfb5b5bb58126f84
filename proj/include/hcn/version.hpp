#ifndef HCN_VERSION_HPP
#define HCN_VERSION_HPP

namespace hcn {

inline constexpr const char* kVersion = "1.0.0";

} // namespace hcn

#endif
