#ifndef SEQENT_VERSION_HPP
#define SEQENT_VERSION_HPP

namespace seqent {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace seqent

#endif  // SEQENT_VERSION_HPP
