#include "crr/types.hpp"

namespace crr {

std::string_view type_name(AffineType t) {
    switch (t) {
        case AffineType::G2_1: return "G2_1";
        case AffineType::D4_3: return "D4_3";
        case AffineType::F4_1: return "F4_1";
        case AffineType::E6_2: return "E6_2";
        case AffineType::E6_1: return "E6_1";
        case AffineType::E7_1: return "E7_1";
        case AffineType::E8_1: return "E8_1";
    }
    throw std::logic_error("unknown AffineType");
}

std::optional<AffineType> parse_type(std::string_view name) {
    for (AffineType t : kAllTypes)
        if (type_name(t) == name) return t;
    return std::nullopt;
}

}  // namespace crr
