#include "pdmwell/model.hpp"

#include <cmath>

namespace pdmwell {

WellConfig validate(WellConfig config) {
    auto check_finite = [](double v, const char* key) {
        if (!std::isfinite(v)) throw NonFinite(key);
    };
    check_finite(config.m1, "m1");
    check_finite(config.m2, "m2");
    check_finite(config.V1, "V1");
    check_finite(config.V2, "V2");
    check_finite(config.a, "a");

    if (config.m1 <= 0.0) throw NonPositiveParameter("m1");
    if (config.m2 <= 0.0) throw NonPositiveParameter("m2");
    if (config.V1 <= 0.0) throw NonPositiveParameter("V1");
    if (config.a <= 0.0) throw NonPositiveParameter("a");
    if (config.V2 < config.V1) throw BarrierOrder();

    config.deltaV = config.V2 - config.V1;
    return config;
}

} // namespace pdmwell
