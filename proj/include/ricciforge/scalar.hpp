#pragma once

namespace ricciforge {

// Scalar-extraction hook shared by plain doubles and jet types; templated
// numeric code branches on value(x) to stay scalar-generic.
inline double value(double x) { return x; }

}  // namespace ricciforge
