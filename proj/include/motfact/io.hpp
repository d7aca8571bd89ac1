#pragma once

// JSON serialization of linkages, motions, poses and factorizations, and CSV
// export of trajectories. Numbers round-trip losslessly (shortest
// representation that restores the exact double).

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "motfact/bennett.hpp"
#include "motfact/factor.hpp"
#include "motfact/linkage.hpp"

namespace motfact {

std::string linkage_to_json(const Linkage& l);
// Validates joint generators against their declared kinds and the linkage
// invariants; throws Error(ParseError) with the offending field path.
Linkage linkage_from_json(const std::string& text);

std::string motion_to_json(const MotionPolynomial& c);
MotionPolynomial motion_from_json(const std::string& text);

std::array<Pose, 3> poses_from_json(const std::string& text);
std::string poses_to_json(const std::array<Pose, 3>& poses);

std::string factorization_to_json(const Factorization& f, double residual);

void write_trajectory_csv(std::ostream& os, const std::vector<double>& ts,
                          const std::vector<Vec3>& points);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace motfact
