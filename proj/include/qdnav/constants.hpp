#ifndef QDNAV_CONSTANTS_HPP
#define QDNAV_CONSTANTS_HPP

namespace qdnav {

// Robot kinematics and world scale shared by the maze tooling and the
// simulator. The world is 200x200 length-units by default; constants are
// sized so the easiest mazes are solvable within 300 ticks.
inline constexpr double kWorldSize = 200.0;
inline constexpr double kRobotRadius = 8.0;
inline constexpr double kRobotDiameter = 2.0 * kRobotRadius;
inline constexpr double kMinCorridor = 2.0 * kRobotDiameter;  // gaps and corridors
inline constexpr double kGoalRadius = 5.0;
inline constexpr double kMaxSpeed = 3.0;            // length-units / tick
inline constexpr double kMaxTurnRate = 0.25;        // radians / tick
inline constexpr double kSpeedGain = 2.0 * kMaxSpeed;
inline constexpr double kTurnGain = 2.0 * kMaxTurnRate;
inline constexpr double kSensorRange = 100.0;
inline constexpr double kGridCell = 5.0;            // A*/BFS discretization
inline constexpr double kStartMargin = 15.0;        // start/goal corner offset

}  // namespace qdnav

#endif  // QDNAV_CONSTANTS_HPP
