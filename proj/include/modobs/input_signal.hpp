// Copyright 2026 The modobs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>

namespace modobs {

/// Deterministic input generators: constant level, step, sinusoid.
/// clipped() enforces the plant input bound, so simulated inputs always
/// satisfy |u| <= M_u.
struct InputSignal {
  enum class Kind { constant, step, sine };

  Kind kind = Kind::constant;
  double level = 0.0;         // constant level / step level after the edge
  double level_before = 0.0;  // step level before the edge
  double step_time = 0.0;
  double offset = 0.0;        // sine: offset + amplitude sin(omega t + phase)
  double amplitude = 0.0;
  double omega = 0.0;
  double phase = 0.0;

  static InputSignal constant(double level) {
    InputSignal s;
    s.kind = Kind::constant;
    s.level = level;
    return s;
  }

  static InputSignal step(double before, double after, double at) {
    InputSignal s;
    s.kind = Kind::step;
    s.level_before = before;
    s.level = after;
    s.step_time = at;
    return s;
  }

  static InputSignal sine(double offset, double amplitude, double omega,
                          double phase = 0.0) {
    InputSignal s;
    s.kind = Kind::sine;
    s.offset = offset;
    s.amplitude = amplitude;
    s.omega = omega;
    s.phase = phase;
    return s;
  }

  double value(double t) const {
    switch (kind) {
      case Kind::constant:
        return level;
      case Kind::step:
        return t < step_time ? level_before : level;
      case Kind::sine:
        return offset + amplitude * std::sin(omega * t + phase);
    }
    return 0.0;
  }

  double clipped(double t, double bound) const {
    return std::clamp(value(t), -bound, bound);
  }
};

}  // namespace modobs
