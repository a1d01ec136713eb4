#pragma once

#include <string>

namespace cusg {

/// Three-valued answer for depth-bounded decision procedures. Step-function
/// and scalar tiers always answer True/False; only formal-sup and limit tiers
/// may answer UnknownAtDepth.
struct Ternary {
  enum State { False = 0, True = 1, Unknown = 2 };

  State state = False;
  int depth = 0;  // meaningful only when state == Unknown

  static Ternary yes() { return {True, 0}; }
  static Ternary no() { return {False, 0}; }
  static Ternary unknown_at(int d) { return {Unknown, d}; }
  static Ternary of(bool b) { return b ? yes() : no(); }

  bool is_true() const { return state == True; }
  bool is_false() const { return state == False; }
  bool is_unknown() const { return state == Unknown; }

  /// Logical AND where Unknown is absorbing unless a False is present.
  friend Ternary operator&&(Ternary a, Ternary b) {
    if (a.is_false() || b.is_false()) return no();
    if (a.is_unknown()) return a;
    if (b.is_unknown()) return b;
    return yes();
  }

  friend bool operator==(const Ternary& a, const Ternary& b) { return a.state == b.state; }

  std::string str() const {
    switch (state) {
      case True: return "true";
      case False: return "false";
      default: return "unknown(depth=" + std::to_string(depth) + ")";
    }
  }
};

}  // namespace cusg
