#pragma once

#include <string>

#include "shallow/errors.hpp"

namespace shallow {

enum class Problem { mis, vc, ds };

inline std::string to_string(Problem p) {
  switch (p) {
    case Problem::mis: return "mis";
    case Problem::vc: return "vc";
    case Problem::ds: return "ds";
  }
  return "unknown";
}

// Throws Error for anything other than "mis", "vc", "ds".
inline Problem parse_problem(const std::string& name) {
  if (name == "mis") return Problem::mis;
  if (name == "vc") return Problem::vc;
  if (name == "ds") return Problem::ds;
  throw Error("unknown problem '" + name + "' (expected mis, vc or ds)");
}

}  // namespace shallow
