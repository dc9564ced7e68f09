#pragma once

#include <string>
#include <string_view>

#include "decontext/errors.hpp"

namespace decontext {

/// Opaque handle for an image: a URI or content hash. This library never
/// opens the bytes behind it.
struct ImageRef {
  std::string value;

  bool empty() const { return value.empty(); }
  friend bool operator==(const ImageRef&, const ImageRef&) = default;
};

enum class Answer { Yes, No };

enum class PairLabel { Real, Fake };

inline const char* to_string(Answer a) {
  return a == Answer::Yes ? "Yes" : "No";
}

inline const char* to_string(PairLabel l) {
  return l == PairLabel::Real ? "Real" : "Fake";
}

inline Answer answer_from_string(std::string_view s) {
  if (s == "Yes") return Answer::Yes;
  if (s == "No") return Answer::No;
  throw MalformedDocument("unknown answer value: " + std::string(s));
}

inline PairLabel label_from_string(std::string_view s) {
  if (s == "Real") return PairLabel::Real;
  if (s == "Fake") return PairLabel::Fake;
  throw MalformedDocument("unknown label value: " + std::string(s));
}

}  // namespace decontext
