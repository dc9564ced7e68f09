#pragma once

#include <stdexcept>
#include <string>

namespace decontext {

/// Base class for every error this library raises on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph ingestion
struct MalformedDocument : Error { using Error::Error; };
struct DanglingEdge : Error { using Error::Error; };
struct DuplicateNodeId : Error { using Error::Error; };
struct UnknownNode : Error { using Error::Error; };

// query rendering
struct SlotMismatch : Error { using Error::Error; };

// oracle / encoder transport
struct BackendUnavailable : Error { using Error::Error; };
struct ScoreOutOfRange : Error { using Error::Error; };

// ranker
struct DimensionMismatch : Error { using Error::Error; };
struct EmptyTrainingSet : Error { using Error::Error; };
struct NonFiniteLoss : Error { using Error::Error; };

// verdict / metrics
struct LengthMismatch : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct MissingClass : Error { using Error::Error; };
struct MissingAnnotation : Error { using Error::Error; };

// pipeline
struct ConfigMismatch : Error { using Error::Error; };

}  // namespace decontext
