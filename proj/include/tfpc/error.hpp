#ifndef TFPC_ERROR_HPP
#define TFPC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tfpc {

enum class Err {
  AsymmetricRotation,
  LoopOrMultiedge,
  BadOuterFace,
  ImproperPrecoloring,
  ImproperColoring,
  BadPrecoloring,
  LemmaViolation,
  HypothesisViolation,
  StatementViolation,
  BadComponent,
  VIn5Cycle,
  ResultHasTriangle,
  Uncolorable,
  StillHasTriangle,
  XNotMatching,
  XMeetsP,
  QNotSplitting,
  NoCogColoring,
  RequestNotAtV,
  PoorShapeViolation,
  NoConfiguration,
  PrecolorMismatch,
  BadHeader,
  Truncated,
  IdOutOfRange,
  SchemaViolation,
  BadParams,
};

const char* err_name(Err e);

/// Exception carrying one of the toolkit's error codes.
class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::AsymmetricRotation: return "ASYMMETRIC_ROTATION";
    case Err::LoopOrMultiedge: return "LOOP_OR_MULTIEDGE";
    case Err::BadOuterFace: return "BAD_OUTER_FACE";
    case Err::ImproperPrecoloring: return "IMPROPER_PRECOLORING";
    case Err::ImproperColoring: return "IMPROPER_COLORING";
    case Err::BadPrecoloring: return "BAD_PRECOLORING";
    case Err::LemmaViolation: return "LEMMA_VIOLATION";
    case Err::HypothesisViolation: return "HYPOTHESIS_VIOLATION";
    case Err::StatementViolation: return "STATEMENT_VIOLATION";
    case Err::BadComponent: return "BAD_COMPONENT";
    case Err::VIn5Cycle: return "V_IN_5CYCLE";
    case Err::ResultHasTriangle: return "RESULT_HAS_TRIANGLE";
    case Err::Uncolorable: return "UNCOLORABLE";
    case Err::StillHasTriangle: return "STILL_HAS_TRIANGLE";
    case Err::XNotMatching: return "X_NOT_MATCHING";
    case Err::XMeetsP: return "X_MEETS_P";
    case Err::QNotSplitting: return "Q_NOT_SPLITTING";
    case Err::NoCogColoring: return "NO_COG_COLORING";
    case Err::RequestNotAtV: return "REQUEST_NOT_AT_V";
    case Err::PoorShapeViolation: return "POOR_SHAPE_VIOLATION";
    case Err::NoConfiguration: return "NO_CONFIGURATION";
    case Err::PrecolorMismatch: return "PRECOLOR_MISMATCH";
    case Err::BadHeader: return "BAD_HEADER";
    case Err::Truncated: return "TRUNCATED";
    case Err::IdOutOfRange: return "ID_OUT_OF_RANGE";
    case Err::SchemaViolation: return "SCHEMA_VIOLATION";
    case Err::BadParams: return "BAD_PARAMS";
  }
  return "UNKNOWN";
}

}  // namespace tfpc

#endif
