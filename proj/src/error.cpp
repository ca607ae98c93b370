#include "dcs/error.hpp"

namespace dcs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::EdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::FrameIndexOutOfRange: return "FrameIndexOutOfRange";
    case ErrorCode::EmptySolution: return "EmptySolution";
    case ErrorCode::KOrderOutOfRange: return "KOrderOutOfRange";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InfeasibleFrame: return "InfeasibleFrame";
    case ErrorCode::Uncoverable: return "Uncoverable";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NoSuperedges: return "NoSuperedges";
    case ErrorCode::CompleteGraph: return "CompleteGraph";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::EdgeNotInUnion: return "EdgeNotInUnion";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace dcs
