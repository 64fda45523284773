#include "qcp/result.hpp"

namespace qcp {

std::string to_string(MeasurementKind kind) {
  switch (kind) {
    case MeasurementKind::OrthogonalDiscrimination: return "orthogonal";
    case MeasurementKind::UnambiguousDiscrimination: return "unambiguous";
    case MeasurementKind::BellComputationalBasis: return "bell_computational";
  }
  return "?";
}

std::string to_string(TerminalStatus status) {
  switch (status) {
    case TerminalStatus::Identified: return "identified";
    case TerminalStatus::NoChangeConfirmed: return "no_change_confirmed";
    case TerminalStatus::Unresolved: return "unresolved";
    case TerminalStatus::DistilledOnly: return "distilled_only";
    case TerminalStatus::NoChangeUnresolved: return "no_change_unresolved";
  }
  return "?";
}

std::string to_string(BranchTag tag) {
  switch (tag) {
    case BranchTag::A1: return "a1";
    case BranchTag::A1_1: return "a1.1";
    case BranchTag::A1_2: return "a1.2";
    case BranchTag::A2: return "a2";
  }
  return "?";
}

}  // namespace qcp
