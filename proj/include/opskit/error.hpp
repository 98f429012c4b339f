#pragma once

#include <stdexcept>
#include <string>

namespace opskit {

enum class Errc {
  // input validation
  BadVertexId,
  SelfLoop,
  DuplicateEdge,
  AsymmetricMatrix,
  FiniteDiagonal,
  InvalidArgument,
  // solver outcomes on well-formed input
  DisconnectedGraph,
  Unreachable,
  TooLarge,
  // statistics
  DegenerateMatrix,
  OutOfRangeRank,
  InvalidAlpha,
  InvalidProportion,
  EmptyMatrix,
  // file formats
  ParseError,
  RaggedRows,
  NonIntegerCell,
  ScoreOutOfScale,
};

constexpr const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadVertexId: return "BadVertexId";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::AsymmetricMatrix: return "AsymmetricMatrix";
    case Errc::FiniteDiagonal: return "FiniteDiagonal";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::Unreachable: return "Unreachable";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DegenerateMatrix: return "DegenerateMatrix";
    case Errc::OutOfRangeRank: return "OutOfRangeRank";
    case Errc::InvalidAlpha: return "InvalidAlpha";
    case Errc::InvalidProportion: return "InvalidProportion";
    case Errc::EmptyMatrix: return "EmptyMatrix";
    case Errc::ParseError: return "ParseError";
    case Errc::RaggedRows: return "RaggedRows";
    case Errc::NonIntegerCell: return "NonIntegerCell";
    case Errc::ScoreOutOfScale: return "ScoreOutOfScale";
  }
  return "UnknownError";
}

// Domain errors are failed computations on structurally valid input; the CLI
// exits 1 for them and 2 for everything else (usage and parse problems).
constexpr bool is_domain_error(Errc c) {
  switch (c) {
    case Errc::DisconnectedGraph:
    case Errc::Unreachable:
    case Errc::TooLarge:
    case Errc::DegenerateMatrix:
    case Errc::EmptyMatrix:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace opskit
