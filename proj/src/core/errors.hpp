#pragma once

#include <stdexcept>
#include <string>

namespace ccs {

enum class ErrorCode {
    InvalidInput,       // malformed document / bad field
    EdgeNotFound,
    VertexNotFound,
    MinorTargetTooLarge,
    GraphNotConnected,
    NotPartialKTree,
    NotANonEdge,
    BadParameterSet,
    UnsupportedDimension,
    BadInterval,
    BadParameter,
    NotPolytopeRepresentable,
    EmptyConfigurationSpace,
    NotRealizable,
    ConfigOutsideSpace,
    BaseRealizationRequired,
    IncompleteRealization,
    NoWitness,
    OracleInapplicable,
    Degenerate,
    Unsupported,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::EdgeNotFound: return "EdgeNotFound";
        case ErrorCode::VertexNotFound: return "VertexNotFound";
        case ErrorCode::MinorTargetTooLarge: return "MinorTargetTooLarge";
        case ErrorCode::GraphNotConnected: return "GraphNotConnected";
        case ErrorCode::NotPartialKTree: return "NotPartialKTree";
        case ErrorCode::NotANonEdge: return "NotANonEdge";
        case ErrorCode::BadParameterSet: return "BadParameterSet";
        case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorCode::BadInterval: return "BadInterval";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::NotPolytopeRepresentable: return "NotPolytopeRepresentable";
        case ErrorCode::EmptyConfigurationSpace: return "EmptyConfigurationSpace";
        case ErrorCode::NotRealizable: return "NotRealizable";
        case ErrorCode::ConfigOutsideSpace: return "ConfigOutsideSpace";
        case ErrorCode::BaseRealizationRequired: return "BaseRealizationRequired";
        case ErrorCode::IncompleteRealization: return "IncompleteRealization";
        case ErrorCode::NoWitness: return "NoWitness";
        case ErrorCode::OracleInapplicable: return "OracleInapplicable";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace ccs
