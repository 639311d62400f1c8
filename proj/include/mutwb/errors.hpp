#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mutwb {

enum class Errc {
    NotSquare,
    NotUnimodular,
    DimensionMismatch,
    IndexOutOfRange,
    NotSkewSymmetric,
    InvalidQuiver,
    LabelMismatch,
    NegativeMultiplicity,
    WrongCount,
    Crossing,
    BoundaryEdge,
    NotADiagonal,
    PolygonMismatch,
    PolygonTooSmall,
    SearchLimitExceeded,
    Parse,
};

constexpr std::string_view to_string(Errc e) noexcept {
    switch (e) {
        case Errc::NotSquare: return "NotSquare";
        case Errc::NotUnimodular: return "NotUnimodular";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::NotSkewSymmetric: return "NotSkewSymmetric";
        case Errc::InvalidQuiver: return "InvalidQuiver";
        case Errc::LabelMismatch: return "LabelMismatch";
        case Errc::NegativeMultiplicity: return "NegativeMultiplicity";
        case Errc::WrongCount: return "WrongCount";
        case Errc::Crossing: return "Crossing";
        case Errc::BoundaryEdge: return "BoundaryEdge";
        case Errc::NotADiagonal: return "NotADiagonal";
        case Errc::PolygonMismatch: return "PolygonMismatch";
        case Errc::PolygonTooSmall: return "PolygonTooSmall";
        case Errc::SearchLimitExceeded: return "SearchLimitExceeded";
        case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// that front ends (CLI exit status, HTTP status) can map it without parsing
/// the message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace mutwb
