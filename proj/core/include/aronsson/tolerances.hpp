#pragma once

namespace aronsson {

struct Tolerances {
    double exact_zero = 1e-10; ///< residuals that vanish identically
    double fd_rel = 1e-6;      ///< relative agreement with finite differences
    double flatness = 1e-9;    ///< |H - c| and |(b-a).H_p| along the segment
    double jet_margin = 1e-8;  ///< touching slack and sign margin for semijets

    /// Throws InvalidArgument unless every entry is finite and strictly positive.
    void validate() const;
};

} // namespace aronsson
