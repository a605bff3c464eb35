#pragma once

namespace hypertoric {

// Convention constants pinned by the self-tests in tests/test_envelopes.cpp
// and the duality pairing; exactly one choice of each passes, and the
// passing one is frozen here.

// Localization denominator: wedge of the tangent class as written, or of its
// dual (weights inverted). The delta-pairing of dual envelope families is
// the oracle.
enum class DenomConvention { wedge_tangent, wedge_tangent_dual };
inline constexpr DenomConvention kLocalizationDenominator = DenomConvention::wedge_tangent;

// Attracting-cell structure sheaf restriction entering the diagonal
// normalization: prod over repelling weights of (1 - w) together with the
// polarization/repelling determinant ratio. Pinned by the hbar -> 1 identity
// against wedge(T^{1/2}|_p).
enum class KoszulConvention { one_minus_w, one_minus_w_inverse };
inline constexpr KoszulConvention kDiagonalKoszul = KoszulConvention::one_minus_w;

// Direction of the determinant ratio under the square root in the diagonal
// normalization; pinned by the same identity.
enum class DetRatio { polarization_over_repelling, repelling_over_polarization };
inline constexpr DetRatio kDiagonalDetRatio = DetRatio::polarization_over_repelling;

// Sign of the slope substitution z^mu -> q^{s(mu)} on the dual equivariant
// axes; pinned by the support axiom of the constructed envelopes.
inline constexpr int kSlopeSubstitutionSign = +1;

}  // namespace hypertoric
