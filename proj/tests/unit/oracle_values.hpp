// SPDX-License-Identifier: Apache-2.0
// Generated by tests/oracles/generate.py (mpmath, scipy). Do not edit by hand.
#pragma once

namespace oracle {

inline constexpr double log_gamma_3_4i_re = -1.7566267846037841;  // log Gamma(3+4i)
inline constexpr double log_gamma_3_4i_im = 4.7426644380346579;
inline constexpr double log_gamma_half = 0.57236494292470009;
inline constexpr double log_gamma_m2_5 = -0.056243716497674051;  // log|Gamma(-2.5)|

inline constexpr double g30_13_0 = 0.049679523096892282;  // G^(3,0)_(1,3)[0.1 | 2.21 ; 1.21, 2.296, 2]
inline constexpr double g30_13_1 = 0.26969861370932781;  // G^(3,0)_(1,3)[1 | 2.21 ; 1.21, 2.296, 2]
inline constexpr double g30_13_2 = 0.20368261915603722;  // G^(3,0)_(1,3)[5 | 2.21 ; 1.21, 2.296, 2]
inline constexpr double g31_24_0 = 0.046428586101965571;  // G^(3,1)_(2,4)[0.1 | 1, 2.21 ; 1.21, 2.296, 2, 0]
inline constexpr double g31_24_1 = 0.3840453515656129;  // G^(3,1)_(2,4)[1 | 1, 2.21 ; 1.21, 2.296, 2, 0]
inline constexpr double g31_24_2 = 0.82944042198424882;  // G^(3,1)_(2,4)[5 | 1, 2.21 ; 1.21, 2.296, 2, 0]
inline constexpr double h30_13_scaled = 0.12342837390570997;  // H^(3,0)_(1,3)[0.7 | (2.21,2) ; (1.21,2), (2.296,2), (1,2)]
inline constexpr double h34_55_mixed = 0.51464195828050388;  // H^(3,4)_(5,5)[0.4 | (1,1),(-0.21,2),(-1.296,2),(-1,2),(2.21,1) ; (1.21,1),(2.296,1),(1,1),(-1.21,2),(0,1)]

inline constexpr double malaga_g = 0.1;  // rho=0.9, b0=0.5, Omega=1, phi=0
inline constexpr double malaga_omega_prime = 3.7973665961010276;
inline constexpr double malaga_B = 2.4512762396094107;  // alpha=2.296, beta=2, xi=1.1

inline constexpr double malaga_strong_xi1_1_r1_pdf_0 = 1.3365450808327782;  // mu*pdf(mu*0.05)
inline constexpr double malaga_strong_xi1_1_r1_cdf_0 = 0.066821916080368781;  // cdf(mu*0.05)
inline constexpr double malaga_strong_xi1_1_r1_pdf_1 = 0.59092021656148855;  // mu*pdf(mu*0.5)
inline constexpr double malaga_strong_xi1_1_r1_cdf_1 = 0.47035248732251121;  // cdf(mu*0.5)
inline constexpr double malaga_strong_xi1_1_r1_pdf_2 = 0.10462137206982307;  // mu*pdf(mu*2)
inline constexpr double malaga_strong_xi1_1_r1_cdf_2 = 0.86273762712251821;  // cdf(mu*2)
inline constexpr double malaga_strong_xi1_1_r2_pdf_0 = 2.1192592895847783;  // mu*pdf(mu*0.05)
inline constexpr double malaga_strong_xi1_1_r2_cdf_0 = 0.26330480587105821;  // cdf(mu*0.05)
inline constexpr double malaga_strong_xi1_1_r2_pdf_1 = 0.3090039575963871;  // mu*pdf(mu*0.5)
inline constexpr double malaga_strong_xi1_1_r2_cdf_1 = 0.57569304698527831;  // cdf(mu*0.5)
inline constexpr double malaga_strong_xi1_1_r2_pdf_2 = 0.066102007418890705;  // mu*pdf(mu*2)
inline constexpr double malaga_strong_xi1_1_r2_cdf_2 = 0.78021120405941279;  // cdf(mu*2)
inline constexpr double malaga_moderate_xi6_7_r2_pdf_0 = 1.5573690020752392;  // mu*pdf(mu*0.05)
inline constexpr double malaga_moderate_xi6_7_r2_cdf_0 = 0.091041010513085797;  // cdf(mu*0.05)
inline constexpr double malaga_moderate_xi6_7_r2_pdf_1 = 0.47040229464158347;  // mu*pdf(mu*0.5)
inline constexpr double malaga_moderate_xi6_7_r2_cdf_1 = 0.45717435618422227;  // cdf(mu*0.5)
inline constexpr double malaga_moderate_xi6_7_r2_pdf_2 = 0.10006857115642977;  // mu*pdf(mu*2)
inline constexpr double malaga_moderate_xi6_7_r2_cdf_2 = 0.77932671620481487;  // cdf(mu*2)
inline constexpr double gg_moderate_xi1_1_r1_pdf_0 = 0.76901668831128201;  // mu*pdf(mu*0.05)
inline constexpr double gg_moderate_xi1_1_r1_cdf_0 = 0.032314124980969811;  // cdf(mu*0.05)
inline constexpr double gg_moderate_xi1_1_r1_pdf_1 = 0.66784188024824486;  // mu*pdf(mu*0.5)
inline constexpr double gg_moderate_xi1_1_r1_cdf_1 = 0.38966627789932452;  // cdf(mu*0.5)
inline constexpr double gg_moderate_xi1_1_r1_pdf_2 = 0.12420636736809408;  // mu*pdf(mu*2)
inline constexpr double gg_moderate_xi1_1_r1_cdf_2 = 0.87253344505279094;  // cdf(mu*2)

inline constexpr double nakagami_cdf_m2 = 0.26424111765711536;  // m=2, avg=10, gamma=5

inline constexpr double sop_single_baseline = 0.013319167923629298;  // single eavesdropper, gamma_RD = 30 dB
inline constexpr double sop_dual_baseline = 0.036230240565554794;  // dual eavesdroppers, heterodyne, gamma_RD = 20 dB

}  // namespace oracle
