// Generated by tests/oracles/generate_oracles.py (mpmath, 40 digits). Do not edit.
#pragma once

namespace fundsol::oracle {

inline constexpr double lgamma_0_1 = 2.2527126517342059599;
inline constexpr double lgamma_0_25 = 1.2880225246980774574;
inline constexpr double lgamma_0_5 = 0.57236494292470008707;
inline constexpr double lgamma_0_75 = 0.20328095143129537148;
inline constexpr double lgamma_1_5 = -0.12078223763524522235;
inline constexpr double lgamma_3_3 = 0.98709857789473458788;
inline constexpr double lgamma_7_25 = 7.0521854507385394449;
inline constexpr double lgamma_10_5 = 13.940625219403763633;
inline constexpr double lgamma_25 = 54.78472939811231919;
inline constexpr double lgamma_100_7 = 362.35677520343054896;
inline constexpr double lgamma_1e_minus_3 = 6.9071788853838536825;

inline constexpr double gauss_at_one_quarter_quarter_one = 1.180340599016096226;
inline constexpr double gauss_series_0_3_0_4_2_at_one = 1.1054192265872007202;
inline constexpr double gauss_2f1_m0_7_1_3_2_1_m4 = 2.3634364666605184596;
inline constexpr double gauss_2f1_0_5_0_75_1_25_0_9 = 1.7994186104169422361;
inline constexpr double gauss_2f1_m25_5_0_5_1_5_0_7 = 0.20673852864869687031;

inline constexpr double fa3_q1_quarter_m0_1_m0_15_m0_2 = 0.78492010299392692254;
inline constexpr double fa3_q1_quarter_m0_3_m0_1_m0_05 = 0.78864254573322408791;
inline constexpr double fa3_q1_quarter_m0_5_m0_4_m0_3 = 0.58365687557728193289;
inline constexpr double fa3_q1_quarter_m3_m0_1_m0_1 = 0.44490276652600527678;
inline constexpr double fa3_q1_quarter_m1e3_m2e3_m5e2 = 0.001365460196702277542;
inline constexpr double fa3_q1_quarter_m4e8_m3e8_m5e8 = 8.2099895642769362518e-8;
inline constexpr double fa3_generic_m0_2_0_1_m0_3 = 0.60990613152940739245;

inline constexpr double singular_limit_quarter = 0.22847329052223181269;
inline constexpr double singular_limit_p3_p2_p4 = 0.25218548170994149813;
inline constexpr double singular_limit_p1_p25_p4 = 0.24212824116087562472;

inline constexpr double q1_ref_point = 0.05649270053344427982;
inline constexpr double q2_ref_point = 0.026343243165173389912;
inline constexpr double q3_ref_point = 0.021508370098654468251;
inline constexpr double q4_ref_point = 0.050532415238536571883;
inline constexpr double q5_ref_point = 0.0095755148337610240033;
inline constexpr double q6_ref_point = 0.023366067230858287662;
inline constexpr double q7_ref_point = 0.018781074282908135418;
inline constexpr double q8_ref_point = 0.008273991005285709707;
inline constexpr double grad_q1_x_ref_point = -0.024087502054691225494;
inline constexpr double grad_q1_y_ref_point = -0.049482078323188655879;
inline constexpr double grad_q1_z_ref_point = 0.0072863787154649976816;

}  // namespace fundsol::oracle
