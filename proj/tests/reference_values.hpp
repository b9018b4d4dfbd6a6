// Generated by tests/tools/gen_reference_values.py -- do not edit by hand.
// Values computed with mpmath at 40 significant digits.
#pragma once

#include <complex>

namespace koshlab::ref {

inline const std::complex<double> euler_gamma{0.5772156649015328606065, 0.0};
inline const std::complex<double> zeta_half{-1.460354508809586812889, 0.0};
inline const std::complex<double> zeta_3{1.202056903159594285400, 0.0};
inline const std::complex<double> zeta_32{2.612375348685488343349, 0.0};
inline const std::complex<double> zeta_quarter{-0.8132784052618916565214, 0.0};
inline const std::complex<double> zeta_deriv_2{-0.9375482543158437537026, 0.0};
inline const std::complex<double> zeta_c_2_3{0.7980219851462757206223, -0.1137443080529385002159};
inline const std::complex<double> gamma_half_plus_i{0.3006946172606558162174, -0.4249678794331238126098};
inline const std::complex<double> gamma_c_m3_2{-0.005632893121520288449617, -0.0004835346327026288181109};
inline const std::complex<double> digamma_c{0.8614311824530846459050, -0.5520531988482499536812};
inline const std::complex<double> j0_1{0.7651976865579665514497, 0.0};
inline const std::complex<double> y0_1{0.08825696421567695798293, 0.0};
inline const std::complex<double> i0_1{1.266065877752008335598, 0.0};
inline const std::complex<double> k0_1{0.4210244382407083333356, 0.0};
inline const std::complex<double> k13_2{0.1165449612961652487589, 0.0};
inline const std::complex<double> j_complex_a{0.7301156139169463903982, -0.09121355566174291739474};
inline const std::complex<double> j_quarter_19{0.09381881107808458562216, 0.0};
inline const std::complex<double> j_quarter_21{0.09871851419766366784302, 0.0};
inline const std::complex<double> y_third_2{0.3431999662603443422615, 0.0};
inline const std::complex<double> y_2_05{-5.441370837174265719606, 0.0};
inline const std::complex<double> y_third_21{0.1294257507747837466982, 0.0};
inline const std::complex<double> i_complex_a{-8.795144892077475376702, -7.346597029694812409868};
inline const std::complex<double> i_complex_large{-1239308.177429109247664, 1460233.941418963007002};
inline const std::complex<double> k_complex_a{-0.0006315112929726401194860, 0.007244960986366476415573};
inline const std::complex<double> k_complex_large{8.890037003944070789738e-10, -1.084123298798086698023e-8};
inline const std::complex<double> k_half_12{0.000002222979883570349352040, 0.0};
inline const std::complex<double> k_0_12{0.000002200825397311491400516, 0.0};
inline const std::complex<double> k_3_05{62.05790952993025638624, 0.0};
inline const std::complex<double> y_near_int{0.1459180798062407270428, 0.0};
inline const std::complex<double> k_near_int{0.5836559072666757163894, 0.0};
inline const std::complex<double> m0_1{0.1797755178183115907798, 0.0};
inline const std::complex<double> m_03_small{37.04899033503673292967, 0.0};
inline const std::complex<double> f_quarter_1{0.1450997064484649535384, 0.0};
inline const std::complex<double> f_quarter_40{-0.1259433607011924026997, 0.0};
inline const std::complex<double> hyp2f1_a{1.072118742930672120433, 0.06086415390172310624109};
inline const std::complex<double> hyp2f1_pfaff_pt{0.6309091228187346762226, 0.0};
inline const std::complex<double> int_j0_0_pi{1.347526314673990171231, 0.0};
inline const std::complex<double> digamma_half{-1.963510026021423479441, 0.0};
inline const std::complex<double> sommerfeld_rhs{0.04779726141415832825595, 0.0};
inline const std::complex<double> watson_jk_rhs{0.03515425154034443280588, 0.0};
inline const std::complex<double> fock_bursian_rhs{0.1342594321821487349079, 0.0};
inline const std::complex<double> koshliakov_fock_rhs{0.1682692444218386530772, 0.0};
inline const std::complex<double> sonine_rhs{0.3436806157562349462676, 0.0};
inline const std::complex<double> thm_fock_analogue_rhs{0.2627566132788283933502, 0.0};
inline const std::complex<double> sonine_analogue_rhs{0.6050114194783854629045, 0.0};
inline const std::complex<double> jexp_rhs{0.2030668551265883181656, 0.0};
inline const std::complex<double> ik_moment_rhs{0.7491271429590275388186, 0.0};
inline const std::complex<double> koshliakov_mkernel_rhs{0.6171643677902144863426, 0.0};
inline const std::complex<double> kpair_rhs{0.4072032209743561549799, 0.0};
inline const std::complex<double> ilaplace_rhs{0.1795240261806447050730, 0.0};

}  // namespace koshlab::ref
