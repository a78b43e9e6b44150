#pragma once
// GENERATED by tests/oracles/generate_golden.py (mpmath Taylor ODE integration,
// 30 significant digits). Do not edit by hand; values are frozen test oracles.

namespace heislor::golden {

struct GoldenExp {
  double eps, a, b, t, x, y, z;
};
struct GoldenJac {
  double eps, theta, phi, t, det;
};
struct GoldenLimit {
  double psi, c, t, x, y, z;
};

// Family one: (eps, theta, phi, t) -> endpoint.
inline constexpr GoldenExp kExp1[] = {
    {1, 1, 1.5707963267948966192, 0.85091812823932154513, 1.5430806348152437785, 0.71308403638379169838, 1.1510288304584062678},
    {0.5, 0.7, 1.1, 1.3, 3.1171142715126456585, 2.5594839150225375817, 0.86012810944708525043},
    {2, 1.5, 4.0, 0.8, 2.3864236266090831077, -1.8199682209318204758, -2.7045518483813903575},
    {1, 0.3, 0.2, 2.5, 2.6798536693252046794, 0.946980913691374916, 0.23040044591884078662},
    {1, 1, 0, 1, 1.5430806348152437785, 1.1752011936438014569, 0.0},
    {0.7, -0.5, 2.0, 1.0, 1.1394932419410137426, -0.16264643125594036565, -0.40235421836521354317},
    {1, 2.0, 0.5, 1.5, 25.267107152536535973, 24.958476673516215398, 5.3644221708940198875},
};

// Family two: (eps, theta, phi, t) -> endpoint.
inline constexpr GoldenExp kExp2[] = {
    {1, 1, 0, 1, 0.76130166175579015498, -0.7404887492113685999, 1.3854689024958756975},
    {0.5, 0.4, 1.0, 2.0, 0.12534303545468161556, -0.28945644354764449614, 0.98633677915340012884},
    {1.5, 2.0, 3.0, 0.7, -1.1655883710730507019, 1.8953418972412207632, 3.1423964646141995135},
    {1, 0, 0, 6.2831853071795864769, 0.0, 0.0, 6.2831853071795864769},
    {0.8, 1.2, 5.0, 3.0, 0.011441540935597374862, -0.33417810511224866855, 2.9434706739106076056},
};

// Family-one Jacobian det d(x,y,z)/d(t,theta,phi).
inline constexpr GoldenJac kJac1[] = {
    {1, 1, 1.5707963267948966192, 0.85091812823932154513, 1.0548590280728857402},
    {0.5, 0.7, 1.1, 1.3, 1.4679149404307244765},
    {1, 0.3, 0.9, 2.5, 3.0330876978037929481},
};

// Limit system: (psi, c, t) -> endpoint.
inline constexpr GoldenLimit kExp0[] = {
    {0, 1, 1, 1.1752011936438014569, 0.54308063481524377848, 0.087600596821900728441},
    {0.5, -0.7, 2.0, 2.2108743302884608693, -0.43637202891770504403, -0.51459336882809593562},
    {-1.0, 0.3, 1.5, 1.9901652996678239633, -1.2932640689710093905, 0.085233427412209769104},
    {0.2, 0.001, 2.0, 2.0405375434667374146, 0.40471240772152782179, 0.00066666680000001271229},
};

// Boundary height (eps, x, y) -> (phi_eps, tau), evaluated at 30 digits.
struct GoldenHeight {
  double eps, x, y, phi, tau;
};
inline constexpr GoldenHeight kHeight[] = {
    {1.0, 1.0421906109874947232, 0.0, 1.0876005968219007284, 1.0},
    {0.2999999999999999889, 2.0, 1.0, 0.95410651132356374113, 3.5640248445374795332},
    {0.0010000000000000000208, 1.0, 0.0, 0.25000740775577898164, 13.815512557961274069},
    {2.0, 5.0, -4.5, 4.5658617849903429236, 1.0419477892661226578},
};

}  // namespace heislor::golden
