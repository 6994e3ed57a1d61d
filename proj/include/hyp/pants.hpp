#pragma once

#include <array>
#include <string>

#include "hyp/geodesy.hpp"

namespace hyp {

struct PantsPair {
  GroupElement g1, g2;
  double l1 = 0, l2 = 0, l3 = 0, M = 0;
  double rhs = 0;            // sinh sinh cosh M - cosh cosh
  cplx foot1, foot2;         // common perpendicular feet on axis(g1), axis(g2)
  bool product_word = true;  // third boundary is g1 g2 (else g1 g2^-1)
  GroupElement third;        // the selected boundary word
  double word_residual = 0;  // |cosh(mu/2) - rhs| / max(1, rhs)
  double other_residual = 0; // same for the rejected word
  // second boundary oriented coherently with g1 (g1 * second * third^-1 ... closes up)
  GroupElement second() const { return product_word ? g2 : g2.inverse(); }
};

double pants_rhs(double l1, double l2, double M);
// distance between disjoint real axes; throws IntersectingAxes otherwise
double axis_distance(const GroupElement& g1, const GroupElement& g2);
PantsPair pants_from_pair(const GroupElement& g1, const GroupElement& g2);

enum class TriangleCase { Triangle, Sum, Beyond };
TriangleCase triangle_case(double r1, double r2, double r3);
double m_schedule(double r1, double r2, double r3, double L, double x, double l1);
double mtilde(double r1, double r2, double r3, double L);

// feet of the shortest arc between the two axes
std::array<cplx, 2> twist_feet(const PantsPair& pp);
// signed arclength from the foot of pp1 to the foot of pp2 along axis(pp1.g1), mod length/2
double twist_parameter(const PantsPair& pp1, const PantsPair& pp2);

struct BoxX {
  std::array<double, 3> lo{}, hi{};
};
BoxX make_box(std::array<double, 3> lo, std::array<double, 3> hi);
BoxX b_epsilon(double eps);
// (-1,1)^2 x (max(-eps-2x,-eps), min(eps-2x,eps))
BoxX bx_box(double x, double eps);
double bx_volume(double x, double eps);

std::array<double, 3> F_coords(const GroupElement& g);
bool b_membership(const GroupElement& g, const BoxX& X);
double b_volume(const BoxX& X);

double vol_t1(int genus);
int isom_order(double r1, double r2, double r3);

enum class Formula { Geodesics, PantsGivenGamma, PantsAll, Angle, TwistWindow };
const char* formula_name(Formula f);
Formula formula_from_name(const std::string& s);

struct CountParams {
  int genus = 2;
  double L = 0, eps = 0.2;
  double l1 = 0, l2 = 0;             // window
  double r1 = 1, r2 = 1, r3 = 1;
  double gamma_length = 0, gamma_primitive_length = 0;
  double sigma_length = 0, a1 = 0, a2 = 0;
  double interval_length = 0, pants_given_gamma = 0;
};
double predicted_counts(Formula f, const CountParams& p);

}  // namespace hyp
