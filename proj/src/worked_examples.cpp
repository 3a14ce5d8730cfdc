#include "efpoly/worked_examples.hpp"

namespace efpoly {

namespace {

VarSpace xy() { return VarSpace::of_class("x", 2).concat(VarSpace::of_class("y", 2)); }

}  // namespace

HPoly indep_p() {
  return HPoly(VarSpace::of_class("x", 2), {{{-1, 1}, Sense::LessEq, -6},
                                            {{-1, 0}, Sense::LessEq, 0},
                                            {{1, 0}, Sense::LessEq, 6},
                                            {{0, -1}, Sense::LessEq, 0},
                                            {{0, 1}, Sense::LessEq, 5}});
}

HPoly indep_q() {
  return HPoly(VarSpace::of_class("y", 2), {{{1, 1}, Sense::Equal, 6},
                                            {{-1, 0}, Sense::LessEq, Rational(-3, 2)},
                                            {{0, -1}, Sense::LessEq, 0}});
}

HPoly indep_p_lifted() { return indep_p().embed(xy()); }

HPoly indep_q_lifted() {
  return HPoly(xy(), {{{0, 0, 1, 1}, Sense::LessEq, 6},
                      {{0, 0, -1, -1}, Sense::LessEq, -6},
                      {{0, 0, -1, 0}, Sense::LessEq, Rational(-3, 2)},
                      {{0, 0, 0, -1}, Sense::LessEq, 0}});
}

AffineMapSpec indep_map() {
  return AffineMapSpec(VarSpace::of_class("y", 2), VarSpace::of_class("x", 2), RatMatrix::from_rows({{1, 1}, {0, 0}}));
}

HPoly coupled_p1() {
  return HPoly(VarSpace::of_class("x", 2),
               {{{2, 1}, Sense::LessEq, 6}, {{-1, 0}, Sense::LessEq, 0}, {{0, -1}, Sense::LessEq, 0}});
}

HPoly coupled_p2() {
  return HPoly(VarSpace::of_class("w", 3), {{{18, -1, 0}, Sense::LessEq, 23},
                                            {{59, 0, 1}, Sense::LessEq, 84},
                                            {{-1, 0, 0}, Sense::LessEq, 0},
                                            {{0, -1, 0}, Sense::LessEq, 0},
                                            {{0, 0, -1}, Sense::LessEq, 0}});
}

AugmentationSpec coupled_spec() {
  AugmentationSpec s;
  s.b1 = RatMatrix::from_rows({{-1, 2}, {3, -4}});
  s.b2 = RatMatrix::from_rows({{5, -6, 7}, {-10, 9, -8}});
  s.c1 = RatMatrix::from_rows({{7}});
  s.c2 = RatMatrix::from_rows({{2, 0}, {0, Rational(1, 2)}});
  return s;
}

}  // namespace efpoly
