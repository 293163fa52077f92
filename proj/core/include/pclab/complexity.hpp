#pragma once

#include "pclab/problems.hpp"
#include "pclab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pclab {

// One row of the exponent-recurrence table.
struct RecurrenceRow {
    int k;
    Rational x;
    Rational y;
    Rational sum;  // x + y
};

// x_{k+2} = (1+x_k)/(2-y_k), y_{k+2} = (1-y_k)/(2(2-y_k)),
// seeded with x_2 = 1/2, x_3 = 2/3, y_2 = y_3 = 1/2. Exact.
std::pair<Rational, Rational> solve_xy(int k);
std::vector<RecurrenceRow> xy_table(int k_max);

// Exponent of the length-k directed-path detection walk: x_k + y_k for
// k >= 2, and 1 for the single-arc search at k = 1.
Rational dirpath_exponent(int k);

// Closed form of the walk-exponent recurrence:
//   alpha_{k,r} = max{ x_{k-2} + y_{k-2}, x_k + y_k * a_r }   (k >= 4)
//   alpha_{3,r} = max{ 1, x_3 + y_3 * a_r }
// a_r in [0,1] is the exponent of the first/last layer size.
Rational alpha(int k, const Rational& a_r);

// Independent oracle: evaluates the raw min-max recurrence
//   alpha_{k+2,r} = min_{a_s in [0,1]} max{ a_s + a_r/2,
//                                           1 - a_s/2 + a_r/2,
//                                           1 - a_s + alpha_{k,s} }
// with alpha_{1,r} = a_r and alpha_{2,r} = 1/2 + a_r/2, by exact
// piecewise-linear crossing-point analysis. Never consults alpha().
Rational alpha_min_direct(int k, const Rational& a_r);

struct LimitConstants {
    double chi;          // (13 + 3*sqrt(17)) / 4
    double phi;          // (5 - sqrt(17)) / 4, limit of y_k
    double alpha_limit;  // 1 / (1 - phi), limit of x_k
    double c;            // min{sqrt(chi), sqrt(2-phi)} = sqrt(3 + sqrt(17)) / 2
};
LimitConstants limit_constants();

// Closed form of y at even indices: y_{2l} = y_{2l+1} =
// sqrt(17) / (2 (1 - (-chi)^l)) + phi.
double y_even_closed_form(int l);

// gamma(k) = (k-2)/(k(k+2)) for even k, (k-3)/((k-1)(k+1)) for odd k.
Rational gamma_k(int k);
// 3/2 - gamma(k), the length-at-most-k cycle detection exponent, k >= 4.
Rational cycle_leq_exponent(int k);

// Learning-graph exponent for a connected subgraph with k vertices, m edges
// and minimum degree d: 2 - 2/k - max{ (k^2-2(m+1))/(k(k+1)(m+1)),
// (2k-d-3)/(k(d+1)(m-d+2)) }.
Rational lms_exponent(int k, int m, int d);
Rational lms_t_term(int k, int m, int d);

// Strongly connected components of the fixed-k problem web under the
// reduces-to relation, odd-k-only edges included only when k is odd.
// Problems with a cited linear-query algorithm are merged through a virtual
// anchor (the cited results are axioms, not re-derived). Classes come out
// sorted, largest first, each class sorted by tag text.
std::vector<std::vector<std::string>> equivalence_classes(int k);

std::string classes_to_json(int k);

}  // namespace pclab
