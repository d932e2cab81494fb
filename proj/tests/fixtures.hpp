#ifndef DSTAR_TESTS_FIXTURES_HPP
#define DSTAR_TESTS_FIXTURES_HPP

#include "dstar/action.hpp"
#include "dstar/stars.hpp"

// The four worked instances the suites keep returning to. Each fixture
// builds the graph, the acting group, and the seed double-star.
namespace fixtures {

struct Instance {
  dstar::GraphAction act;
  dstar::Star s;
  dstar::Star t;
};

// K5 under A5 with S = {(1,5),(1,4),(1,3)}, T = {(5,1),(5,2),(5,3)}.
Instance k5();

// Petersen graph under A5 with the length-i stars walked by x = (13524)
// from sigma = {1,2} and tau = {3,4}.
Instance petersen(int length = 1);

// O4 under A7 with the displayed (2,3)-double-star.
Instance o4();

// K_{n,n} under Sym(n) wr Sym(2) with the (2, n-1)-double-star at
// (iota_1, gamma_2).
Instance knn(int n);

}  // namespace fixtures

#endif
