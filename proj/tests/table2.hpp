#pragma once

// Columns of the published journal table (11 journals, table row order) and
// the published tau entries of the accompanying correlation table.

#include <array>
#include <vector>

namespace table2 {

inline const std::vector<double> kScJif{2.25, 2.16, 1.44, 1.32, 1.22, 1.18, 0.95, 0.79, 0.78, 0.75, 0.30};
inline const std::vector<double> kJifZRank{1, 2, 7, 3, 5, 4, 9, 10, 8, 6, 11};
inline const std::vector<double> kCjifZRank{2, 1, 7, 3, 6, 4, 8, 10, 9, 5, 11};
inline const std::vector<double> kPctI3{21.33, 37.50, 4.25, 7.15, 4.44, 7.04, 5.70, 3.07, 1.77, 6.51, 1.22};
inline const std::vector<double> kPctPr6{22.26, 33.95, 3.92, 7.06, 4.79, 6.90, 5.67, 2.78, 2.37, 7.99, 2.32};
inline const std::vector<double> kNPub{275, 329, 48, 97, 64, 94, 82, 52, 37, 118, 44};
inline const std::vector<double> kNCit{619, 712, 69, 128, 78, 111, 78, 41, 29, 89, 13};

inline const std::vector<int> kPctI3Rank{2, 1, 8, 3, 7, 4, 6, 9, 10, 5, 11};
inline const std::vector<int> kPctPr6Rank{2, 1, 8, 4, 7, 5, 6, 9, 10, 3, 11};

/// Published lower triangle, rows/columns in the order
/// SC JIF, JIF_z, cJIF_z, I3, PR6, N Pub, Citations; second member marks "⁺".
struct Entry {
  double tau;
  bool marked;
};
inline const std::vector<std::vector<Entry>> kTable1{
    {},
    {{0.64, true}},
    {{0.60, false}, {0.89, true}},
    {{0.56, false}, {0.78, true}, {0.89, true}},
    {{0.49, false}, {0.71, true}, {0.81, true}, {0.93, true}},
    {{0.42, false}, {0.64, true}, {0.75, true}, {0.86, true}, {0.93, true}},
    {{0.59, false}, {0.81, true}, {0.92, true}, {0.99, true}, {0.92, true}, {0.84, true}},
};

}  // namespace table2
