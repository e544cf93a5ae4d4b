#include "bqec/tables.hpp"

namespace bqec::tables {

const std::vector<Rational>& z2z8_rank3_r() {
  static const std::vector<Rational> rs{
      {12, 17},   {47, 18},   {133, 86},  {201, 239}, {299, 589}, {247, 160}, {281, 138},
      {281, 133}, {439, 17},  {569, 159}, {923, 230}, {247, 419}, {200, 99},  {337, 65},
      {1017, 352}, {999, 76}, {412, 697}, {349, 230}, {217, 425}, {440, 217}, {309, 470},
      {496, 319}, {585, 391}, {219, 313}, {336, 191}, {257, 287},
  };
  return rs;
}

const std::vector<HighRankRow>& high_rank_rows() {
  static const std::vector<HighRankRow> rows{
      {1, Rational(257, 134), ""}, {1, Rational(311, 129), ""}, {4, Rational(115, 28), ""},
      {4, Rational(301, 396), ""}, {4, Rational(12, 233), "*"}, {5, Rational(79, 50), "**"},
      {8, Rational(113, 129), "**"},
  };
  return rows;
}

const std::vector<HighRankRow>& rank_window_rows() {
  static const std::vector<HighRankRow> rows{
      {4, Rational(389, 858), "1<=rank<=7"},
      {4, Rational(221, 148), "4<=rank<=6"},
  };
  return rows;
}

std::vector<std::pair<int, double>> default_thresholds(int subfamily) {
  if (subfamily == 4) return {{523, 8.0}, {1979, 10.0}};
  return {{523, 10.0}, {1979, 14.0}};
}

Curve shared_rank5_curve() {
  return Curve::general(Rational(1), Rational(0), Rational(0),
                        Rational::parse("-304241169811532712979315990"),
                        Rational::parse("2065986446448965089594679105215890328100"));
}

}  // namespace bqec::tables
