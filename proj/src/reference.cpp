#include "fano/reference.hpp"

namespace fano {

namespace {

ReferenceRow row(std::string id, std::vector<LatticePoint> v, int n, std::vector<unsigned> m, int num, int den) {
  return {std::move(id), std::move(v), n, std::move(m), Rational(num, den)};
}

}  // namespace

const ReferenceFamily& reference_thirds_sixths() {
  static const ReferenceFamily f{
      "family:1/3+1/6",
      {
          row("1.1", {{-1, 3}, {1, 3}, {0, -1}}, 2, {0, 1}, 32, 3),
          row("1.2", {{-1, 3}, {1, 3}, {1, 2}, {0, -1}}, 3, {0, 1}, 29, 3),
          row("1.3", {{-1, 3}, {1, 3}, {1, 1}, {0, -1}}, 4, {0, 1}, 26, 3),
          row("1.4", {{-1, 3}, {1, 3}, {1, 0}, {0, -1}}, 5, {0, 1}, 23, 3),
          row("1.5", {{-1, 3}, {1, 3}, {1, 2}, {0, -1}, {-1, 0}}, 6, {0, 1}, 20, 3),
          row("1.6", {{-1, 3}, {1, 3}, {1, 2}, {0, -1}, {-1, -1}}, 7, {0, 1}, 17, 3),
          row("1.7", {{-1, 3}, {1, 3}, {1, 0}, {0, -1}, {-1, 0}}, 8, {0, 1}, 14, 3),
          row("1.8", {{-1, 3}, {1, 3}, {1, 0}, {-1, -1}}, 8, {0, 1}, 14, 3),
          row("1.9", {{-1, 3}, {1, 3}, {1, 0}, {0, -1}, {-1, -1}}, 9, {0, 1}, 11, 3),
          row("1.10", {{-1, 3}, {1, 3}, {1, 2}, {-1, -4}}, 10, {0, 1}, 8, 3),
          row("1.11", {{-1, 3}, {1, 3}, {1, -1}, {-1, -3}}, 11, {0, 1}, 5, 3),
          row("1.12", {{-1, 3}, {1, 3}, {5, -1}, {-5, -1}}, 12, {0, 1}, 2, 3),
          row("1.13", {{-1, 1}, {1, 1}, {5, -1}, {-5, -1}}, 12, {0, 2}, 4, 3),
          row("1.14", {{-1, 3}, {1, 3}, {1, -1}, {-1, -2}}, 9, {1, 1}, 2, 1),
      }};
  return f;
}

const ReferenceFamily& reference_fifths() {
  static const ReferenceFamily f{
      "family:1/5",
      {
          row("2.1", {{-3, 5}, {-2, 5}, {1, -2}}, 2, {1}, 49, 5),
          row("2.2", {{-3, 5}, {-2, 5}, {-1, 3}, {1, -2}}, 3, {1}, 44, 5),
          row("2.3", {{-3, 5}, {-2, 5}, {-1, 3}, {1, -2}, {-2, 3}}, 4, {1}, 39, 5),
          row("2.4", {{-3, 5}, {-2, 5}, {-1, 3}, {1, -2}, {-1, 1}}, 5, {1}, 34, 5),
          row("2.5", {{-3, 5}, {-2, 5}, {0, 1}, {1, -2}, {-1, 1}}, 6, {1}, 29, 5),
          row("2.6", {{-3, 5}, {-2, 5}, {0, 1}, {1, -2}, {0, -1}}, 7, {1}, 24, 5),
          row("2.7", {{-3, 5}, {-2, 5}, {1, -1}, {0, -1}}, 7, {1}, 24, 5),
          row("2.8", {{-3, 5}, {-2, 5}, {1, -1}, {1, -2}, {0, -1}}, 8, {1}, 19, 5),
          row("2.9", {{-3, 5}, {-2, 5}, {1, -1}, {1, -3}}, 9, {1}, 14, 5),
          row("2.10", {{-3, 5}, {-2, 5}, {2, -3}, {2, -5}}, 10, {1}, 9, 5),
          row("2.11", {{-3, 5}, {-2, 5}, {4, -1}, {-3, -1}}, 11, {1}, 4, 5),
          row("2.12", {{-3, 5}, {-2, 5}, {3, -5}, {2, -5}}, 10, {2}, 8, 5),
      }};
  return f;
}

}  // namespace fano
