#include "torfib/datasets.hpp"

namespace torfib {

Dataset non_normal_product() {
  return {
      "non_normal_product",
      BlockedConfiguration::singletons({{2, 0, 1}, {0, 2, 1}}),
      BlockedConfiguration({{0, 2, 0, 1}, {0, 0, 2, 1}, {1, 0, 0, 0}}, {2, 1, 1}),
      BlockedConfiguration({{4, 0, 0, 0, 1}, {0, 4, 0, 0, 1}, {0, 0, 4, 0, 1}, {0, 0, 0, 4, 1}}, {2, 2, 1}),
  };
}

Dataset hierarchical_model() {
  BlockedConfiguration B({{1, 1, 1, 1, 1, 1, 1, 1},
                          {1, 0, 1, 0, 0, 0, 0, 0},
                          {0, 1, 0, 1, 0, 0, 0, 0},
                          {0, 0, 0, 0, 1, 0, 1, 0},
                          {1, 0, 0, 0, 1, 0, 0, 0},
                          {0, 1, 0, 0, 0, 1, 0, 0}},
                         {2, 2, 2, 2});
  return {
      "hierarchical_model",
      BlockedConfiguration::singletons({{1, 1, 1, 1}, {1, 1, 0, 0}, {1, 0, 1, 0}}),
      B,
      B,
  };
}

}  // namespace torfib
