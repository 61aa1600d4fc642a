#pragma once

#include <string>

#include "torfib/config.hpp"

namespace torfib {

// The two worked examples, embedded so that reproduction needs no files.
struct Dataset {
  std::string name;
  BlockedConfiguration A;
  BlockedConfiguration B;
  BlockedConfiguration C;
};

/// Three-column base whose fiber product with these B and C is not normal,
/// though its normalization is the Segre product.
Dataset non_normal_product();

/// Binary hierarchical model: B = C on eight variables over a four-column
/// base with kernel (1,-1,-1,1).
Dataset hierarchical_model();

}  // namespace torfib
