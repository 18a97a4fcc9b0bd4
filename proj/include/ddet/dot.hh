#pragma once

#include <string>

#include <ddet/des.hh>
#include <ddet/detector.hh>
#include <ddet/observer.hh>

namespace ddet
{
  // Graphviz renderings.  Violating nodes (with respect to the given spec)
  // are drawn as double circles; initial nodes get an incoming arrow.

  std::string des_dot(const Des& des, const Spec& spec = {});
  /// Requires a fully expanded observer.
  std::string observer_dot(const Observer& obs, const Spec& spec = {});
  std::string detector_dot(const Detector& det, const Spec& spec = {});
}
