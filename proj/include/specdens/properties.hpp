#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "specdens/spectrum.hpp"

namespace specdens {

// The seven combination properties, in table column order.
enum class Property { SI, SM, FW, SW, FMP, CF, G };

inline constexpr std::array<Property, 7> kProperties = {
    Property::SI, Property::SM, Property::FW, Property::SW,
    Property::FMP, Property::CF, Property::G};

std::string to_string(Property p);

struct Verdict {
  Tri value = Tri::Unknown;
  // Rule applied for Yes/No; the blocking reason for Unknown.
  std::string rule;
};

class PropertyVector {
 public:
  Verdict& operator[](Property p) { return v_[static_cast<std::size_t>(p)]; }
  const Verdict& operator[](Property p) const { return v_[static_cast<std::size_t>(p)]; }

  Tri value(Property p) const { return (*this)[p].value; }

  // "SI=Yes SM=No ..." in column order.
  std::string summary() const;

 private:
  std::array<Verdict, 7> v_;
};

}  // namespace specdens
